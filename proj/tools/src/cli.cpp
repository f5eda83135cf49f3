#include "numsgp/cli.hpp"

#include <charconv>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "numsgp/numsgp.hpp"

namespace numsgp::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Value> parse_list(const std::string& text, std::string_view flag) {
  std::vector<Value> out;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    Value v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw UsageError("invalid integer '" + std::string(item) + "' in " + std::string(flag));
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

// A semigroup given either by generators or by gaps, never both.
struct SemigroupInput {
  std::optional<std::string> gens;
  std::optional<std::string> gaps;

  void attach(CLI::App& app, const std::string& prefix, const std::string& role) {
    app.add_option("--" + prefix + "gens", gens, "Generators of the " + role + ", e.g. 4,5,7");
    app.add_option("--" + prefix + "gaps", gaps, "Gaps of the " + role + ", e.g. 1,2,3,6");
    flag_prefix = prefix;
  }

  NumericalSemigroup resolve() const {
    if (gens.has_value() == gaps.has_value()) {
      throw UsageError("give exactly one of --" + flag_prefix + "gens or --" + flag_prefix +
                       "gaps");
    }
    if (gens) {
      const auto list = parse_list(*gens, "--" + flag_prefix + "gens");
      return from_generators(list);
    }
    const auto list = parse_list(*gaps, "--" + flag_prefix + "gaps");
    return from_gaps(list);
  }

  std::string flag_prefix;
};

std::string join(std::span<const Value> values) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  os << ']';
  return os.str();
}

Json semigroup_json(const NumericalSemigroup& s) {
  Json j;
  j["gens"] = s.min_generators();
  j["gaps"] = s.gaps();
  j["frobenius"] = s.frobenius();
  j["genus"] = s.genus();
  j["multiplicity"] = s.multiplicity();
  return j;
}

std::string semigroup_line(const NumericalSemigroup& s) {
  std::ostringstream os;
  os << "gens=" << join(s.min_generators()) << " multiplicity=" << s.multiplicity()
     << " frobenius=" << s.frobenius() << " genus=" << s.genus() << " gaps=" << join(s.gaps());
  return os.str();
}

void print_semigroup(std::ostream& out, const NumericalSemigroup& s) {
  out << "gens: " << join(s.min_generators()) << '\n'
      << "multiplicity: " << s.multiplicity() << '\n'
      << "frobenius: " << s.frobenius() << '\n'
      << "genus: " << s.genus() << '\n'
      << "gaps: " << join(s.gaps()) << '\n';
}

void print_set(std::ostream& out, bool json, const ExtensionSet& set) {
  if (json) {
    Json arr = Json::array();
    for (const auto& s : set.members()) arr.push_back(semigroup_json(s));
    out << arr.dump() << '\n';
    return;
  }
  out << "count: " << set.size() << '\n';
  for (const auto& s : set.members()) out << semigroup_line(s) << '\n';
}

void print_semigroup_result(std::ostream& out, bool json, const NumericalSemigroup& s) {
  if (json) {
    out << semigroup_json(s).dump() << '\n';
  } else {
    print_semigroup(out, s);
  }
}

const char* kDescription =
    "Exact computations with numerical semigroups: Apery sets, quotients, Kunz "
    "coordinates, arithmetic extensions and proportionally modular semigroups.";

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{kDescription, "numsgp"};
  app.require_subcommand(1);
  app.fallthrough(false);

  bool json = false;
  Value max_genus = kDefaultGenusLimit;
  Value n = 0;
  Value d = 0;
  Value a = 0;
  Value b = 0;
  Value c = 0;
  Value search_max = 30;
  std::string divisors;
  SemigroupInput primary;
  SemigroupInput other;

  std::map<std::string, std::function<void()>> handlers;

  auto command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_flag("--json", json, "Emit one JSON document");
    return sub;
  };
  auto with_semigroup = [&](CLI::App* sub) {
    primary.attach(*sub, "", "semigroup");
    return sub;
  };

  auto* info = with_semigroup(command("info", "Multiplicity, Frobenius number, genus, gaps, generators"));
  handlers["info"] = [&] { print_semigroup_result(out, json, primary.resolve()); };
  (void)info;

  auto* apery_cmd = with_semigroup(command("apery", "Apery set with respect to n"));
  apery_cmd->add_option("--n", n, "Nonzero member of the semigroup")->required();
  handlers["apery"] = [&] {
    const auto ap = apery(primary.resolve(), n);
    const std::vector<Value> omegas(ap.omegas().begin(), ap.omegas().end());
    const auto f = frobenius_from_apery(ap);
    const auto g = genus_from_apery(ap);
    if (json) {
      Json j;
      j["n"] = n;
      j["apery"] = omegas;
      j["frobenius"] = f;
      j["genus"] = g;
      out << j.dump() << '\n';
    } else {
      out << "n: " << n << '\n'
          << "apery: " << join(omegas) << '\n'
          << "frobenius: " << f << '\n'
          << "genus: " << g << '\n';
    }
  };

  auto* quotient_cmd = with_semigroup(command("quotient", "Quotient {x : d x in S}"));
  quotient_cmd->add_option("--d", d, "Positive divisor")->required();
  handlers["quotient"] = [&] { print_semigroup_result(out, json, quotient(primary.resolve(), d)); };

  auto* kunz_cmd = with_semigroup(command("kunz", "Kunz coordinates with respect to n"));
  kunz_cmd->add_option("--n", n, "Nonzero member of the semigroup")->required();
  handlers["kunz"] = [&] {
    const auto v = kunz(primary.resolve(), n);
    const std::vector<Value> kappas(v.kappas().begin(), v.kappas().end());
    if (json) {
      Json j;
      j["n"] = n;
      j["kunz"] = kappas;
      out << j.dump() << '\n';
    } else {
      out << "n: " << n << '\n' << "kunz: " << join(kappas) << '\n';
    }
  };

  auto* intersect_cmd = with_semigroup(command("intersect", "Intersection of two semigroups"));
  other.attach(*intersect_cmd, "other-", "second semigroup");
  handlers["intersect"] = [&] {
    print_semigroup_result(out, json, intersect(primary.resolve(), other.resolve()));
  };

  auto* ext_cmd = with_semigroup(command("extensions", "All arithmetic extensions"));
  ext_cmd->add_option("--max-genus", max_genus, "Refuse inputs of larger genus")
      ->capture_default_str();
  handlers["extensions"] = [&] {
    print_set(out, json, arithmetic_extensions(primary.resolve(), max_genus));
  };

  auto* over_cmd = with_semigroup(command("oversemigroups", "All numerical semigroups containing S"));
  over_cmd->add_option("--max-genus", max_genus, "Refuse inputs of larger genus")
      ->capture_default_str();
  handlers["oversemigroups"] = [&] {
    print_set(out, json, enumerate_oversemigroups(primary.resolve(), max_genus));
  };

  auto* arith_cmd = with_semigroup(command("is-arithmetic", "Whether the other semigroup is an arithmetic extension of S"));
  other.attach(*arith_cmd, "other-", "candidate extension");
  handlers["is-arithmetic"] = [&] {
    const bool result = is_arithmetic_extension(primary.resolve(), other.resolve());
    if (json) {
      out << Json{{"arithmetic", result}}.dump() << '\n';
    } else {
      out << "arithmetic: " << (result ? "true" : "false") << '\n';
    }
  };

  auto* thm_cmd = with_semigroup(command("classify-thm9", "Whether every extension of S is arithmetic"));
  (void)thm_cmd;
  handlers["classify-thm9"] = [&] {
    const bool result = has_only_arithmetic_extensions(primary.resolve());
    if (json) {
      out << Json{{"all_extensions_arithmetic", result}}.dump() << '\n';
    } else {
      out << "all_extensions_arithmetic: " << (result ? "true" : "false") << '\n';
    }
  };

  auto* pm_cmd = command("pm", "Frobenius number and genus of <a, a+1>/b");
  pm_cmd->add_option("--a", a, "a >= 2")->required();
  pm_cmd->add_option("--b", b, "b >= 1")->required();
  handlers["pm"] = [&] {
    const auto f = pm_frobenius(a, b);
    const auto g = pm_genus(a, b);
    const auto s = pm_quotient(a, b);
    if (json) {
      Json j;
      j["a"] = a;
      j["b"] = b;
      j["frobenius"] = f;
      j["genus"] = g;
      j["semigroup"] = semigroup_json(s);
      out << j.dump() << '\n';
    } else {
      out << "a: " << a << '\n'
          << "b: " << b << '\n'
          << "frobenius: " << f << '\n'
          << "genus: " << g << '\n'
          << "semigroup: " << semigroup_line(s) << '\n';
    }
  };

  auto* ineq_cmd = command("pm-ineq", "Solutions of a x mod b <= c x");
  ineq_cmd->add_option("--a", a, "a >= 1")->required();
  ineq_cmd->add_option("--b", b, "b >= 1")->required();
  ineq_cmd->add_option("--c", c, "c >= 1")->required();
  ineq_cmd->add_option("--search-max", search_max,
                       "Bound for the search of an equal quotient <p, p+1>/q")
      ->capture_default_str();
  handlers["pm-ineq"] = [&] {
    const PmInequality ineq(a, b, c);
    const auto s = pm_semigroup(ineq);
    const auto form = pm_to_quotient_search(ineq, search_max, search_max);
    if (json) {
      Json j = semigroup_json(s);
      j["quotient_form"] = form ? Json{form->first, form->second} : Json(nullptr);
      out << j.dump() << '\n';
    } else {
      print_semigroup(out, s);
      if (form) {
        out << "quotient_form: <" << form->first << "," << form->first + 1 << ">/" << form->second
            << '\n';
      } else {
        out << "quotient_form: none within " << search_max << '\n';
      }
    }
  };

  auto* t_cmd = command("t-semigroup", "Intersection of <a, a+1>/d over a divisor list");
  t_cmd->add_option("--a", a, "a >= 2")->required();
  t_cmd->add_option("--divisors", divisors, "Divisors, e.g. 2,3")->required();
  handlers["t-semigroup"] = [&] {
    const auto ds = parse_list(divisors, "--divisors");
    const auto t = t_semigroup(TSemigroupSpec(a, ds));
    const std::vector<Value> omegas(t.apery.omegas().begin(), t.apery.omegas().end());
    if (json) {
      Json j;
      j["a"] = a;
      j["divisors"] = ds;
      j["apery"] = omegas;
      j["frobenius"] = t.frobenius;
      j["genus"] = t.genus;
      j["semigroup"] = semigroup_json(t.semigroup);
      out << j.dump() << '\n';
    } else {
      out << "a: " << a << '\n'
          << "divisors: " << join(ds) << '\n'
          << "apery: " << join(omegas) << '\n'
          << "frobenius: " << t.frobenius << '\n'
          << "genus: " << t.genus << '\n'
          << "semigroup: " << semigroup_line(t.semigroup) << '\n';
    }
  };

  std::vector<std::string> argv_storage{"numsgp"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  auto usage = [&](const std::string& message) {
    err << "usage error: " << message << '\n'
        << "valid subcommands:";
    for (const auto& [name, _] : handlers) err << ' ' << name;
    err << '\n';
    return kUsageError;
  };

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    return usage(e.what());
  }

  try {
    for (const auto* sub : app.get_subcommands()) handlers.at(sub->get_name())();
  } catch (const UsageError& e) {
    return usage(e.what());
  } catch (const SemigroupError& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace numsgp::cli
