#pragma once

#include "numsgp/apery.hpp"
#include "numsgp/error.hpp"
#include "numsgp/extensions.hpp"
#include "numsgp/pm.hpp"
#include "numsgp/quotient.hpp"
#include "numsgp/semigroup.hpp"
