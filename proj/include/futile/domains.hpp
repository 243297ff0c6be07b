#pragma once

#include "futile/arith.hpp"
#include "futile/rational_function.hpp"

// Field domains the templated modules are instantiated for.
#define FUTILE_FOR_EACH_FIELD(X) \
  X(::futile::RationalField)     \
  X(::futile::PrimeField)        \
  X(::futile::FunctionField)
