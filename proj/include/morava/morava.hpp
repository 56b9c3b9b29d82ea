#pragma once

#include "morava/errors.hpp"
#include "morava/galois_int.hpp"
#include "morava/series.hpp"
#include "morava/matrix.hpp"
#include "morava/formulas.hpp"
#include "morava/quotient_algebra.hpp"
#include "morava/power_ops.hpp"
#include "morava/expr.hpp"
#include "morava/format.hpp"
#include "morava/verify.hpp"
