#pragma once

#include "flatdelta/exact_linalg.hpp"

namespace flatdelta {

/// LLL-reduces the standard basis of Z^n under the positive definite
/// quadratic form `gram` (delta = 3/4, exact rational arithmetic).
/// Returns a unimodular matrix whose rows are the reduced vectors.
IntMatrix lll_reduce_gram(const IntMatrix& gram);

}  // namespace flatdelta
