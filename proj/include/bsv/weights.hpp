#pragma once

#include <vector>

#include "bsv/arith.hpp"

namespace bsv {

// Weakly decreasing integer vector (a dominant GL weight; entries may be
// negative).
using Weight = std::vector<long long>;

bool weakly_decreasing(const Weight& w);

// Dimension of the irreducible GL(m) representation of highest weight w,
// by the product formula; the division is exact.
BigInt weyl_dim(const Weight& w, int m);

// Tensor with the i-th exterior power of the standard representation:
// all weights obtained from beta by adding 1 to exactly i entries so the
// result stays weakly decreasing (vertical strips), each with multiplicity
// one.  Output in decreasing lexicographic order.
std::vector<Weight> pieri_fold(const Weight& beta, int i);

}  // namespace bsv
