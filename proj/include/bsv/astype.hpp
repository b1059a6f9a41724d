#pragma once

#include <vector>

#include "bsv/brauer.hpp"

namespace bsv {

// Rank profile (d_0, ..., d_p) of the indecomposable atoms; d_0 = d_p = 1
// and the tuple is a palindrome.
struct ASType {
    std::vector<long long> entries;

    long long period() const { return static_cast<long long>(entries.size()) - 1; }
    long long at(long long j) const;  // periodic lookup, any integer j

    friend bool operator==(const ASType&, const ASType&) = default;
};

// AS-type of the (generalized, when d > 1) variety attached to c.
ASType compute_as_type(const BrauerClass& c, long long d = 1);

// The explicit profile d_j = p/(p,j) valid whenever period equals index.
ASType as_type_period_equals_index(long long p);

bool same_as_type(const BrauerClass& c1, const BrauerClass& c2, long long d = 1);

}  // namespace bsv
