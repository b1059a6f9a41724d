#include "bsv/astype.hpp"

#include <numeric>
#include <stdexcept>

#include "bsv/arith.hpp"

namespace bsv {

long long ASType::at(long long j) const {
    return entries[floormod(j, period())];
}

ASType compute_as_type(const BrauerClass& c, long long d) {
    if (d < 1) throw DomainError("bad_twist_degree", "d must be positive");
    if (c.is_abstract() && d != 1)
        throw DomainError("abstract_with_d",
                          "abstract classes carry no index data for d > 1",
                          {{"d", std::to_string(d)}});
    long long r = period_of_power(c, d);
    ASType t;
    for (long long j = 0; j <= r; ++j) t.entries.push_back(index(c, j * d));
    // sanity: boundary ranks 1, palindrome
    if (t.entries.front() != 1 || t.entries.back() != 1)
        throw std::logic_error("AS-type boundary entries are not 1");
    for (long long j = 0; j <= r; ++j)
        if (t.entries[j] != t.entries[r - j]) throw std::logic_error("AS-type is not a palindrome");
    return t;
}

ASType as_type_period_equals_index(long long p) {
    if (p < 1) throw DomainError("bad_period", "period must be positive");
    ASType t;
    for (long long j = 0; j <= p; ++j) t.entries.push_back(p / std::gcd(p, j == 0 ? p : j));
    return t;
}

bool same_as_type(const BrauerClass& c1, const BrauerClass& c2, long long d) {
    return compute_as_type(c1, d) == compute_as_type(c2, d);
}

}  // namespace bsv
