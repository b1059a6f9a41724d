#include "bsv/weights.hpp"

#include <algorithm>

#include "bsv/errors.hpp"

namespace bsv {

bool weakly_decreasing(const Weight& w) {
    for (size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] < w[i]) return false;
    return true;
}

BigInt weyl_dim(const Weight& w, int m) {
    if (static_cast<int>(w.size()) != m)
        throw DomainError("bad_weight", "weight length does not match the rank",
                          {{"length", std::to_string(w.size())}, {"rank", std::to_string(m)}});
    if (!weakly_decreasing(w))
        throw DomainError("bad_weight", "weight must be weakly decreasing");
    BigInt num = 1, den = 1;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            num *= w[i] - w[j] + (j - i);
            den *= j - i;
        }
    BigInt q = num / den;
    if (q * den != num) throw std::logic_error("weyl dimension division not exact");
    return q;
}

std::vector<Weight> pieri_fold(const Weight& beta, int i) {
    int m = static_cast<int>(beta.size());
    if (i < 0 || i > m)
        throw DomainError("bad_strip", "exterior power exceeds the rank",
                          {{"i", std::to_string(i)}, {"rank", std::to_string(m)}});
    if (!weakly_decreasing(beta)) throw DomainError("bad_weight", "weight must be weakly decreasing");
    std::vector<Weight> out;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        if (__builtin_popcount(mask) != i) continue;
        Weight cand = beta;
        for (int b = 0; b < m; ++b)
            if (mask & (1u << b)) ++cand[b];
        if (weakly_decreasing(cand)) out.push_back(std::move(cand));
    }
    std::sort(out.begin(), out.end(), std::greater<Weight>());
    return out;
}

}  // namespace bsv
