#pragma once

#include <compare>
#include <numeric>

#include "bsv/arith.hpp"
#include "bsv/errors.hpp"

namespace bsv {

// Element of Q/Z, kept reduced: 0 <= num < den, gcd(num, den) = 1.
// Zero is 0/1.
struct TorsionFraction {
    long long num = 0;
    long long den = 1;

    TorsionFraction() = default;

    TorsionFraction(long long n, long long d) {
        if (d == 0) throw DomainError("zero_denominator", "fraction with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        n = floormod(n, d);
        long long g = std::gcd(n, d);
        num = n / g;
        den = d / g;
    }

    bool is_zero() const { return num == 0; }

    // Order in Q/Z.
    long long order() const { return den; }

    TorsionFraction operator+(const TorsionFraction& o) const {
        __int128 n = static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den;
        __int128 d = static_cast<__int128>(den) * o.den;
        n %= d;
        __int128 g = std::gcd(static_cast<long long>(n), static_cast<long long>(d));
        return TorsionFraction(static_cast<long long>(n / g), static_cast<long long>(d / g));
    }

    TorsionFraction operator-() const { return TorsionFraction(-num, den); }

    // r * (num/den) in Q/Z.
    TorsionFraction scaled(long long r) const {
        long long rm = floormod(r, den);
        __int128 n = static_cast<__int128>(rm) * num % den;
        long long g = std::gcd(static_cast<long long>(n), den);
        return TorsionFraction(static_cast<long long>(n) / g, den / g);
    }

    friend bool operator==(const TorsionFraction&, const TorsionFraction&) = default;
    friend auto operator<=>(const TorsionFraction&, const TorsionFraction&) = default;
};

}  // namespace bsv
