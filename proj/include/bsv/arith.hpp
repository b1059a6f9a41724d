#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace bsv {

using BigInt = boost::multiprecision::cpp_int;

// Floor division / mod, also for negative a (b > 0).
inline long long floordiv(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline long long floormod(long long a, long long b) { return a - floordiv(a, b) * b; }

inline bool is_prime(long long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::pair<long long, int>> factorize(long long n) {
    std::vector<std::pair<long long, int>> f;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            f.emplace_back(d, e);
        }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

inline std::set<long long> prime_support(long long n) {
    std::set<long long> s;
    for (auto [p, e] : factorize(n)) s.insert(p);
    return s;
}

inline int valuation(long long n, long long p) {
    int v = 0;
    while (n != 0 && n % p == 0) { n /= p; ++v; }
    return v;
}

inline BigInt big_binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

// v_p(C(n,k)) = number of carries when adding k and n-k in base p (Kummer).
inline int binomial_valuation(long long n, long long k, long long p) {
    long long a = k, b = n - k;
    int carries = 0;
    long long carry = 0;
    while (a > 0 || b > 0 || carry > 0) {
        long long s = a % p + b % p + carry;
        carry = (s >= p) ? 1 : 0;
        carries += static_cast<int>(carry);
        a /= p;
        b /= p;
    }
    return carries;
}

// gcd(C(i,j), i) without forming the binomial; C(i,j) = 0 for j > i, and gcd(0, i) = i.
inline long long gcd_binomial_index(long long i, long long j) {
    if (j < 0 || j > i) return i;
    long long g = 1;
    for (auto [p, e] : factorize(i)) {
        int m = std::min(e, binomial_valuation(i, j, p));
        while (m-- > 0) g *= p;
    }
    return g;
}

inline long long modpow(long long base, long long exp, long long mod) {
    unsigned long long b = static_cast<unsigned long long>(floormod(base, mod));
    unsigned long long r = 1 % static_cast<unsigned long long>(mod);
    while (exp > 0) {
        if (exp & 1) r = (r * b) % static_cast<unsigned long long>(mod);
        b = (b * b) % static_cast<unsigned long long>(mod);
        exp >>= 1;
    }
    return static_cast<long long>(r);
}

// Inverse of a mod m, gcd(a, m) = 1.
inline long long modinv(long long a, long long m) {
    long long t = 0, nt = 1, r = m, nr = floormod(a, m);
    while (nr != 0) {
        long long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return floormod(t, m);
}

}  // namespace bsv
