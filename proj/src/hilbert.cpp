#include "bsv/hilbert.hpp"

#include <cstdlib>
#include <numeric>
#include <set>

#include "bsv/arith.hpp"

namespace bsv {

Rational::Rational(long long n, long long d) {
    if (d == 0) throw DomainError("zero_denominator", "rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

Rational parse_rational(const std::string& s) {
    auto bad = [&] { return DomainError("bad_rational", "cannot parse rational '" + s + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    try {
        size_t used = 0;
        long long n = std::stoll(s.substr(0, slash), &used);
        if (used != (slash == std::string::npos ? s.size() : slash)) throw bad();
        long long d = 1;
        if (slash != std::string::npos) {
            d = std::stoll(s.substr(slash + 1), &used);
            if (used != s.size() - slash - 1) throw bad();
        }
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw bad();
    } catch (const std::out_of_range&) {
        throw bad();
    }
}

namespace {

int rational_valuation(const Rational& a, long long p) {
    long long n = a.num < 0 ? -a.num : a.num;
    return valuation(n, p) - valuation(a.den, p);
}

// The unit part a / p^v(a) reduced modulo `modulus` (a power of p).
long long unit_part_mod(const Rational& a, long long p, long long modulus) {
    long long n = a.num, d = a.den;
    while (n % p == 0) n /= p;
    while (d % p == 0) d /= p;
    long long nm = floormod(n, modulus);
    long long dm = floormod(d, modulus);
    return nm * modinv(dm, modulus) % modulus;
}

int legendre(long long u, long long p) {
    long long t = modpow(u, (p - 1) / 2, p);
    return t == 1 ? 1 : -1;
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    if (a.num == 0 || b.num == 0)
        throw DomainError("zero_argument", "hilbert symbol needs nonzero arguments");
    if (v.infinite) return (a.num < 0 && b.num < 0) ? -1 : 1;

    long long p = v.prime;
    if (p == 2) {
        int alpha = rational_valuation(a, 2), beta = rational_valuation(b, 2);
        long long u = unit_part_mod(a, 2, 8), w = unit_part_mod(b, 2, 8);
        int eps_u = (u % 4 == 3), eps_w = (w % 4 == 3);
        int omg_u = (u == 3 || u == 5), omg_w = (w == 3 || w == 5);
        int e = eps_u * eps_w + alpha * omg_w + beta * omg_u;
        return (e % 2 == 0) ? 1 : -1;
    }

    int alpha = rational_valuation(a, p), beta = rational_valuation(b, p);
    long long u = unit_part_mod(a, p, p), w = unit_part_mod(b, p, p);
    int s = 1;
    if ((alpha & 1) && (beta & 1) && ((p - 1) / 2) % 2 == 1) s = -s;
    if (beta & 1) s *= legendre(u, p);
    if (alpha & 1) s *= legendre(w, p);
    return s;
}

GlobalBrauerClass quaternion_class(const Rational& a, const Rational& b) {
    std::set<long long> primes{2};
    for (long long v : {a.num < 0 ? -a.num : a.num, a.den, b.num < 0 ? -b.num : b.num, b.den})
        for (long long q : prime_support(v)) primes.insert(q);

    std::vector<Place> ramified;
    for (long long q : primes)
        if (hilbert_symbol(a, b, Place::finite(q)) == -1) ramified.push_back(Place::finite(q));
    if (hilbert_symbol(a, b, Place::real()) == -1) ramified.push_back(Place::real());

    // the product formula forces an even number of ramified places
    if (ramified.size() % 2 != 0)
        throw DomainError("reciprocity_violation",
                          "odd number of ramified places for a quaternion symbol",
                          {{"count", std::to_string(ramified.size())}});

    GlobalBrauerClass out;
    for (const Place& pl : ramified) out.invariants.emplace(pl, TorsionFraction(1, 2));
    return out;
}

GlobalBrauerClass class_from_invariants(const std::vector<std::pair<Place, TorsionFraction>>& entries) {
    GlobalBrauerClass out;
    TorsionFraction sum;
    std::set<Place> seen;
    for (const auto& [place, inv] : entries) {
        if (!place.infinite) Place::finite(place.prime);  // primality check
        if (place.infinite && !(inv.is_zero() || inv == TorsionFraction(1, 2)))
            throw DomainError("bad_infinite_place", "invariant at the real place must be 0 or 1/2",
                              {{"num", std::to_string(inv.num)}, {"den", std::to_string(inv.den)}});
        if (!seen.insert(place).second)
            throw DomainError("duplicate_place", "place listed twice",
                              {{"place", place.infinite ? "inf" : std::to_string(place.prime)}});
        sum = sum + inv;
        if (!inv.is_zero()) out.invariants.emplace(place, inv);
    }
    if (!sum.is_zero())
        throw DomainError("reciprocity_violation", "local invariants do not sum to zero",
                          {{"sum_num", std::to_string(sum.num)}, {"sum_den", std::to_string(sum.den)}});
    return out;
}

}  // namespace bsv
