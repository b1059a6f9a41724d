#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bsv/brauer.hpp"

namespace bsv {

// Nonzero rational, reduced, den > 0.
struct Rational {
    long long num = 1;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    friend bool operator==(const Rational&, const Rational&) = default;
};

Rational parse_rational(const std::string& s);  // "p" or "p/q"

// Hilbert symbol (a,b)_v over the completion of Q at v: +1 iff
// z^2 = a x^2 + b y^2 has a nonzero solution there.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

// Quaternion algebra (a,b): invariant 1/2 at exactly the ramified places.
GlobalBrauerClass quaternion_class(const Rational& a, const Rational& b);

// Build a global class from explicit invariants, enforcing reciprocity and
// the real-place constraint.
GlobalBrauerClass class_from_invariants(const std::vector<std::pair<Place, TorsionFraction>>& entries);

}  // namespace bsv
