#pragma once

#include <compare>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "bsv/errors.hpp"
#include "bsv/torsion.hpp"

namespace bsv {

// A place of the rationals: a finite prime or the real place.
struct Place {
    long long prime = 0;
    bool infinite = false;

    static Place finite(long long p);
    static Place real() { return Place{0, true}; }

    friend bool operator==(const Place&, const Place&) = default;
    friend auto operator<=>(const Place& a, const Place& b) {
        // finite places ascending by prime, the real place last
        if (a.infinite != b.infinite) return a.infinite <=> b.infinite;
        return a.prime <=> b.prime;
    }
};

// Brauer class over Q given by its local invariants; zero entries omitted.
// Invariants: sum of entries vanishes in Q/Z, entry at the real place is 0 or 1/2.
struct GlobalBrauerClass {
    std::map<Place, TorsionFraction> invariants;

    bool is_trivial() const { return invariants.empty(); }
    friend bool operator==(const GlobalBrauerClass&, const GlobalBrauerClass&) = default;
};

// Brauer class over an unspecified field, described by period and the
// index sequence of its tensor powers (d_0, ..., d_p). Construct through
// make_abstract_class so the sequence is vetted.
struct AbstractBrauerClass {
    long long period = 1;
    std::vector<long long> index_sequence{1, 1};

    friend bool operator==(const AbstractBrauerClass&, const AbstractBrauerClass&) = default;
};

struct BrauerClass {
    std::variant<GlobalBrauerClass, AbstractBrauerClass> value;

    BrauerClass() : value(GlobalBrauerClass{}) {}
    explicit BrauerClass(GlobalBrauerClass g) : value(std::move(g)) {}
    explicit BrauerClass(AbstractBrauerClass a) : value(std::move(a)) {}

    static BrauerClass trivial() { return BrauerClass(GlobalBrauerClass{}); }

    bool is_global() const { return std::holds_alternative<GlobalBrauerClass>(value); }
    bool is_abstract() const { return std::holds_alternative<AbstractBrauerClass>(value); }
    const GlobalBrauerClass& global() const { return std::get<GlobalBrauerClass>(value); }
    const AbstractBrauerClass& abstract() const { return std::get<AbstractBrauerClass>(value); }

    friend bool operator==(const BrauerClass&, const BrauerClass&) = default;
};

struct SequenceViolation {
    std::string constraint;  // "length", "positivity", "a", "b", "c", "d", "e"
    long long j = -1;
    long long k = -1;
    std::string detail;
};

struct ValidationReport {
    std::vector<SequenceViolation> violations;
    bool ok() const { return violations.empty(); }
    bool violated(const std::string& c) const {
        for (const auto& v : violations)
            if (v.constraint == c) return true;
        return false;
    }
};

// Group operations.  tensor/same_cyclic_subgroup require global classes;
// everything else works on both variants.
BrauerClass tensor(const BrauerClass& c1, const BrauerClass& c2);
BrauerClass opposite(const BrauerClass& c);
BrauerClass power(const BrauerClass& c, long long r);
long long period(const BrauerClass& c);
long long index(const BrauerClass& c, long long r = 1);
long long period_of_power(const BrauerClass& c, long long r);
bool same_cyclic_subgroup(const BrauerClass& c1, const BrauerClass& c2);

// Checks a candidate index sequence (d_0, ..., d_p) against the divisibility
// constraints an actual algebra would satisfy.  Reports every violation,
// never throws.
ValidationReport validate_index_sequence(long long p, const std::vector<long long>& seq);

// Validating constructor for abstract classes.
BrauerClass make_abstract_class(long long p, const std::vector<long long>& seq);

}  // namespace bsv
