#include "bsv/brauer.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bsv/arith.hpp"

namespace bsv {

Place Place::finite(long long p) {
    if (!is_prime(p))
        throw DomainError("not_prime", "finite place must be a prime", {{"value", std::to_string(p)}});
    return Place{p, false};
}

static void prune_zeros(GlobalBrauerClass& g) {
    for (auto it = g.invariants.begin(); it != g.invariants.end();)
        it = it->second.is_zero() ? g.invariants.erase(it) : std::next(it);
}

BrauerClass tensor(const BrauerClass& c1, const BrauerClass& c2) {
    if (!c1.is_global() || !c2.is_global())
        throw DomainError("mixed_variant", "tensor requires two global classes");
    GlobalBrauerClass out = c1.global();
    for (const auto& [place, inv] : c2.global().invariants) {
        auto it = out.invariants.find(place);
        if (it == out.invariants.end())
            out.invariants.emplace(place, inv);
        else
            it->second = it->second + inv;
    }
    prune_zeros(out);
    return BrauerClass(std::move(out));
}

BrauerClass opposite(const BrauerClass& c) {
    if (c.is_global()) {
        GlobalBrauerClass out = c.global();
        for (auto& [place, inv] : out.invariants) inv = -inv;
        return BrauerClass(std::move(out));
    }
    // reversal of the index sequence; a palindrome, so this is the identity
    AbstractBrauerClass out = c.abstract();
    std::reverse(out.index_sequence.begin(), out.index_sequence.end());
    return BrauerClass(std::move(out));
}

BrauerClass power(const BrauerClass& c, long long r) {
    if (c.is_global()) {
        GlobalBrauerClass out = c.global();
        for (auto& [place, inv] : out.invariants) inv = inv.scaled(r);
        prune_zeros(out);
        return BrauerClass(std::move(out));
    }
    const auto& a = c.abstract();
    long long p = a.period;
    long long rm = floormod(r, p);
    long long p2 = p / std::gcd(p, rm);
    AbstractBrauerClass out;
    out.period = p2;
    out.index_sequence.clear();
    for (long long m = 0; m <= p2; ++m)
        out.index_sequence.push_back(a.index_sequence[floormod(rm * m, p)]);
    return BrauerClass(std::move(out));
}

long long period(const BrauerClass& c) {
    if (c.is_abstract()) return c.abstract().period;
    long long l = 1;
    for (const auto& [place, inv] : c.global().invariants) l = std::lcm(l, inv.order());
    return l;
}

long long index(const BrauerClass& c, long long r) {
    if (c.is_abstract()) {
        const auto& a = c.abstract();
        return a.index_sequence[floormod(r, a.period)];
    }
    // over Q the index of a class is the lcm of its local indices,
    // i.e. of the denominators of the scaled invariants
    long long l = 1;
    for (const auto& [place, inv] : c.global().invariants) l = std::lcm(l, inv.scaled(r).order());
    return l;
}

long long period_of_power(const BrauerClass& c, long long r) {
    long long p = period(c);
    return p / std::gcd(p, floormod(r, p));
}

bool same_cyclic_subgroup(const BrauerClass& c1, const BrauerClass& c2) {
    if (c1.is_abstract() && c2.is_abstract())
        throw DomainError("abstract_unsupported", "cyclic-subgroup test needs global classes");
    if (!c1.is_global() || !c2.is_global())
        throw DomainError("mixed_variant", "cyclic-subgroup test needs global classes");
    long long bound = std::lcm(period(c1), period(c2));
    bool c1_in = false, c2_in = false;
    for (long long l = 0; l < bound && !(c1_in && c2_in); ++l) {
        if (!c1_in && power(c2, l) == c1) c1_in = true;
        if (!c2_in && power(c1, l) == c2) c2_in = true;
    }
    return c1_in && c2_in;
}

namespace {

void add_violation(ValidationReport& rep, std::string constraint, long long j, long long k,
                   std::string detail) {
    rep.violations.push_back({std::move(constraint), j, k, std::move(detail)});
}

std::string fmt(long long v) { return std::to_string(v); }

}  // namespace

ValidationReport validate_index_sequence(long long p, const std::vector<long long>& seq) {
    ValidationReport rep;
    if (p < 1) {
        add_violation(rep, "length", -1, -1, "period must be positive, got " + fmt(p));
        return rep;
    }
    if (static_cast<long long>(seq.size()) != p + 1) {
        add_violation(rep, "length", -1, -1,
                      "sequence must have period+1 = " + fmt(p + 1) + " entries, got " +
                          fmt(static_cast<long long>(seq.size())));
        return rep;
    }
    for (long long j = 0; j <= p; ++j)
        if (seq[j] < 1) {
            add_violation(rep, "positivity", j, -1, "entry " + fmt(j) + " is " + fmt(seq[j]));
            return rep;
        }

    // (a) boundary entries are 1
    if (seq[0] != 1) add_violation(rep, "a", 0, -1, "entry 0 must be 1, got " + fmt(seq[0]));
    if (seq[p] != 1) add_violation(rep, "a", p, -1, "entry " + fmt(p) + " must be 1, got " + fmt(seq[p]));

    // (b) palindrome: index is invariant under taking the opposite algebra
    for (long long j = 0; 2 * j <= p; ++j)
        if (seq[j] != seq[p - j])
            add_violation(rep, "b", j, p - j,
                          "entries " + fmt(j) + " and " + fmt(p - j) + " differ: " + fmt(seq[j]) +
                              " vs " + fmt(seq[p - j]));

    // (c) the period of the j-th power, p/(p,j), divides d_j and shares its prime factors
    for (long long j = 0; j <= p; ++j) {
        long long q = p / std::gcd(p, j == 0 ? p : j);
        if (seq[j] % q != 0)
            add_violation(rep, "c", j, -1,
                          fmt(q) + " (period of the power) does not divide entry " + fmt(seq[j]));
        else if (prime_support(q) != prime_support(seq[j]))
            add_violation(rep, "c", j, -1,
                          "entry " + fmt(seq[j]) + " and period-of-power " + fmt(q) +
                              " have different prime factors");
    }

    // (d) tensor subadditivity: d_{j+k} | d_j * d_k
    for (long long j = 0; j < p; ++j)
        for (long long k = j; k < p; ++k) {
            long long t = floormod(j + k, p);
            if ((seq[j] * seq[k]) % seq[t] != 0)
                add_violation(rep, "d", j, k,
                              "entry " + fmt(t) + " = " + fmt(seq[t]) + " does not divide " +
                                  fmt(seq[j]) + "*" + fmt(seq[k]));
        }

    // (e) divisibility against the first index i = d_1: d_j | gcd(C(i,j), i),
    // d_j | i/(i,j), and d_j = i when (j,i) = 1.  The pair (j mod p, gcd(i,j))
    // repeats with period lcm(p,i), so that range is exhaustive; for j > i the
    // binomial vanishes and gcd(0,i) = i.
    long long i = seq[1];
    long long span = std::lcm(p, i);
    const long long desk_cap = 2'000'000;  // beyond desk scale, check a prefix
    if (span > desk_cap) span = std::max(p, std::min(i, desk_cap));
    std::set<std::pair<int, long long>> flagged;  // (sub-check, j mod p), one report each
    for (long long j = 0; j <= span; ++j) {
        long long res = floormod(j, p);
        long long dj = seq[res];
        long long g1 = gcd_binomial_index(i, j);
        if (g1 % dj != 0 && flagged.insert({0, res}).second)
            add_violation(rep, "e", j, -1,
                          "entry " + fmt(dj) + " does not divide gcd(C(" + fmt(i) + "," + fmt(j) +
                              "), " + fmt(i) + ") = " + fmt(g1));
        long long g2 = i / std::gcd(i, j == 0 ? i : j);
        if (g2 % dj != 0 && flagged.insert({1, res}).second)
            add_violation(rep, "e", j, -1,
                          "entry " + fmt(dj) + " does not divide " + fmt(i) + "/(" + fmt(i) + "," +
                              fmt(j) + ") = " + fmt(g2));
        if (j > 0 && std::gcd(i, j) == 1 && dj != i && flagged.insert({2, res}).second)
            add_violation(rep, "e", j, -1,
                          "power coprime to the index must keep index " + fmt(i) + ", got " + fmt(dj));
    }
    return rep;
}

BrauerClass make_abstract_class(long long p, const std::vector<long long>& seq) {
    ValidationReport rep = validate_index_sequence(p, seq);
    if (!rep.ok()) {
        DomainError::Data data;
        for (const auto& v : rep.violations) {
            std::ostringstream key;
            key << "constraint_" << v.constraint << "_j" << v.j;
            data.emplace_back(key.str(), v.detail);
        }
        throw DomainError("invalid_index_sequence", "index sequence fails validation", data);
    }
    return BrauerClass(AbstractBrauerClass{p, seq});
}

}  // namespace bsv
