#include "bsv/cohomology.hpp"

#include <algorithm>
#include <cstdlib>

#include "bsv/arith.hpp"

namespace bsv {

CohAtom CohAtom::line(long long t, long long mult) {
    CohAtom a;
    a.kind = Kind::Line;
    a.twist = t;
    a.mult = mult;
    return a;
}

CohAtom CohAtom::cotangent(long long p, long long t, long long mult) {
    CohAtom a;
    a.kind = Kind::Cotangent;
    a.p_form = p;
    a.twist = t;
    a.mult = mult;
    return a;
}

CohAtom CohAtom::schur(Weight alpha, Weight beta, long long t, long long mult) {
    CohAtom a;
    a.kind = Kind::Schur;
    a.alpha = std::move(alpha);
    a.beta = std::move(beta);
    a.twist = t;
    a.mult = mult;
    return a;
}

CohAtom CohAtom::as_atom(long long aa, long long j, long long mult) {
    CohAtom a;
    a.kind = Kind::AsAtom;
    a.a = aa;
    a.j = j;
    a.mult = mult;
    return a;
}

CohomologyTable bott_pn(long long n, long long p_form, long long t) {
    if (n < 1) throw DomainError("bad_dimension", "projective space dimension must be >= 1");
    if (p_form < 0 || p_form > n)
        throw DomainError("bad_form", "exterior power outside [0, n]",
                          {{"p", std::to_string(p_form)}, {"n", std::to_string(n)}});
    CohomologyTable table;
    if (t == 0)
        table[p_form] = 1;
    else if (t > p_form)
        table[0] = big_binomial(t + n - p_form, t) * big_binomial(t - 1, p_form);
    else if (t < p_form - n)
        table[n] = big_binomial(-t + p_form, -t) * big_binomial(-t - 1, n - p_form);
    return table;
}

CohomologyTable bwb_cohomology(long long d, long long n, const Weight& alpha, const Weight& beta,
                               long long twist) {
    if (!(1 <= d && d < n))
        throw DomainError("bad_dimension", "need 1 <= d < n",
                          {{"d", std::to_string(d)}, {"n", std::to_string(n)}});
    if (static_cast<long long>(alpha.size()) != d || static_cast<long long>(beta.size()) != n - d)
        throw DomainError("incompatible_atom", "weight lengths do not match the Grassmannian");
    if (!weakly_decreasing(alpha) || !weakly_decreasing(beta))
        throw DomainError("bad_weight", "weights must be weakly decreasing");

    // dotted Weyl action: add the staircase, look for a strictly dominant
    // rearrangement, count the inversions it takes
    std::vector<long long> v;
    v.reserve(n);
    for (long long x : alpha) v.push_back(x + twist);
    for (long long x : beta) v.push_back(x);
    for (long long i = 0; i < n; ++i) v[i] += n - 1 - i;

    long long inversions = 0;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j) {
            if (v[i] == v[j]) return {};  // singular weight, no cohomology
            if (v[i] < v[j]) ++inversions;
        }

    std::vector<long long> sorted = v;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    Weight w(n);
    for (long long i = 0; i < n; ++i) w[i] = sorted[i] - (n - 1 - i);
    return {{inversions, weyl_dim(w, static_cast<int>(n))}};
}

namespace {

struct SchurSummand {
    Weight alpha;
    Weight beta;
    long long factor = 1;
};

// Reduce any atom to Schur summands on Grass(d, n); the atom's own twist is
// absorbed into alpha, AS atoms pick up their descent rank as a factor.
std::vector<SchurSummand> to_summands(const CohAtom& atom, const BsContext& ctx) {
    long long d = ctx.d, n = ctx.algebra_degree;
    switch (atom.kind) {
        case CohAtom::Kind::Line:
            return {{Weight(d, atom.twist), Weight(n - d, 0), atom.mult}};
        case CohAtom::Kind::Cotangent: {
            if (d != 1)
                throw DomainError("incompatible_atom",
                                  "cotangent powers are irreducible only on the d = 1 model");
            long long pn = ctx.dim;
            if (atom.p_form < 0 || atom.p_form > pn)
                throw DomainError("incompatible_atom", "exterior power outside [0, dim]");
            Weight beta(n - 1, 0);
            for (long long i = 0; i < atom.p_form; ++i) beta[i] = 1;
            return {{Weight{atom.twist - atom.p_form}, std::move(beta), atom.mult}};
        }
        case CohAtom::Kind::Schur: {
            if (static_cast<long long>(atom.alpha.size()) != d ||
                static_cast<long long>(atom.beta.size()) != n - d)
                throw DomainError("incompatible_atom", "weight lengths do not match the context");
            Weight a = atom.alpha;
            for (auto& x : a) x += atom.twist;
            return {{std::move(a), atom.beta, atom.mult}};
        }
        case CohAtom::Kind::AsAtom: {
            long long t = atom.a * ctx.period + atom.j;  // invariant under residue folding
            long long dj = ctx.type.at(atom.j);
            return {{Weight(d, t), Weight(n - d, 0), atom.mult * dj}};
        }
    }
    throw std::logic_error("unreachable atom kind");
}

void add_scaled(CohomologyTable& total, const CohomologyTable& part, long long factor) {
    for (const auto& [deg, dim] : part) total[deg] += dim * factor;
}

// Max |weight entry| over the translated atoms.  Middle cohomology of a
// summand needs the twisted alpha block to interleave the beta block after
// adding the staircase, which pins the twist to |s| <= 2*reach + n; the
// sweep bound adds the variety dimension on top.
long long reach_of(const std::vector<std::vector<SchurSummand>>& all) {
    long long r = 0;
    for (const auto& group : all)
        for (const auto& s : group) {
            for (long long x : s.alpha) r = std::max(r, std::llabs(x));
            for (long long x : s.beta) r = std::max(r, std::llabs(x));
        }
    return r;
}

// 0, 1, -1, 2, -2, ... restricted by a predicate on the value
template <typename F>
bool sweep_centered(long long limit, F&& visit) {
    for (long long k = 0; k <= limit; ++k) {
        if (!visit(k)) return false;
        if (k > 0 && !visit(-k)) return false;
    }
    return true;
}

}  // namespace

CohomologyTable cohomology_of_expr(const std::vector<CohAtom>& atoms, const BsContext& ctx) {
    CohomologyTable total;
    for (const CohAtom& atom : atoms) {
        if (ctx.d == 1 && atom.kind != CohAtom::Kind::Schur) {
            // Bott route on the projective split model
            long long n = ctx.dim;
            if (atom.kind == CohAtom::Kind::Line)
                add_scaled(total, bott_pn(n, 0, atom.twist), atom.mult);
            else if (atom.kind == CohAtom::Kind::Cotangent)
                add_scaled(total, bott_pn(n, atom.p_form, atom.twist), atom.mult);
            else {
                long long t = atom.a * ctx.period + atom.j;
                add_scaled(total, bott_pn(n, 0, t), atom.mult * ctx.type.at(atom.j));
            }
        } else {
            for (const auto& s : to_summands(atom, ctx))
                add_scaled(total, bwb_cohomology(ctx.d, ctx.algebra_degree, s.alpha, s.beta, 0),
                           s.factor);
        }
    }
    return total;
}

Verdict criterion_bs(const std::vector<CohAtom>& atoms, const CtxPtr& ctx, int window_scale) {
    if (ctx->d != 1)
        throw DomainError("invalid_context", "criterion applies to the d = 1 case");
    long long n = ctx->dim;
    long long p = ctx->period;

    std::vector<std::vector<SchurSummand>> summands;
    for (const auto& atom : atoms) summands.push_back(to_summands(atom, *ctx));
    long long bound = window_scale * (n + 2 * reach_of(summands) + ctx->algebra_degree);

    std::optional<NotSplitWitness> found;
    for (long long j = 0; j < p && !found; ++j) {
        sweep_centered((bound + p) / p, [&](long long a) {
            long long s = a * p + j;
            if (std::llabs(s) > bound) return true;
            CohomologyTable table;
            for (size_t k = 0; k < atoms.size(); ++k) {
                const CohAtom& atom = atoms[k];
                if (atom.kind == CohAtom::Kind::Schur) {
                    for (const auto& sm : summands[k])
                        add_scaled(table,
                                   bwb_cohomology(1, ctx->algebra_degree, sm.alpha, sm.beta, s),
                                   sm.factor);
                } else if (atom.kind == CohAtom::Kind::Cotangent) {
                    add_scaled(table, bott_pn(n, atom.p_form, atom.twist + s), atom.mult);
                } else if (atom.kind == CohAtom::Kind::Line) {
                    add_scaled(table, bott_pn(n, 0, atom.twist + s), atom.mult);
                } else {
                    long long t = atom.a * p + atom.j;
                    add_scaled(table, bott_pn(n, 0, t + s), atom.mult * ctx->type.at(atom.j));
                }
            }
            long long dj = ctx->type.at(j);
            for (long long i = 1; i < n; ++i) {
                auto it = table.find(i);
                if (it != table.end() && it->second != 0) {
                    found = NotSplitWitness{i, a, j, {}, 0, it->second * dj};
                    return false;
                }
            }
            return true;
        });
    }

    if (found) return Verdict{false, std::nullopt, found};

    Verdict v;
    v.split = true;
    bool twist_only = std::all_of(atoms.begin(), atoms.end(), [](const CohAtom& a) {
        return a.kind == CohAtom::Kind::Line || a.kind == CohAtom::Kind::AsAtom;
    });
    if (twist_only) {
        SplitBundle s;
        for (const auto& atom : atoms) {
            if (atom.kind == CohAtom::Kind::Line)
                s.twists[atom.twist] += atom.mult;
            else
                s.twists[atom.a * p + atom.j] += atom.mult * ctx->type.at(atom.j);
        }
        auto r = descend(s, ctx);
        if (std::holds_alternative<BundleExpr>(r)) v.decomposition = std::get<BundleExpr>(r);
    }
    return v;
}

Verdict criterion_grass(const std::vector<CohAtom>& atoms, const CtxPtr& ctx, int window_scale) {
    long long n = ctx->algebra_degree, d = ctx->d;
    if (n < 3 || d < 1 || d >= n)
        throw DomainError("invalid_context", "criterion needs algebra degree >= 3 and 1 <= d < n");
    long long dimX = ctx->dim;
    long long p = ctx->period;

    std::vector<SchurSummand> base;
    for (const auto& atom : atoms)
        for (auto& s : to_summands(atom, *ctx)) base.push_back(std::move(s));
    long long bound = window_scale * (dimX + 2 * (reach_of({base}) + d) + n);

    // Weakly decreasing exterior-power tuples with at most d-1 nonzero
    // parts, entries in [0, n-d], lexicographically ascending from the empty
    // one.  With d or more factors the product of exterior powers of the
    // dual quotient acquires middle cohomology already on line bundles
    // (e.g. H^2 of Q^v (x) Q^v (-1) on four-space quotients), so the sweep
    // stays within the sound family.
    std::vector<std::vector<long long>> lambdas;
    long long parts = d - 1;
    std::vector<long long> cur(parts, 0);
    while (true) {
        lambdas.push_back(cur);
        long long i = parts - 1;
        while (i >= 0) {
            long long cap = (i == 0) ? n - d : cur[i - 1];
            if (cur[i] < cap) {
                ++cur[i];
                for (long long k = i + 1; k < parts; ++k) cur[k] = 0;
                break;
            }
            --i;
        }
        if (i < 0) break;
    }

    std::optional<NotSplitWitness> found;
    sweep_centered(bound / p + 1, [&](long long t) {
        if (std::llabs(t) * p > bound) return true;
        for (const auto& lam : lambdas) {
            // fold each exterior power of the dual quotient into the beta side
            std::vector<SchurSummand> cells = base;
            for (long long part : lam) {
                if (part == 0) continue;
                std::vector<SchurSummand> next;
                for (const auto& c : cells)
                    for (auto& b : pieri_fold(c.beta, static_cast<int>(part)))
                        next.push_back({c.alpha, std::move(b), c.factor});
                cells = std::move(next);
            }
            CohomologyTable table;
            for (const auto& c : cells)
                add_scaled(table, bwb_cohomology(d, n, c.alpha, c.beta, t * p), c.factor);
            for (long long r = 1; r < dimX; ++r) {
                auto it = table.find(r);
                if (it != table.end() && it->second != 0) {
                    std::vector<long long> trimmed;
                    for (long long part : lam)
                        if (part > 0) trimmed.push_back(part);
                    found = NotSplitWitness{r, 0, 0, trimmed, t, it->second};
                    return false;
                }
            }
        }
        return true;
    });

    if (found) return Verdict{false, std::nullopt, found};
    Verdict v;
    v.split = true;
    return v;
}

}  // namespace bsv
