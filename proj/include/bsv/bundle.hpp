#pragma once

#include <map>
#include <memory>
#include <variant>
#include <vector>

#include "bsv/astype.hpp"
#include "bsv/brauer.hpp"
#include "bsv/weights.hpp"

namespace bsv {

// A (generalized) Brauer–Severi variety: Brauer class, degree of the
// underlying algebra, and the Grassmannian parameter d (1 for the ordinary
// case).  Derived data is filled in by make_context.
struct BsContext {
    BrauerClass cls;
    long long algebra_degree = 1;
    long long d = 1;

    long long period = 1;  // of cls^{(x)d}
    ASType type;           // entry j = index of cls^{(x)jd}
    long long dim = 0;     // algebra_degree-1, or d*(algebra_degree-d) when d > 1

    friend bool operator==(const BsContext& a, const BsContext& b) {
        return a.cls == b.cls && a.algebra_degree == b.algebra_degree && a.d == b.d;
    }
};

using CtxPtr = std::shared_ptr<const BsContext>;

CtxPtr make_context(BrauerClass cls, long long algebra_degree, long long d = 1);

// Indecomposable atom J^a (x) W_j: Picard-generator twist a, residue j.
struct AsAtom {
    long long a = 0;
    long long j = 0;

    friend bool operator==(const AsAtom&, const AsAtom&) = default;
    friend auto operator<=>(const AsAtom& x, const AsAtom& y) {
        if (auto c = x.j <=> y.j; c != 0) return c;
        return x.a <=> y.a;
    }
};

// Formal direct sum of atoms in canonical order (by residue, then twist);
// the empty expression is the zero bundle.
struct BundleExpr {
    CtxPtr ctx;
    std::vector<std::pair<AsAtom, long long>> atoms;

    friend bool operator==(const BundleExpr& a, const BundleExpr& b) {
        return a.atoms == b.atoms && *a.ctx == *b.ctx;
    }
};

// Direct sum of line bundles on the split model, twist -> multiplicity.
struct SplitBundle {
    std::map<long long, long long> twists;
    friend bool operator==(const SplitBundle&, const SplitBundle&) = default;
};

struct DescentFailure {
    long long twist = 0;
    long long mult = 0;
    long long required = 0;
};

// Canonical form: residues reduced into [0, period) with the quotient folded
// into the twist, duplicates merged, atoms sorted.
BundleExpr krull_schmidt_normalize(CtxPtr ctx, const std::vector<std::pair<AsAtom, long long>>& raw);

long long rank(const BundleExpr& e);
BundleExpr dual(const BundleExpr& e);
BundleExpr tensor_bundles(const BundleExpr& e, const BundleExpr& f);
SplitBundle pullback(const BundleExpr& e);
std::variant<BundleExpr, DescentFailure> descend(const SplitBundle& s, CtxPtr ctx);

// Rank of the sheaf descended from the lambda Schur power of the
// tautological subbundle on a generalized context: the split form is a
// direct sum of algebra_degree * |lambda| copies of that Schur bundle.
BigInt schur_descent_rank(const BsContext& ctx, const Weight& lambda);

}  // namespace bsv
