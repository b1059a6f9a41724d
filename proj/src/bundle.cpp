#include "bsv/bundle.hpp"

#include <algorithm>

#include "bsv/arith.hpp"

namespace bsv {

CtxPtr make_context(BrauerClass cls, long long algebra_degree, long long d) {
    if (d < 1 || d > algebra_degree)
        throw DomainError("invalid_context", "need 1 <= d <= algebra degree",
                          {{"d", std::to_string(d)}, {"degree", std::to_string(algebra_degree)}});
    long long idx = index(cls, 1);
    if (algebra_degree % idx != 0)
        throw DomainError("invalid_context", "class index must divide the algebra degree",
                          {{"index", std::to_string(idx)}, {"degree", std::to_string(algebra_degree)}});
    auto ctx = std::make_shared<BsContext>();
    ctx->cls = std::move(cls);
    ctx->algebra_degree = algebra_degree;
    ctx->d = d;
    ctx->type = compute_as_type(ctx->cls, d);
    ctx->period = ctx->type.period();
    ctx->dim = (d == 1) ? algebra_degree - 1 : d * (algebra_degree - d);
    return ctx;
}

namespace {

void require_same_context(const BundleExpr& e, const BundleExpr& f) {
    if (!(*e.ctx == *f.ctx))
        throw DomainError("context_mismatch", "bundle operands live on different varieties");
}

BundleExpr from_map(CtxPtr ctx, const std::map<AsAtom, long long>& acc) {
    BundleExpr out;
    out.ctx = std::move(ctx);
    for (const auto& [atom, mult] : acc)
        if (mult != 0) out.atoms.emplace_back(atom, mult);
    return out;
}

}  // namespace

BundleExpr krull_schmidt_normalize(CtxPtr ctx, const std::vector<std::pair<AsAtom, long long>>& raw) {
    long long p = ctx->period;
    std::map<AsAtom, long long> acc;
    for (const auto& [atom, mult] : raw) {
        if (mult < 1)
            throw DomainError("nonpositive_multiplicity", "atom multiplicities must be >= 1",
                              {{"mult", std::to_string(mult)}});
        AsAtom canon{atom.a + floordiv(atom.j, p), floormod(atom.j, p)};
        acc[canon] += mult;
    }
    return from_map(std::move(ctx), acc);
}

long long rank(const BundleExpr& e) {
    long long r = 0;
    for (const auto& [atom, mult] : e.atoms) r += mult * e.ctx->type.entries[atom.j];
    return r;
}

BundleExpr dual(const BundleExpr& e) {
    long long p = e.ctx->period;
    std::map<AsAtom, long long> acc;
    for (const auto& [atom, mult] : e.atoms) {
        AsAtom d = (atom.j == 0) ? AsAtom{-atom.a, 0} : AsAtom{-atom.a - 1, p - atom.j};
        acc[d] += mult;
    }
    return from_map(e.ctx, acc);
}

BundleExpr tensor_bundles(const BundleExpr& e, const BundleExpr& f) {
    require_same_context(e, f);
    long long p = e.ctx->period;
    const auto& d = e.ctx->type.entries;
    std::map<AsAtom, long long> acc;
    for (const auto& [x, mx] : e.atoms)
        for (const auto& [y, my] : f.atoms) {
            long long js = x.j + y.j;
            AsAtom z{x.a + y.a + (js >= p ? 1 : 0), floormod(js, p)};
            long long num = d[x.j] * d[y.j];
            if (num % d[z.j] != 0)
                throw DomainError("integrality_bug", "atom tensor multiplicity is not integral",
                                  {{"j1", std::to_string(x.j)},
                                   {"j2", std::to_string(y.j)},
                                   {"j", std::to_string(z.j)}});
            acc[z] += mx * my * (num / d[z.j]);
        }
    return from_map(e.ctx, acc);
}

SplitBundle pullback(const BundleExpr& e) {
    long long p = e.ctx->period;
    SplitBundle s;
    for (const auto& [atom, mult] : e.atoms)
        s.twists[atom.a * p + atom.j] += mult * e.ctx->type.entries[atom.j];
    return s;
}

BigInt schur_descent_rank(const BsContext& ctx, const Weight& lambda) {
    if (static_cast<long long>(lambda.size()) != ctx.d)
        throw DomainError("incompatible_atom", "partition length must equal d",
                          {{"length", std::to_string(lambda.size())}, {"d", std::to_string(ctx.d)}});
    if (!weakly_decreasing(lambda) || lambda.back() < 0 || lambda.front() > ctx.algebra_degree - ctx.d)
        throw DomainError("incompatible_atom", "partition must fit in the d x (n-d) box");
    long long boxes = 0;
    for (long long x : lambda) boxes += x;
    return BigInt(ctx.algebra_degree) * boxes * weyl_dim(lambda, static_cast<int>(ctx.d));
}

std::variant<BundleExpr, DescentFailure> descend(const SplitBundle& s, CtxPtr ctx) {
    if (ctx->d != 1)
        throw DomainError("descent_unsupported", "descent is defined on the d = 1 case only");
    long long p = ctx->period;
    std::map<AsAtom, long long> acc;
    for (const auto& [t, m] : s.twists) {
        if (m < 1)
            throw DomainError("nonpositive_multiplicity", "twist multiplicities must be >= 1",
                              {{"mult", std::to_string(m)}});
        long long j = floormod(t, p);
        long long dj = ctx->type.entries[j];
        if (m % dj != 0) return DescentFailure{t, m, dj};
        acc[AsAtom{floordiv(t, p), j}] += m / dj;
    }
    return from_map(std::move(ctx), acc);
}

}  // namespace bsv
