#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bsv/bundle.hpp"
#include "bsv/weights.hpp"

namespace bsv {

// degree -> dimension; omitted degrees are zero
using CohomologyTable = std::map<long long, BigInt>;

// A homogeneous summand on the split model, or an atom of the bundle
// calculus carried along with its variety.
struct CohAtom {
    enum class Kind { Line, Cotangent, Schur, AsAtom };
    Kind kind = Kind::Line;
    long long twist = 0;  // t for Line / Cotangent / Schur
    long long p_form = 0; // Cotangent: exterior power of the cotangent sheaf
    Weight alpha;         // Schur: weight on the dual tautological subbundle
    Weight beta;          // Schur: weight on the dual quotient
    long long a = 0;      // AsAtom
    long long j = 0;      // AsAtom
    long long mult = 1;

    static CohAtom line(long long t, long long mult = 1);
    static CohAtom cotangent(long long p, long long t, long long mult = 1);
    static CohAtom schur(Weight alpha, Weight beta, long long t, long long mult = 1);
    static CohAtom as_atom(long long a, long long j, long long mult = 1);
};

// Bott formula: cohomology of the p-th exterior power of the cotangent
// sheaf twisted by t on projective n-space.  At most one degree is nonzero.
CohomologyTable bott_pn(long long n, long long p_form, long long t);

// Borel–Weil–Bott on the Grassmannian of d-planes in n-space for
// Sigma_alpha(dual sub) (x) Sigma_beta(dual quotient) (x) L^twist,
// L = det(dual sub).
CohomologyTable bwb_cohomology(long long d, long long n, const Weight& alpha, const Weight& beta,
                               long long twist);

// Total cohomology of a direct sum of atoms over the context's split model,
// with descent rank factors applied to AS atoms.
CohomologyTable cohomology_of_expr(const std::vector<CohAtom>& atoms, const BsContext& ctx);

struct NotSplitWitness {
    long long degree = 0;            // cohomological degree
    long long a = 0, j = 0;          // twist parameters (d = 1 criterion)
    std::vector<long long> lambda;   // exterior-power tuple (Grassmannian criterion)
    long long t = 0;                 // Picard twist (Grassmannian criterion)
    BigInt dimension = 0;
};

struct Verdict {
    bool split = false;
    std::optional<BundleExpr> decomposition;  // when the input is twist data
    std::optional<NotSplitWitness> witness;
};

// Splitting criterion on an ordinary Brauer–Severi variety (d = 1): middle
// cohomology of all twists by O(ap) (x) W_j must vanish.  window_scale
// widens the finite twist window (used to confirm the window suffices).
Verdict criterion_bs(const std::vector<CohAtom>& atoms, const CtxPtr& ctx, int window_scale = 1);

// Splitting criterion on a generalized Brauer–Severi variety: middle
// cohomology against all exterior-power factors of the dual quotient and
// all Picard twists must vanish.
Verdict criterion_grass(const std::vector<CohAtom>& atoms, const CtxPtr& ctx, int window_scale = 1);

}  // namespace bsv
