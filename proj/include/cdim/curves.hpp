#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cdim/detmethod.hpp"
#include "cdim/groebner.hpp"
#include "cdim/rng.hpp"

namespace cdim {

// Plane curve F(x, y) = 0 with F nonconstant over Q.
struct AlgebraicPlane {
    MultiPoly f; // arity 2, variables (x, y)

    explicit AlgebraicPlane(MultiPoly poly);
};

// Graph of a named exact series generator; only the exponential on t*k[[t]]
// is wired up at the moment.
struct SeriesGraph {
    std::string generator = "exp";
    long min_ord = 1; // domain constraint ord_t(x) >= min_ord
};

// Parameters of the fast-growing product construction
//   f(x) = sum_n t^{N_n} x^{N_n} prod_{i,l=1..N_n} prod_{j=1..F(N_n)} (x - i - j t^l),
// truncated to the first `truncation` outer terms.
struct AdversarialParams {
    std::vector<long> N_seq;  // strictly increasing, >= 1
    std::vector<long> F_vals; // F(N_n) for each n, >= 1, non-decreasing
    int truncation = 0;
};

struct AdversarialCurve {
    AdversarialParams params;
};

using CurveSpec = std::variant<AlgebraicPlane, SeriesGraph, AdversarialCurve>;

// The coefficient variety of height-s points: substitute
// x = sum a_i t^i, y = sum b_j t^j (i, j < s) into F and take all
// t-coefficients. Variables are ordered a_0..a_{s-1}, b_0..b_{s-1}.
struct XsIdeal {
    int s = 0;
    IdealBasis basis; // arity 2s
};

// t-expansion of g(x(t), y(t)) for height-s coefficient variables; entry k
// is the coefficient of t^k, a polynomial in 2s variables.
std::vector<MultiPoly> height_expansion(const MultiPoly& g, int s);

XsIdeal xs_ideal(const AlgebraicPlane& curve, int s);

std::vector<std::string> xs_var_names(int s);

// Zariski dimension of the coefficient variety, via a Groebner basis.
int xs_dimension(const AlgebraicPlane& curve, int s, const BuchbergerOptions& opts = {});

// Witness map: polynomials g_1..g_d in (x, y), each composed with reduction
// mod t^e. A coordinate projection is the map with a single variable
// polynomial.
struct WitnessMap {
    std::vector<MultiPoly> comps; // arity 2 each
    std::string desc;

    static WitnessMap projection_x();
    static WitnessMap projection_y();
};

using FiberClass = std::vector<ResidueClass>; // one residue class per map component

struct FiberCheck {
    FiberClass cls;
    int dimension = -1;   // of the fiber ideal's variety
    long size_bound = 0;  // quotient dimension when the fiber is finite
};

struct CDimWitnessReport {
    int s = 0;
    long e = 0;
    int d = 0; // number of map components
    std::string map_desc;
    std::vector<FiberCheck> fibers;
    bool infinite_fiber = false;
    long max_finite_fiber = 0;
    std::optional<FiberClass> infinite_fiber_class;
};

// Check the witness (map, e) on explicit residue classes: each fiber ideal
// is the coefficient variety plus the class constraints; a fiber of positive
// dimension is an infinite fiber.
CDimWitnessReport cdim_witness_check(const AlgebraicPlane& curve, int s, const WitnessMap& map,
                                     long e, const std::vector<FiberClass>& classes,
                                     const BuchbergerOptions& opts = {});

// Residue classes of map values at sampled rational points of the curve
// (graph-shaped curves only), so the checked fibers are never empty.
std::vector<FiberClass> sample_witness_classes(const AlgebraicPlane& curve, int s,
                                               const WitnessMap& map, long e, int count, Rng& rng);

// Solve a graph-shaped plane curve for the given variable: F = c*y - g(x)
// with constant c (var = 1), or symmetrically for x (var = 0). Returns the
// right-hand side as a univariate polynomial map.
std::optional<PolyMap> graph_rhs(const MultiPoly& f, int var);

struct CdimTriple {
    long N = 0;
    int d = 0;
    long e = 0;

    bool operator==(const CdimTriple&) const = default;
};

enum class CombineMode { union_of_sets, product, pullback };

// union: (N1+N2, max d, max e); product: (N1*N2, d1+d2, max e);
// pullback through a map with fibres of size <= n_pullback: (n*N1, d1, e1).
CdimTriple cdim_combine(const CdimTriple& w1, const CdimTriple& w2, CombineMode mode,
                        long n_pullback = 0);

void validate(const AdversarialParams& params);

// n-th outer term of the truncated construction, evaluated exactly
LaurentPoly adversarial_term(const AdversarialParams& params, int n, const LaurentPoly& x);
LaurentPoly adversarial_eval(const AdversarialParams& params, const LaurentPoly& x);

struct CollapseReport {
    int n = 0;
    long N_n = 0;
    int s = 0;
    long e = 0;
    bool e_within_range = false; // the collapse argument needs e <= N_n
    long fiber_size = 0;         // F(N_n) points
    long max_value_degree = 0;   // over the fiber's second coordinates
    bool collapsed = false;      // all first coordinates agree mod t^e
    std::optional<long> chain_bound; // 3 N_n N_{n-1}^2 F(N_{n-1}) for n >= 1
    bool chain_ok = false;
};

// Evaluate the construction on its own designated points
// x_j = N_n + j t^{N_n}, verify they give height-s curve points collapsing
// into a single residue class. Raises precision_gap when a value's degree
// reaches s.
CollapseReport adversarial_collapse_check(const AdversarialParams& params, int n, int s, long e);

struct ExpTailCertificate {
    LaurentPoly x;
    bool constant_point = false; // x = 0 maps to (0, 1), a height-1 point
    long witness_degree = 0;     // in [s, prec)
    Scalar witness_coeff;        // nonzero coefficient of exp(x) there
};

struct ExpGraphReport {
    int s = 0;
    long prec = 0;
    std::vector<ExpTailCertificate> certificates;
};

// Certify exp(x) has a nonzero coefficient at degree >= s for each nonzero
// sample x in t*Q[t] of degree < s. Raises inconclusive when no witness
// shows up below prec.
ExpGraphReport exp_graph_check(int s, long prec, const std::vector<LaurentPoly>& samples);

struct ReductionStep {
    MultiPoly g = MultiPoly(2);
    int ydeg_f = 0, xdeg_f = 0;
    int ydeg_g = 0, xdeg_g = 0;
    bool terminal = false; // g = 0 ends the chain
};

// For f = sum_i f_i(x) y^i of y-degree d, produce
// g = sum_i f_i'(x) y^i + sum_{i<d} (i-d) f_i(x) y^i,
// which satisfies g(x, E) = d/dx f(x, E) - d f(x, E) whenever E' = E.
ReductionStep transcendence_reduction_step(const MultiPoly& f);

// Verify the defining identity of the reduction with E a truncated
// exponential, comparing series exactly on the common precision range.
bool reduction_identity_holds(const MultiPoly& f, const ReductionStep& step, long prec);

// Points (x_i, p(x_i)) with the x_i = center + t^rho * u_i congruent by
// construction; u_i distinct random polynomials of degree <= offset_deg.
struct GraphFiberSample {
    std::vector<std::vector<LaurentPoly>> points;
    LaurentPoly center_x;
    int rho = 0;
};

GraphFiberSample sample_graph_fiber(const PolyMap& p, int count, int rho, int center_deg,
                                    int offset_deg, Rng& rng);

} // namespace cdim
