#pragma once

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "cdim/monomial.hpp"
#include "cdim/series.hpp"

namespace cdim {

// Monomial-evaluation matrix: rows are points of O_K^n with coordinates in
// k[t], columns are exponents; entry (i,j) = point_i ^ exponent_j.
struct PointMatrix {
    int arity = 0;
    std::vector<std::vector<LaurentPoly>> points;
    ExponentSet exponents;
    std::vector<std::vector<LaurentPoly>> entries;

    size_t rows() const { return points.size(); }
    size_t cols() const { return exponents.size(); }
};

PointMatrix build_matrix(const std::vector<std::vector<LaurentPoly>>& points,
                         const ExponentSet& exponents);

struct DetReport {
    LaurentPoly det;
    long ord = kOrdInf;    // kOrdInf when det = 0
    long deg = kDegNegInf; // kDegNegInf when det = 0
    bool lower_bound_ok = false; // ord >= rho*e, filled by certify_bounds
    long upper_bound = 0;        // the degree budget used, filled by certify_bounds
};

// Exact determinant over k[t] by fraction-free elimination.
DetReport det_fraction_free(const PointMatrix& m);
DetReport det_fraction_free(const std::vector<std::vector<LaurentPoly>>& entries);

// Degree budget (s-1)*sum_j |alpha_j| for points with coordinates of degree
// < s: any nonzero determinant has deg <= this.
long height_degree_budget(const ExponentSet& exponents, int s);

// Sharper budget from the matrix itself: sum over columns of the maximal
// entry degree.
long matrix_degree_budget(const PointMatrix& m);

enum class Verdict {
    forced_zero, // rho*e exceeds the degree budget, so det must vanish (and does)
    consistent,  // both bounds hold
    violation,   // a bound fails; some hypothesis was broken
};

const char* verdict_name(Verdict v);

// Check ord >= rho*e against deg <= degree_budget. Annotates the report.
Verdict certify_bounds(DetReport& report, long rho, long e, int s, long degree_budget);

// Nonzero element of the kernel of the column space: a polynomial
// sum_j c_j(t) x^exponent_j vanishing on all matrix points. Coefficients in
// k[t], content removed, lowest term of the first nonzero coefficient = 1.
struct Hypersurface {
    int arity = 0;
    ExponentSet exponents;
    std::vector<LaurentPoly> coeffs;

    int degree() const; // max |exponent| with nonzero coefficient
    LaurentPoly eval(std::span<const LaurentPoly> point) const;
};

Hypersurface kernel_hypersurface(const PointMatrix& m); // full_rank when none

bool verify_vanishing(const Hypersurface& h, const std::vector<std::vector<LaurentPoly>>& points);

inline long bezout_bound(long d1, long d2) {
    if (d1 < 1 || d2 < 1) raise(errc::domain_error, "degrees must be >= 1");
    return d1 * d2;
}

// A definable map U -> K^n with exact Taylor data at rational-polynomial
// base points. Exact maps work entirely in k[t]; series-backed maps report
// values to a working precision.
class CurveMap {
public:
    virtual ~CurveMap() = default;
    virtual int components() const = 0;
    virtual bool exact() const = 0;

    virtual LaurentPoly eval_exact(int comp, const LaurentPoly& x) const;
    // Taylor coefficients f(y), f'(y), f''(y)/2, ... up to order < r
    virtual std::vector<LaurentPoly> taylor_exact(int comp, const LaurentPoly& y, int r) const;

    virtual TruncSeries eval_series(int comp, const LaurentPoly& x, long prec) const;
    virtual std::vector<TruncSeries> taylor_series(int comp, const LaurentPoly& y, int r,
                                                   long prec) const;
};

// Univariate polynomial over k[t], used both as a map K -> K and as the
// graph component of plane curves y = p(x).
class PolyMap {
public:
    PolyMap() = default;
    explicit PolyMap(std::vector<LaurentPoly> coeffs);

    static PolyMap identity() { return PolyMap({LaurentPoly(0), LaurentPoly(1)}); }
    static PolyMap power(int d); // x^d
    // truncated exponential: sum_{i<=order} x^i / i!
    static PolyMap exp_truncation(int order);

    int degree() const;
    const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }

    LaurentPoly eval(const LaurentPoly& x) const;
    TruncSeries eval(const TruncSeries& x) const; // precision-tracked
    PolyMap derivative() const;
    PolyMap compose(const PolyMap& inner) const; // this(inner(x))
    // f(y), f'(y), f''(y)/2!, ..., exact, length r
    std::vector<LaurentPoly> taylor_at(const LaurentPoly& y, int r) const;

private:
    std::vector<LaurentPoly> coeffs_; // index = power of x; no trailing zeros
};

// y -> a t^j (y - c)^r + b; the power substitution shape. ZeroScale if a = 0.
PolyMap power_substitution(const Scalar& a, int j, const LaurentPoly& c, const LaurentPoly& b,
                           int r);

// graph x -> (x, p_1(x), ..., p_k(x)); all components exact
class PolyGraphMap : public CurveMap {
public:
    explicit PolyGraphMap(std::vector<PolyMap> comps) : comps_(std::move(comps)) {}

    int components() const override { return static_cast<int>(comps_.size()); }
    bool exact() const override { return true; }
    LaurentPoly eval_exact(int comp, const LaurentPoly& x) const override;
    std::vector<LaurentPoly> taylor_exact(int comp, const LaurentPoly& y, int r) const override;

    const PolyMap& component(int i) const { return comps_[static_cast<size_t>(i)]; }

private:
    std::vector<PolyMap> comps_;
};

// the scalar map x -> exp(x) on t*k[[t]]
class ExpMap : public CurveMap {
public:
    int components() const override { return 1; }
    bool exact() const override { return false; }
    TruncSeries eval_series(int comp, const LaurentPoly& x, long prec) const override;
    std::vector<TruncSeries> taylor_series(int comp, const LaurentPoly& y, int r,
                                           long prec) const override;
};

// Margin of one approximation check: ord(psi(x) - T_y(x)) - r*ord(x - y).
// Exact zeros give an infinite margin; a series difference that vanishes to
// its precision gives a certified lower bound only.
struct TrMargin {
    bool infinite = false;
    bool lower_bound_only = false;
    long value = 0;

    bool passes() const { return infinite || value >= 0; }
};

struct TrCheckReport {
    int r = 0;
    std::vector<std::pair<LaurentPoly, LaurentPoly>> samples;
    std::vector<TrMargin> margins; // one per (pair, component), flattened
    TrMargin worst;
    bool pass = false;
};

// Check |psi(x) - T_y^{<r}(x)| <= |x-y|^r on each sample pair (x, y).
// Raises insufficient_precision when a series margin's sign is unresolved.
TrCheckReport tr_check(const CurveMap& psi,
                       const std::vector<std::pair<LaurentPoly, LaurentPoly>>& sample_pairs, int r,
                       long working_prec = 64);

// Check |d^j f(y)| <= |y|^{r-j} for j = 1..r at each sample.
struct DerivBoundReport {
    bool pass = false;
    long worst_margin = 0; // min over samples/orders of ord(d^j f(y)) - (r-j) ord(y)
    bool all_infinite = false;
};

DerivBoundReport derivative_bound_check(const PolyMap& f, std::span<const LaurentPoly> samples,
                                        int r);

} // namespace cdim
