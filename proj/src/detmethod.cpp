#include "cdim/detmethod.hpp"

#include <algorithm>

namespace cdim {

PointMatrix build_matrix(const std::vector<std::vector<LaurentPoly>>& points,
                         const ExponentSet& exponents) {
    if (points.empty() || exponents.members.empty())
        raise(errc::empty_input, "need at least one point and one exponent");
    if (points.size() > exponents.size())
        raise(errc::domain_error, "more points than monomials");
    PointMatrix m;
    m.arity = exponents.arity;
    for (const auto& pt : points) {
        if (static_cast<int>(pt.size()) != m.arity)
            raise(errc::arity_mismatch, "point arity != exponent arity");
        for (const auto& coord : pt)
            if (!coord.is_zero() && coord.ord() < 0)
                raise(errc::negative_valuation, "point coordinate " + coord.str() + " has a pole");
    }
    m.points = points;
    m.exponents = exponents;
    m.entries.reserve(points.size());
    for (const auto& pt : points) {
        std::vector<LaurentPoly> row;
        row.reserve(exponents.size());
        for (const auto& e : exponents.members) {
            LaurentPoly v(1);
            for (int i = 0; i < m.arity; ++i)
                if (e[i] > 0) v *= pt[static_cast<size_t>(i)].pow(static_cast<unsigned long>(e[i]));
            row.push_back(std::move(v));
        }
        m.entries.push_back(std::move(row));
    }
    return m;
}

namespace {

// Bareiss forward elimination in place. Records the permutation sign and the
// pivot column of each processed row.
struct Echelon {
    int sign = 1;
    size_t rank = 0;
    std::vector<size_t> pivot_cols;
};

Echelon bareiss(std::vector<std::vector<LaurentPoly>>& a) {
    Echelon ech;
    if (a.empty()) return ech;
    size_t rows = a.size(), cols = a[0].size();
    LaurentPoly prev(1);
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pivot = row;
        while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != row) {
            std::swap(a[pivot], a[row]);
            ech.sign = -ech.sign;
        }
        for (size_t i = row + 1; i < rows; ++i) {
            for (size_t j = col + 1; j < cols; ++j)
                a[i][j] = divide_exact(a[row][col] * a[i][j] - a[i][col] * a[row][j], prev);
            a[i][col] = LaurentPoly();
        }
        prev = a[row][col];
        ech.pivot_cols.push_back(col);
        ++row;
    }
    ech.rank = row;
    return ech;
}

} // namespace

DetReport det_fraction_free(const std::vector<std::vector<LaurentPoly>>& entries) {
    if (entries.empty() || entries.size() != entries.front().size())
        raise(errc::not_square, "determinant of a non-square matrix");
    auto a = entries;
    Echelon ech = bareiss(a);
    DetReport rep;
    if (ech.rank < entries.size()) return rep; // det = 0
    rep.det = a.back().back() * Scalar(ech.sign);
    if (!rep.det.is_zero()) {
        rep.ord = rep.det.ord();
        rep.deg = rep.det.degree();
    }
    return rep;
}

DetReport det_fraction_free(const PointMatrix& m) {
    if (m.rows() != m.cols()) raise(errc::not_square, "determinant of a non-square matrix");
    return det_fraction_free(m.entries);
}

long height_degree_budget(const ExponentSet& exponents, int s) {
    if (s < 1) raise(errc::domain_error, "need s >= 1");
    long total = 0;
    for (const auto& e : exponents.members) total += e.total();
    return static_cast<long>(s - 1) * total;
}

long matrix_degree_budget(const PointMatrix& m) {
    long total = 0;
    for (size_t j = 0; j < m.cols(); ++j) {
        long column_max = 0;
        for (size_t i = 0; i < m.rows(); ++i)
            if (!m.entries[i][j].is_zero())
                column_max = std::max(column_max, m.entries[i][j].degree());
        total += column_max;
    }
    return total;
}

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::forced_zero: return "forced_zero";
    case Verdict::consistent: return "consistent";
    case Verdict::violation: return "violation";
    }
    return "?";
}

Verdict certify_bounds(DetReport& report, long rho, long e, int s, long degree_budget) {
    if (rho < 0 || e < 0 || s < 1) raise(errc::domain_error, "bad certify parameters");
    report.upper_bound = degree_budget;
    bool det_zero = report.det.is_zero();
    report.lower_bound_ok = det_zero || report.ord >= rho * e;
    if (rho * e > degree_budget) return det_zero ? Verdict::forced_zero : Verdict::violation;
    if (!report.lower_bound_ok) return Verdict::violation;
    if (!det_zero && report.deg > degree_budget) return Verdict::violation;
    return Verdict::consistent;
}

int Hypersurface::degree() const {
    int d = -1;
    for (size_t j = 0; j < coeffs.size(); ++j)
        if (!coeffs[j].is_zero()) d = std::max(d, exponents.members[j].total());
    return d;
}

LaurentPoly Hypersurface::eval(std::span<const LaurentPoly> point) const {
    if (static_cast<int>(point.size()) != arity)
        raise(errc::arity_mismatch, "point arity != hypersurface arity");
    LaurentPoly acc;
    for (size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j].is_zero()) continue;
        LaurentPoly mono(1);
        const Exponent& e = exponents.members[j];
        for (int i = 0; i < arity; ++i)
            if (e[i] > 0) mono *= point[static_cast<size_t>(i)].pow(static_cast<unsigned long>(e[i]));
        acc += coeffs[j] * mono;
    }
    return acc;
}

namespace {

// rational function over k(t); only needed for kernel back-substitution
struct RatFn {
    LaurentPoly num, den{LaurentPoly(1)};

    void normalize() {
        if (num.is_zero()) {
            den = LaurentPoly(1);
            return;
        }
        LaurentPoly g = laurent_gcd(num, den);
        num = divide_exact(num, g);
        den = divide_exact(den, g);
        Scalar lead = den.leading_coeff();
        if (lead != 1) {
            num = num * (1 / lead);
            den = den * (1 / lead);
        }
    }
    static RatFn of(const LaurentPoly& p) { return RatFn{p, LaurentPoly(1)}; }
    RatFn operator+(const RatFn& o) const {
        RatFn r{num * o.den + o.num * den, den * o.den};
        r.normalize();
        return r;
    }
    RatFn operator*(const RatFn& o) const {
        RatFn r{num * o.num, den * o.den};
        r.normalize();
        return r;
    }
    RatFn operator-() const { return RatFn{-num, den}; }
    RatFn divided_by(const LaurentPoly& p) const {
        RatFn r{num, den * p};
        r.normalize();
        return r;
    }
};

} // namespace

Hypersurface kernel_hypersurface(const PointMatrix& m) {
    auto a = m.entries;
    Echelon ech = bareiss(a);
    size_t cols = m.cols();
    if (ech.rank == cols) raise(errc::full_rank, "matrix has full column rank");

    std::vector<bool> is_pivot(cols, false);
    for (size_t c : ech.pivot_cols) is_pivot[c] = true;
    size_t free_col = 0;
    while (free_col < cols && is_pivot[free_col]) ++free_col;

    std::vector<RatFn> x(cols);
    x[free_col] = RatFn::of(LaurentPoly(1));
    for (size_t i = ech.rank; i-- > 0;) {
        size_t pc = ech.pivot_cols[i];
        RatFn acc;
        for (size_t j = pc + 1; j < cols; ++j) {
            if (x[j].num.is_zero()) continue;
            acc = acc + RatFn::of(a[i][j]) * x[j];
        }
        x[pc] = (-acc).divided_by(a[i][pc]);
    }

    // clear denominators, remove polynomial content, normalize the leading
    // coefficient's lowest t-term to 1
    LaurentPoly common_den(1);
    for (const auto& r : x)
        if (!r.num.is_zero())
            common_den = divide_exact(common_den * r.den, laurent_gcd(common_den, r.den));
    std::vector<LaurentPoly> cleared(cols);
    LaurentPoly content;
    for (size_t j = 0; j < cols; ++j) {
        if (x[j].num.is_zero()) continue;
        cleared[j] = x[j].num * divide_exact(common_den, x[j].den);
        content = content.is_zero() ? cleared[j] : laurent_gcd(content, cleared[j]);
    }
    size_t first = 0;
    while (first < cols && cleared[first].is_zero()) ++first;
    if (first == cols) raise(errc::internal, "kernel vector vanished");
    for (auto& c : cleared)
        if (!c.is_zero()) c = divide_exact(c, content);
    Scalar lead = cleared[first].terms().begin()->second;
    for (auto& c : cleared) c = c * (1 / lead);

    Hypersurface h;
    h.arity = m.arity;
    h.exponents = m.exponents;
    h.coeffs = std::move(cleared);
    return h;
}

bool verify_vanishing(const Hypersurface& h, const std::vector<std::vector<LaurentPoly>>& points) {
    for (const auto& pt : points) {
        if (static_cast<int>(pt.size()) != h.arity)
            raise(errc::arity_mismatch, "point arity != hypersurface arity");
        if (!h.eval(pt).is_zero()) return false;
    }
    return true;
}

LaurentPoly CurveMap::eval_exact(int, const LaurentPoly&) const {
    raise(errc::unsupported_map, "map has no exact evaluation");
}
std::vector<LaurentPoly> CurveMap::taylor_exact(int, const LaurentPoly&, int) const {
    raise(errc::unsupported_map, "map has no exact Taylor data");
}
TruncSeries CurveMap::eval_series(int comp, const LaurentPoly& x, long prec) const {
    return TruncSeries::from_poly(eval_exact(comp, x), prec);
}
std::vector<TruncSeries> CurveMap::taylor_series(int comp, const LaurentPoly& y, int r,
                                                 long prec) const {
    std::vector<TruncSeries> out;
    for (const auto& p : taylor_exact(comp, y, r)) out.push_back(TruncSeries::from_poly(p, prec));
    return out;
}

PolyMap::PolyMap(std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

PolyMap PolyMap::power(int d) {
    if (d < 0) raise(errc::domain_error, "need d >= 0");
    std::vector<LaurentPoly> c(static_cast<size_t>(d) + 1);
    c.back() = LaurentPoly(1);
    return PolyMap(std::move(c));
}

PolyMap PolyMap::exp_truncation(int order) {
    if (order < 0) raise(errc::domain_error, "need order >= 0");
    std::vector<LaurentPoly> c;
    Scalar factorial(1);
    for (int i = 0; i <= order; ++i) {
        if (i > 0) factorial *= Scalar(i);
        c.push_back(LaurentPoly(Scalar(1) / factorial));
    }
    return PolyMap(std::move(c));
}

int PolyMap::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

LaurentPoly PolyMap::eval(const LaurentPoly& x) const {
    LaurentPoly acc;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

TruncSeries PolyMap::eval(const TruncSeries& x) const {
    if (coeffs_.empty()) return TruncSeries::zero_to(x.prec());
    if (coeffs_.size() == 1) return TruncSeries::from_poly(coeffs_[0], x.prec());
    TruncSeries acc = coeffs_.back() * x;
    for (size_t i = coeffs_.size() - 1; i-- > 1;) acc = (acc + coeffs_[i]) * x;
    return acc + coeffs_[0];
}

PolyMap PolyMap::derivative() const {
    std::vector<LaurentPoly> c;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        c.push_back(coeffs_[i] * Scalar(static_cast<long>(i)));
    return PolyMap(std::move(c));
}

PolyMap PolyMap::compose(const PolyMap& inner) const {
    PolyMap acc;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        std::vector<LaurentPoly> next(acc.coeffs_.empty() ? 1
                                                          : acc.coeffs_.size() + inner.coeffs_.size());
        for (size_t a = 0; a < acc.coeffs_.size(); ++a)
            for (size_t b = 0; b < inner.coeffs_.size(); ++b)
                next[a + b] += acc.coeffs_[a] * inner.coeffs_[b];
        next[0] += coeffs_[i];
        acc = PolyMap(std::move(next));
    }
    return acc;
}

std::vector<LaurentPoly> PolyMap::taylor_at(const LaurentPoly& y, int r) const {
    // coefficient of h^k in f(y+h): sum_i c_i C(i,k) y^(i-k)
    std::vector<LaurentPoly> out;
    out.reserve(static_cast<size_t>(r));
    for (int k = 0; k < r; ++k) {
        LaurentPoly acc;
        for (size_t i = static_cast<size_t>(k); i < coeffs_.size(); ++i) {
            mpz_class bin;
            mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(i),
                         static_cast<unsigned long>(k));
            acc += coeffs_[i] * Scalar(bin) * y.pow(i - static_cast<size_t>(k));
        }
        out.push_back(std::move(acc));
    }
    return out;
}

PolyMap power_substitution(const Scalar& a, int j, const LaurentPoly& c, const LaurentPoly& b,
                           int r) {
    if (a == 0) raise(errc::zero_scale, "power substitution with a = 0");
    if (j < 0 || r < 1) raise(errc::domain_error, "need j >= 0 and r >= 1");
    LaurentPoly scale = LaurentPoly::term(j, a);
    std::vector<LaurentPoly> coeffs(static_cast<size_t>(r) + 1);
    for (int k = 0; k <= r; ++k) {
        mpz_class bin;
        mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(k));
        coeffs[static_cast<size_t>(k)] = scale * Scalar(bin) * (-c).pow(static_cast<unsigned long>(r - k));
    }
    coeffs[0] += b;
    return PolyMap(std::move(coeffs));
}

LaurentPoly PolyGraphMap::eval_exact(int comp, const LaurentPoly& x) const {
    return comps_[static_cast<size_t>(comp)].eval(x);
}

std::vector<LaurentPoly> PolyGraphMap::taylor_exact(int comp, const LaurentPoly& y, int r) const {
    return comps_[static_cast<size_t>(comp)].taylor_at(y, r);
}

TruncSeries ExpMap::eval_series(int, const LaurentPoly& x, long prec) const {
    return exp_series(x, prec);
}

std::vector<TruncSeries> ExpMap::taylor_series(int, const LaurentPoly& y, int r, long prec) const {
    TruncSeries e = exp_series(y, prec);
    std::vector<TruncSeries> out;
    Scalar factorial(1);
    for (int i = 0; i < r; ++i) {
        if (i > 0) factorial *= Scalar(i);
        out.push_back(e * (Scalar(1) / factorial));
    }
    return out;
}

namespace {

bool margin_less(const TrMargin& a, const TrMargin& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
}

} // namespace

TrCheckReport tr_check(const CurveMap& psi,
                       const std::vector<std::pair<LaurentPoly, LaurentPoly>>& sample_pairs, int r,
                       long working_prec) {
    if (r < 1) raise(errc::domain_error, "need r >= 1");
    TrCheckReport rep;
    rep.r = r;
    rep.samples = sample_pairs;
    rep.worst = TrMargin{true, false, 0};
    for (const auto& [x, y] : sample_pairs) {
        LaurentPoly h = x - y;
        if (h.is_zero()) {
            // T_y reproduces psi(y) exactly at its own base point
            rep.margins.push_back(TrMargin{true, false, 0});
            continue;
        }
        long hord = h.ord();
        for (int comp = 0; comp < psi.components(); ++comp) {
            TrMargin margin;
            if (psi.exact()) {
                std::vector<LaurentPoly> tay = psi.taylor_exact(comp, y, r);
                LaurentPoly taylor_value;
                LaurentPoly hk(1);
                for (int k = 0; k < r; ++k) {
                    taylor_value += tay[static_cast<size_t>(k)] * hk;
                    hk *= h;
                }
                LaurentPoly diff = psi.eval_exact(comp, x) - taylor_value;
                if (diff.is_zero())
                    margin = TrMargin{true, false, 0};
                else
                    margin = TrMargin{false, false, diff.ord() - static_cast<long>(r) * hord};
            } else {
                std::vector<TruncSeries> tay = psi.taylor_series(comp, y, r, working_prec);
                TruncSeries taylor_value = TruncSeries::zero_to(working_prec);
                LaurentPoly hk(1);
                for (int k = 0; k < r; ++k) {
                    taylor_value = taylor_value + tay[static_cast<size_t>(k)] * hk;
                    hk *= h;
                }
                TruncSeries diff = psi.eval_series(comp, x, working_prec) - taylor_value;
                if (diff.is_zero_to_prec()) {
                    long bound = diff.prec() - static_cast<long>(r) * hord;
                    if (bound < 0)
                        raise(errc::insufficient_precision,
                              "margin sign unresolved at O(t^" + std::to_string(diff.prec()) + ")");
                    margin = TrMargin{false, true, bound};
                } else {
                    margin = TrMargin{false, false, diff.ord() - static_cast<long>(r) * hord};
                }
            }
            if (margin_less(margin, rep.worst)) rep.worst = margin;
            rep.margins.push_back(margin);
        }
    }
    rep.pass = rep.worst.passes();
    return rep;
}

DerivBoundReport derivative_bound_check(const PolyMap& f, std::span<const LaurentPoly> samples,
                                        int r) {
    if (r < 1) raise(errc::domain_error, "need r >= 1");
    DerivBoundReport rep;
    bool have_finite = false;
    long worst = 0;
    PolyMap deriv = f;
    for (int j = 1; j <= r; ++j) {
        deriv = deriv.derivative();
        for (const auto& y : samples) {
            if (y.is_zero()) raise(errc::domain_error, "samples must avoid 0");
            LaurentPoly v = deriv.eval(y);
            if (v.is_zero()) continue;
            long margin = v.ord() - static_cast<long>(r - j) * y.ord();
            if (!have_finite || margin < worst) worst = margin;
            have_finite = true;
        }
    }
    rep.all_infinite = !have_finite;
    rep.worst_margin = have_finite ? worst : 0;
    rep.pass = rep.all_infinite || rep.worst_margin >= 0;
    return rep;
}

} // namespace cdim
