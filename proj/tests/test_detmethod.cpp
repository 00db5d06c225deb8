#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cdim/detmethod.hpp"
#include "cdim/rng.hpp"

using namespace cdim;

namespace {

LaurentPoly lp(const char* text) { return LaurentPoly::parse(text); }

using Matrix = std::vector<std::vector<LaurentPoly>>;

// independent determinant oracle: cofactor expansion along the first row
LaurentPoly cofactor_det(const Matrix& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    LaurentPoly acc;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        Matrix minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<LaurentPoly> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        LaurentPoly term = m[0][j] * cofactor_det(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

LaurentPoly random_poly(Rng& rng, int max_deg, int terms = 3) {
    LaurentPoly p;
    for (int i = 0; i < terms; ++i) p.set_coeff(rng.range(0, max_deg), rng.rational(4, 2));
    return p;
}

std::vector<std::vector<LaurentPoly>> points_on_parabola(const std::vector<LaurentPoly>& xs) {
    std::vector<std::vector<LaurentPoly>> pts;
    for (const auto& x : xs) pts.push_back({x, x * x});
    return pts;
}

// Sylvester resultant of two polynomials in y over k[x] (coefficients by
// ascending y-degree, x riding on the Laurent variable); intersection oracle.
LaurentPoly resultant_y(const std::vector<LaurentPoly>& f, const std::vector<LaurentPoly>& g) {
    size_t m = f.size() - 1, n = g.size() - 1;
    size_t size = m + n;
    Matrix sylv(size, std::vector<LaurentPoly>(size));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j <= m; ++j) sylv[i][i + j] = f[m - j];
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j <= n; ++j) sylv[n + i][i + j] = g[n - j];
    return det_fraction_free(sylv).det;
}

} // namespace

TEST_CASE("matrix building") {
    ExponentSet d1 = enumerate_grevlex(2, 1, EnumerateMode::atmost);
    PointMatrix m = build_matrix({{lp("1"), lp("1")}}, d1);
    REQUIRE(m.rows() == 1);
    REQUIRE(m.cols() == 3);
    for (const auto& entry : m.entries[0]) CHECK(entry == lp("1"));

    ExponentSet just_xy{2, {Exponent({1, 1})}};
    PointMatrix m2 = build_matrix({{lp("t"), lp("t^2")}}, just_xy);
    CHECK(m2.entries[0][0] == lp("t^3"));

    CHECK_THROWS_AS(build_matrix({{lp("t^-1"), lp("1")}}, d1), error);
    CHECK_THROWS_AS(build_matrix({}, d1), error);
}

TEST_CASE("six parabola points over degree-2 monomials are dependent") {
    ExponentSet d2 = enumerate_grevlex(2, 2, EnumerateMode::atmost);
    std::vector<LaurentPoly> xs;
    for (int i = 1; i <= 6; ++i) xs.push_back(lp("t") * Scalar(i) + LaurentPoly(i % 3));
    PointMatrix m = build_matrix(points_on_parabola(xs), d2);

    // the x^2 and y columns coincide on the curve
    size_t col_x2 = 0, col_y = 0;
    for (size_t j = 0; j < d2.members.size(); ++j) {
        if (d2.members[j] == Exponent({2, 0})) col_x2 = j;
        if (d2.members[j] == Exponent({0, 1})) col_y = j;
    }
    for (size_t i = 0; i < 6; ++i) CHECK(m.entries[i][col_x2] == m.entries[i][col_y]);

    CHECK(det_fraction_free(m).det.is_zero());
}

TEST_CASE("determinants of small hand matrices") {
    CHECK(det_fraction_free(Matrix{{lp("t"), lp("1")}, {lp("t^2"), lp("t")}}).det.is_zero());
    DetReport one = det_fraction_free(Matrix{{lp("1"), lp("1")}, {lp("1"), lp("2")}});
    CHECK(one.det == lp("1"));
    CHECK(one.ord == 0);
    CHECK(one.deg == 0);
    CHECK_THROWS_AS(det_fraction_free(Matrix{{lp("1"), lp("2")}}), error);

    // zero pivots force row swaps; the sign must follow the permutation
    CHECK(det_fraction_free(Matrix{{lp("0"), lp("1")}, {lp("1"), lp("0")}}).det == lp("-1"));
    Matrix perm3{{lp("0"), lp("0"), lp("1")},
                 {lp("1"), lp("0"), lp("0")},
                 {lp("0"), lp("1"), lp("0")}};
    CHECK(det_fraction_free(perm3).det == lp("1"));
    Matrix hollow{{lp("0"), lp("t")}, {lp("0"), lp("1 + t")}};
    CHECK(det_fraction_free(hollow).det.is_zero());
}

TEST_CASE("fraction-free determinant agrees with cofactor expansion") {
    Rng rng(1001);
    for (int trial = 0; trial < 60; ++trial) {
        size_t n = static_cast<size_t>(rng.range(1, 4));
        Matrix m(n, std::vector<LaurentPoly>(n));
        for (auto& row : m)
            for (auto& entry : row) entry = random_poly(rng, 3, 2);
        CHECK(det_fraction_free(m).det == cofactor_det(m));
    }
}

TEST_CASE("certify_bounds verdicts") {
    DmParameters p = dm_parameters(2, 1, 2);
    REQUIRE(p.e == 15);

    // height-1 points: six copies of one constant point on y = x^2
    ExponentSet d2 = enumerate_grevlex(2, 2, EnumerateMode::atmost);
    std::vector<LaurentPoly> xs(6, lp("2"));
    PointMatrix m = build_matrix(points_on_parabola(xs), d2);
    DetReport rep = det_fraction_free(m);
    CHECK(certify_bounds(rep, 1, p.e, 1, p.V) == Verdict::forced_zero); // 15 > sV = 8
    CHECK(rep.lower_bound_ok);
    CHECK(rep.upper_bound == 8);

    // a nonzero determinant satisfying both bounds
    DetReport ok = det_fraction_free(Matrix{{lp("1"), lp("1")}, {lp("1"), lp("2")}});
    CHECK(certify_bounds(ok, 1, 0, 2, 5) == Verdict::consistent);

    // points in distinct balls: the fibre hypothesis genuinely fails
    ExponentSet line = enumerate_grevlex(1, 1, EnumerateMode::atmost);
    PointMatrix broken = build_matrix({{lp("0")}, {lp("1")}}, line);
    DetReport bad = det_fraction_free(broken);
    CHECK(bad.det == lp("1"));
    CHECK(certify_bounds(bad, 1, 1, 2, 10) == Verdict::violation);
    CHECK(!bad.lower_bound_ok);
}

TEST_CASE("degree budgets") {
    ExponentSet d2 = enumerate_grevlex(2, 2, EnumerateMode::atmost);
    // sum of |alpha| over Delta_2(2) is V(2,2) = 8
    CHECK(height_degree_budget(d2, 3) == 16);
    CHECK(height_degree_budget(d2, 1) == 0);

    std::vector<LaurentPoly> xs{lp("1 + t"), lp("2 + t"), lp("1 - t"),
                                lp("3 + t"), lp("4 + t"), lp("5 + t")};
    PointMatrix m = build_matrix(points_on_parabola(xs), d2);
    // columns 1, x, y, x^2, xy, y^2 have degrees 0, 1, 2, 2, 3, 4; the
    // points are height-3 (the y coordinates have degree 2)
    CHECK(matrix_degree_budget(m) == 12);
    CHECK(matrix_degree_budget(m) <= height_degree_budget(d2, 3));
}

TEST_CASE("kernel hypersurface recovers the parabola") {
    ExponentSet d2 = enumerate_grevlex(2, 2, EnumerateMode::atmost);
    std::vector<LaurentPoly> xs;
    for (int i = 1; i <= 6; ++i) xs.push_back(lp("t") + LaurentPoly(i));
    auto pts = points_on_parabola(xs);
    PointMatrix m = build_matrix(pts, d2);
    Hypersurface h = kernel_hypersurface(m);
    CHECK(verify_vanishing(h, pts));
    CHECK(h.degree() == 2);
    // supported on exactly {y, x^2}, proportional to y - x^2
    for (size_t j = 0; j < d2.members.size(); ++j) {
        bool expected = d2.members[j] == Exponent({2, 0}) || d2.members[j] == Exponent({0, 1});
        CHECK(h.coeffs[j].is_zero() == !expected);
    }
    size_t first = 0;
    while (h.coeffs[first].is_zero()) ++first;
    CHECK(h.coeffs[first].terms().begin()->second == 1);
}

TEST_CASE("kernel hypersurface through collinear points") {
    ExponentSet d1 = enumerate_grevlex(2, 1, EnumerateMode::atmost);
    std::vector<std::vector<LaurentPoly>> pts;
    for (int i = 0; i < 3; ++i)
        pts.push_back({LaurentPoly(i), LaurentPoly(2 * i + 1)}); // y = 2x + 1
    Hypersurface h = kernel_hypersurface(build_matrix(pts, d1));
    CHECK(verify_vanishing(h, pts));
    CHECK(h.degree() == 1);

    // one point, exponents {1, x}: the hypersurface x - x0
    ExponentSet e1{1, {Exponent({0}), Exponent({1})}};
    std::vector<std::vector<LaurentPoly>> single{{lp("2 + t")}};
    Hypersurface hx = kernel_hypersurface(build_matrix(single, e1));
    CHECK(verify_vanishing(hx, single));

    // a full-column-rank matrix has no kernel
    ExponentSet line = enumerate_grevlex(1, 1, EnumerateMode::atmost);
    CHECK_THROWS_AS(kernel_hypersurface(build_matrix({{lp("0")}, {lp("1")}}, line)), error);
}

TEST_CASE("kernel output always vanishes and has a unit coefficient") {
    Rng rng(321);
    ExponentSet d2 = enumerate_grevlex(2, 2, EnumerateMode::atmost);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<LaurentPoly> xs;
        for (int i = 0; i < 5; ++i) xs.push_back(random_poly(rng, 2, 2));
        auto pts = points_on_parabola(xs);
        PointMatrix m = build_matrix(pts, d2); // 5 x 6: a kernel always exists
        Hypersurface h = kernel_hypersurface(m);
        CHECK(verify_vanishing(h, pts));
        bool has_unit = false;
        for (const auto& c : h.coeffs)
            if (!c.is_zero() && c.ord() == 0) has_unit = true;
        CHECK(has_unit);
    }
}

TEST_CASE("column dependence survives exponent-set growth") {
    Rng rng(808);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<LaurentPoly> xs;
        for (int i = 0; i < 4; ++i) xs.push_back(random_poly(rng, 1, 2));
        auto pts = points_on_parabola(xs);
        ExponentSet small = enumerate_grevlex(2, 2, EnumerateMode::atmost);
        ExponentSet big = enumerate_grevlex(2, 3, EnumerateMode::atmost);
        CHECK_NOTHROW(kernel_hypersurface(build_matrix(pts, small)));
        CHECK_NOTHROW(kernel_hypersurface(build_matrix(pts, big)));
    }
}

TEST_CASE("vanishing verification") {
    ExponentSet d2 = enumerate_grevlex(2, 2, EnumerateMode::atmost);
    Hypersurface h;
    h.arity = 2;
    h.exponents = d2;
    h.coeffs.assign(6, LaurentPoly());
    for (size_t j = 0; j < 6; ++j) {
        if (d2.members[j] == Exponent({0, 1})) h.coeffs[j] = lp("1");
        if (d2.members[j] == Exponent({2, 0})) h.coeffs[j] = lp("-1");
    }
    CHECK(verify_vanishing(h, {{lp("t"), lp("t^2")}}));
    CHECK(!verify_vanishing(h, {{lp("t"), lp("t^3")}}));
}

TEST_CASE("bezout bound and the resultant oracle") {
    CHECK(bezout_bound(3, 2) == 6);
    CHECK(bezout_bound(5, 4) == 20);
    CHECK_THROWS_AS(bezout_bound(0, 2), error);

    // hypersurface of degree <= 2 through five points of y = x^3; it cannot
    // contain the cubic, so the resultant is nonzero and its degree bounds
    // the intersection count
    ExponentSet d2 = enumerate_grevlex(2, 2, EnumerateMode::atmost);
    std::vector<std::vector<LaurentPoly>> pts;
    for (int i = 1; i <= 5; ++i) {
        LaurentPoly x = LaurentPoly(i);
        pts.push_back({x, x * x * x});
    }
    Hypersurface h = kernel_hypersurface(build_matrix(pts, d2));
    CHECK(verify_vanishing(h, pts));

    // H as a polynomial in y over k[x], substituting x -> t
    std::vector<LaurentPoly> f{lp("-t^3"), lp("1")}; // y - x^3
    std::vector<LaurentPoly> g(3);
    for (size_t j = 0; j < d2.members.size(); ++j) {
        const Exponent& e = d2.members[j];
        if (h.coeffs[j].is_zero()) continue;
        g[static_cast<size_t>(e[1])] += h.coeffs[j] * lp("t").pow(static_cast<unsigned long>(e[0]));
    }
    while (g.size() > 1 && g.back().is_zero()) g.pop_back();
    REQUIRE(g.size() >= 2); // H genuinely involves y
    LaurentPoly res = resultant_y(f, g);
    CHECK(!res.is_zero());
    CHECK(res.degree() <= bezout_bound(3, 2));
}

TEST_CASE("polynomial maps satisfy every-order approximation exactly") {
    PolyGraphMap sq({PolyMap::power(2)});
    std::vector<std::pair<LaurentPoly, LaurentPoly>> pairs{
        {lp("1 + t"), lp("1 + t + t^2")}, {lp("t"), lp("t + t^3")}, {lp("2"), lp("2 + t^2")}};
    TrCheckReport rep = tr_check(sq, pairs, 3);
    CHECK(rep.pass);
    CHECK(rep.worst.infinite);
}

TEST_CASE("exponential approximation margins come from the series tail") {
    ExpMap expmap;
    std::vector<std::pair<LaurentPoly, LaurentPoly>> pairs{{lp("t + t^2"), lp("t")},
                                                           {lp("t - 2*t^2 + t^3"), lp("t + t^3")}};
    for (const auto& [x, y] : pairs) REQUIRE((x - y).ord() == 2);
    TrCheckReport rep = tr_check(expmap, pairs, 2, 32);
    CHECK(rep.pass);
    CHECK(!rep.worst.infinite);
    CHECK(rep.worst.value == 0); // ord of exp(y)(e^h - 1 - h) is 2 ord(h)

    // unresolvable margins raise instead of guessing
    std::vector<std::pair<LaurentPoly, LaurentPoly>> deep{{lp("t + t^20"), lp("t")}};
    CHECK_THROWS_AS(tr_check(expmap, deep, 3, 8), error);
}

namespace {

// deliberately wrong Taylor data: degree-2 map reported with the quadratic
// coefficient dropped
class TruncatedTaylorMap : public CurveMap {
public:
    int components() const override { return 1; }
    bool exact() const override { return true; }
    LaurentPoly eval_exact(int, const LaurentPoly& x) const override { return x * x; }
    std::vector<LaurentPoly> taylor_exact(int, const LaurentPoly& y, int r) const override {
        auto tay = PolyMap::power(2).taylor_at(y, r);
        for (size_t k = 2; k < tay.size(); ++k) tay[k] = LaurentPoly();
        return tay;
    }
};

} // namespace

TEST_CASE("a truncated taylor expansion fails the degree-3 check") {
    TruncatedTaylorMap bad;
    std::vector<std::pair<LaurentPoly, LaurentPoly>> pairs{{lp("t + t^2"), lp("t")}};
    // residual is h^2 with ord 4; margin 4 - 3*2 = -2
    TrCheckReport rep = tr_check(bad, pairs, 3);
    CHECK(!rep.pass);
    CHECK(rep.worst.value == -2);
}

TEST_CASE("power substitutions") {
    PolyMap p2 = power_substitution(Scalar(1), 0, LaurentPoly(), LaurentPoly(), 2);
    CHECK(p2.eval(lp("1 + t")) == lp("1 + 2*t + t^2"));

    PolyMap p3 = power_substitution(Scalar(1), 1, LaurentPoly(), LaurentPoly(), 3);
    CHECK(p3.eval(lp("1")) == lp("t"));

    PolyMap shifted = power_substitution(Scalar(2), 1, lp("1"), lp("3"), 2);
    // 2t(y-1)^2 + 3 at y = 1 + t is 2t^3 + 3
    CHECK(shifted.eval(lp("1 + t")) == lp("3 + 2*t^3"));

    CHECK_THROWS_AS(power_substitution(Scalar(0), 0, LaurentPoly(), LaurentPoly(), 2), error);
}

TEST_CASE("polynomial maps track precision on truncated inputs") {
    PolyMap e3 = PolyMap::exp_truncation(3);
    TruncSeries x = TruncSeries::from_poly(lp("t + 2*t^2"), 5);
    TruncSeries y = e3.eval(x);
    CHECK(y.prec() == 5);
    // agrees with the exact evaluation on the known range
    CHECK(y.agrees_with(TruncSeries::from_poly(e3.eval(lp("t + 2*t^2")), 5)));
    // substitutions accept truncated arguments too
    PolyMap p2 = power_substitution(Scalar(1), 1, lp("1"), LaurentPoly(), 2);
    TruncSeries z = p2.eval(TruncSeries::from_poly(lp("1 + t"), 4));
    CHECK(z.agrees_with(TruncSeries::from_poly(lp("t^3"), 4)));
}

TEST_CASE("composed substitutions satisfy the derivative bounds") {
    PolyMap f = PolyMap::identity();
    PolyMap composed = f.compose(power_substitution(Scalar(1), 0, LaurentPoly(), LaurentPoly(), 2));
    CHECK(composed.degree() == 2);

    PolyGraphMap graph({composed});
    std::vector<std::pair<LaurentPoly, LaurentPoly>> pairs{{lp("1 + t"), lp("1 + t^2")},
                                                           {lp("2 + t"), lp("2 - t^3")}};
    CHECK(tr_check(graph, pairs, 2).pass);

    std::vector<LaurentPoly> samples{lp("1"), lp("1 + t"), lp("t"), lp("2*t^2")};
    CHECK(derivative_bound_check(composed, samples, 2).pass);
    CHECK(derivative_bound_check(PolyMap::power(2), samples, 2).pass);
    CHECK_THROWS_AS(derivative_bound_check(PolyMap::power(2), std::vector<LaurentPoly>{lp("0")}, 2),
                    error);
}
