#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdim/multipoly.hpp"
#include "cdim/rng.hpp"
#include "cdim/series.hpp"

using namespace cdim;

namespace {

LaurentPoly lp(const char* text) { return LaurentPoly::parse(text); }

LaurentPoly random_laurent(Rng& rng, long min_deg = -3, long max_deg = 5, int terms = 4) {
    LaurentPoly p;
    for (int i = 0; i < terms; ++i) p.set_coeff(rng.range(min_deg, max_deg), rng.rational());
    return p;
}

} // namespace

TEST_CASE("laurent ring operations") {
    CHECK(lp("1 + t") * lp("1 - t") == lp("1 - t^2"));
    CHECK(lp("t^2 + t^3") + lp("-t^2") == lp("t^3"));
    CHECK(-lp("2*t - 1") == lp("1 - 2*t"));
    CHECK(lp("t^-1") * lp("t") == lp("1"));
}

TEST_CASE("laurent ring laws on random triples") {
    Rng rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        LaurentPoly a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == LaurentPoly());
    }
}

TEST_CASE("ord_t") {
    CHECK(lp("t^2 + t^3").ord() == 2);
    CHECK(LaurentPoly().ord() == kOrdInf);
    CHECK(lp("3*t^-2 + 1").ord() == -2);
    CHECK_THROWS_AS((void)TruncSeries::zero_to(5).ord(), error);
    try {
        (void)TruncSeries::zero_to(5).ord();
    } catch (const error& e) {
        CHECK(e.code() == errc::indeterminate_valuation);
    }
}

TEST_CASE("valuation is additive and ultrametric") {
    Rng rng(777);
    for (int trial = 0; trial < 50; ++trial) {
        LaurentPoly a = random_laurent(rng), b = random_laurent(rng);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a * b).ord() == a.ord() + b.ord());
        LaurentPoly sum = a + b;
        if (!sum.is_zero()) {
            CHECK(sum.ord() >= std::min(a.ord(), b.ord()));
            if (a.ord() != b.ord()) CHECK(sum.ord() == std::min(a.ord(), b.ord()));
        }
    }
}

TEST_CASE("truncated product tracks valuation and precision") {
    // two series with prec 5 and valuations 1 and 2
    TruncSeries a = TruncSeries::from_poly(lp("t + 2*t^2"), 5);
    TruncSeries b = TruncSeries::from_poly(lp("t^2 - t^3"), 5);
    TruncSeries p = a * b;
    CHECK(p.ord() == 3);
    CHECK(p.prec() == 6);
    CHECK(p.known_part() == lp("t^3 + t^4 - 2*t^5"));
}

TEST_CASE("series addition keeps the lower precision") {
    TruncSeries a = TruncSeries::from_poly(lp("1 + t"), 4);
    TruncSeries b = TruncSeries::from_poly(lp("t^2"), 7);
    CHECK((a + b).prec() == 4);
    CHECK((a - a).is_zero_to_prec());
}

TEST_CASE("mixed exact/truncated arithmetic promotes the exact operand") {
    TruncSeries s = TruncSeries::from_poly(lp("1 + t"), 4);
    CHECK((lp("t^2") + s).prec() == 4);
    CHECK((lp("t^2") + s).known_part() == lp("1 + t + t^2"));
    CHECK((s - lp("1")).known_part() == lp("t"));
    // an exact factor of valuation k raises the product's precision by k
    TruncSeries prod = lp("t^3") * s;
    CHECK(prod.prec() == 7);
    CHECK(prod.known_part() == lp("t^3 + t^4"));
    CHECK((LaurentPoly() * s).is_zero_to_prec());
}

TEST_CASE("exp of a truncated argument keeps the argument's precision") {
    TruncSeries z = TruncSeries::from_poly(lp("t"), 3);
    TruncSeries e = exp_series(z, 10);
    CHECK(e.prec() == 3);
    CHECK(e.known_part() == lp("1 + t + 1/2*t^2"));
    CHECK_THROWS_AS(exp_series(TruncSeries::from_poly(lp("1 + t"), 4), 6), error);
    // zero to precision p: exp is 1 + O(t^p)
    TruncSeries near_zero = exp_series(TruncSeries::zero_to(5), 9);
    CHECK(near_zero.prec() == 5);
    CHECK(near_zero.known_part() == lp("1"));
}

TEST_CASE("residue truncation") {
    CHECK(residue_truncate(lp("1 + 3*t + t^5"), 2) == ResidueClass(2, lp("1 + 3*t")));
    CHECK(residue_truncate(lp("t^3"), 3) == ResidueClass(3, LaurentPoly()));
    CHECK_THROWS_AS(residue_truncate(lp("t^-1"), 2), error);

    // reduction mod t^e forgets t^s coefficients entirely once e <= s
    LaurentPoly a = lp("2 + t");
    const int s = 3;
    LaurentPoly perturbed = a + LaurentPoly::term(s, Scalar(5));
    for (long e = 1; e <= s; ++e)
        CHECK(residue_truncate(perturbed, e) == residue_truncate(a, e));
}

TEST_CASE("residue truncation needs enough known coefficients") {
    TruncSeries a = TruncSeries::from_poly(lp("1 + t"), 3);
    CHECK(residue_truncate(a, 3) == ResidueClass(3, lp("1 + t")));
    CHECK_THROWS_AS(residue_truncate(a, 4), error);
}

TEST_CASE("residue_truncate is a ring homomorphism") {
    Rng rng(4242);
    for (int trial = 0; trial < 30; ++trial) {
        LaurentPoly a = random_laurent(rng, 0, 5), b = random_laurent(rng, 0, 5);
        long e = rng.range(1, 4);
        CHECK(residue_truncate(a + b, e) == residue_truncate(a, e) + residue_truncate(b, e));
        CHECK(residue_truncate(a * b, e) == residue_truncate(a, e) * residue_truncate(b, e));
    }
}

TEST_CASE("series inversion") {
    TruncSeries geom = invert_series(TruncSeries::from_poly(lp("1 - t"), 4));
    CHECK(geom.known_part() == lp("1 + t + t^2 + t^3"));
    CHECK(geom.prec() == 4);

    TruncSeries tinv = invert_series(TruncSeries::from_poly(lp("t"), 3));
    CHECK(tinv.known_part() == lp("t^-1"));
    CHECK(tinv.prec() == 1);
    CHECK(tinv.ord() == -1);

    TruncSeries half = invert_series(TruncSeries::from_poly(lp("2 + t"), 3));
    CHECK(half.known_part() == lp("1/2 - 1/4*t + 1/8*t^2"));

    CHECK_THROWS_AS(invert_series(TruncSeries::zero_to(4)), error);
}

TEST_CASE("inversion round-trips") {
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        LaurentPoly p = random_laurent(rng, -2, 3);
        if (p.is_zero()) continue;
        TruncSeries a = TruncSeries::from_poly(p, p.ord() + 5);
        TruncSeries prod = a * invert_series(a);
        CHECK(prod.agrees_with(TruncSeries::from_poly(LaurentPoly(1), prod.prec())));
    }
}

TEST_CASE("series exponential") {
    TruncSeries e1 = exp_series(lp("t"), 4);
    CHECK(e1.known_part() == lp("1 + t + 1/2*t^2 + 1/6*t^3"));

    CHECK(exp_series(LaurentPoly(), 5).known_part() == lp("1"));

    TruncSeries e2 = exp_series(lp("t + t^2"), 4);
    CHECK(e2.known_part() == lp("1 + t + 3/2*t^2 + 7/6*t^3"));

    CHECK_THROWS_AS(exp_series(lp("1 + t"), 4), error);
    CHECK_THROWS_AS(exp_series(lp("t^-1"), 4), error);
}

TEST_CASE("exp is a homomorphism to the working precision") {
    Rng rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        LaurentPoly z1 = random_laurent(rng, 1, 4, 3);
        LaurentPoly z2 = random_laurent(rng, 1, 4, 3);
        const long prec = 9;
        TruncSeries lhs = exp_series(z1 + z2, prec);
        TruncSeries rhs = exp_series(z1, prec) * exp_series(z2, prec);
        CHECK(lhs.agrees_with(rhs));
    }
}

TEST_CASE("coefficient scaling") {
    CHECK(coeff_scale(lp("1 + 3*t + t^2"), Scalar(2)) == lp("1 + 6*t + 4*t^2"));
    LaurentPoly a = lp("5 - t + 2*t^3");
    CHECK(coeff_scale(a, Scalar(1)) == a);
    CHECK_THROWS_AS(coeff_scale(a, Scalar(0)), error);
    // negative degrees scale by inverse powers
    CHECK(coeff_scale(lp("t^-2"), Scalar(2)) == lp("1/4*t^-2"));
}

TEST_CASE("coefficient scaling is a ring homomorphism") {
    Rng rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        LaurentPoly x = random_laurent(rng), y = random_laurent(rng);
        Scalar l = rng.nonzero_rational();
        Scalar m = rng.nonzero_rational();
        CHECK(coeff_scale(x * y, l) == coeff_scale(x, l) * coeff_scale(y, l));
        CHECK(coeff_scale(x + y, l) == coeff_scale(x, l) + coeff_scale(y, l));
        CHECK(coeff_scale(coeff_scale(x, m), l) == coeff_scale(x, l * m));
        CHECK(coeff_scale(LaurentPoly(7), l) == LaurentPoly(7));
        CHECK(coeff_scale(LaurentPoly::t(), l) == LaurentPoly::term(1, l));
    }
}

TEST_CASE("coefficient scaling commutes with the exponential") {
    // scaling by lambda maps the graph of exp into itself:
    // exp(a_j (lambda t)^j) = tau_lambda(exp(a_j t^j))
    Rng rng(86);
    for (int trial = 0; trial < 20; ++trial) {
        LaurentPoly z = random_laurent(rng, 1, 4, 3);
        Scalar l = rng.nonzero_rational();
        const long prec = 9;
        TruncSeries lhs = exp_series(coeff_scale(z, l), prec);
        TruncSeries rhs = coeff_scale(exp_series(z, prec), l);
        CHECK(lhs.agrees_with(rhs));
    }
}

TEST_CASE("polynomial evaluation at series points") {
    MultiPoly f = MultiPoly::parse("y - x^2", 2, {"x", "y"});
    std::vector<LaurentPoly> pt{lp("t"), lp("t^2")};
    CHECK(f.eval(pt).is_zero());

    MultiPoly g = MultiPoly::parse("x + y", 2, {"x", "y"});
    std::vector<LaurentPoly> ones{lp("1"), lp("-1")};
    CHECK(g.eval(ones).is_zero());

    MultiPoly h = MultiPoly::parse("y^2 - x^3 - 1", 2, {"x", "y"});
    std::vector<LaurentPoly> p3{lp("t"), lp("1")};
    CHECK(h.eval(p3) == lp("-t^3"));

    std::vector<LaurentPoly> wrong{lp("t")};
    CHECK_THROWS_AS(h.eval(wrong), error);

    // truncated points propagate their precision
    std::vector<TruncSeries> ts{TruncSeries::from_poly(lp("t"), 5),
                                TruncSeries::from_poly(lp("t^2"), 5)};
    CHECK(f.eval(ts).is_zero_to_prec());
}

TEST_CASE("text round-trips on canonical forms") {
    Rng rng(555);
    for (int trial = 0; trial < 60; ++trial) {
        LaurentPoly p = random_laurent(rng);
        CHECK(LaurentPoly::parse(p.str()) == p);
    }
    CHECK(lp("0").is_zero());
    CHECK_THROWS_AS(lp("1 +"), error);
    CHECK_THROWS_AS(lp("t^"), error);
    CHECK_THROWS_AS(lp(""), error);
}

TEST_CASE("scalar parsing") {
    CHECK(parse_scalar("3/4") == Scalar(3, 4));
    CHECK(parse_scalar("-1.25") == Scalar(-5, 4));
    CHECK(parse_scalar("7") == 7);
    CHECK(scalar_str(Scalar(-6, 4)) == "-3/2");
    CHECK_THROWS_AS(parse_scalar("1/0"), error);
    CHECK_THROWS_AS(parse_scalar("x"), error);
}
