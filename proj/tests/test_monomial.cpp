#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cdim/monomial.hpp"
#include "cdim/rng.hpp"

using namespace cdim;

namespace {

// independent enumeration oracle: count vectors in N^m with |a| == k (or <= k)
long brute_count(int m, int k, bool exactly) {
    if (k < 0) return 0;
    if (m == 1) return exactly ? 1 : k + 1;
    long total = 0;
    for (int first = 0; first <= k; ++first) total += brute_count(m - 1, k - first, exactly);
    return total;
}

Exponent ex(std::vector<int> v) { return Exponent(std::move(v)); }

} // namespace

TEST_CASE("monomial counts match brute enumeration") {
    for (int k = 0; k <= 8; ++k) CHECK(count_exact(1, k) == 1);
    CHECK(count_exact(2, 3) == 4);  // x^3, x^2 y, x y^2, y^3
    CHECK(count_exact(3, 2) == brute_count(3, 2, true));
    CHECK(count_exact(3, 2) == 6);

    CHECK(count_atmost(2, 2) == 6);
    for (int k = 0; k <= 10; ++k) CHECK(count_atmost(1, k) == k + 1);
    CHECK(count_atmost(3, 3) == brute_count(3, 3, false));
    CHECK(count_atmost(3, 3) == 20);

    CHECK(count_atmost(4, -1) == 0);
    CHECK_THROWS_AS(count_exact(0, 2), error);

    for (int m = 1; m <= 4; ++m)
        for (int k = 0; k <= 8; ++k) {
            CHECK(count_exact(m, k) == brute_count(m, k, true));
            CHECK(count_atmost(m, k) == brute_count(m, k, false));
        }
}

TEST_CASE("degree-at-most counts accumulate the exact ones") {
    for (int m = 1; m <= 4; ++m)
        for (int k = 0; k <= 8; ++k) {
            long sum = 0;
            for (int j = 0; j <= k; ++j) sum += count_exact(m, j);
            CHECK(count_atmost(m, k) == sum);
        }
}

TEST_CASE("grevlex comparison rule") {
    // equal degree: the larger entry at the first differing index loses
    CHECK(grevlex_cmp(ex({1, 0}), ex({0, 1})) == std::strong_ordering::less);
    CHECK(grevlex_cmp(ex({0, 2}), ex({1, 0})) == std::strong_ordering::greater); // degree wins
    CHECK(grevlex_cmp(ex({1, 1}), ex({1, 1})) == std::strong_ordering::equal);
    CHECK(grevlex_cmp(ex({1, 0, 1}), ex({0, 2, 0})) == std::strong_ordering::less);
    CHECK_THROWS_AS(grevlex_cmp(ex({1}), ex({1, 0})), error);
}

TEST_CASE("grevlex is a total order on Delta_3(3)") {
    ExponentSet set = enumerate_grevlex(3, 3, EnumerateMode::atmost);
    REQUIRE(set.size() == 20);
    for (const auto& a : set.members)
        for (const auto& b : set.members) {
            auto ab = grevlex_cmp(a, b);
            auto ba = grevlex_cmp(b, a);
            if (ab == std::strong_ordering::equal) {
                CHECK(a == b);
                CHECK(ba == std::strong_ordering::equal);
            } else {
                CHECK(ab != ba); // antisymmetry
            }
            for (const auto& c : set.members) {
                if (grevlex_cmp(a, b) == std::strong_ordering::less &&
                    grevlex_cmp(b, c) == std::strong_ordering::less)
                    CHECK(grevlex_cmp(a, c) == std::strong_ordering::less);
            }
        }
}

TEST_CASE("enumeration is ascending with the predicted cardinality") {
    ExponentSet small = enumerate_grevlex(2, 1, EnumerateMode::atmost);
    REQUIRE(small.size() == 3);
    CHECK(small.members[0] == ex({0, 0}));
    CHECK(small.members[1] == ex({1, 0})); // x0 < x1 under the rule above
    CHECK(small.members[2] == ex({0, 1}));

    ExponentSet line = enumerate_grevlex(1, 3, EnumerateMode::atmost);
    REQUIRE(line.size() == 4);
    for (int k = 0; k <= 3; ++k) CHECK(line.members[static_cast<size_t>(k)] == ex({k}));

    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int m = static_cast<int>(rng.range(1, 4));
        int k = static_cast<int>(rng.range(0, 8));
        ExponentSet exact = enumerate_grevlex(m, k, EnumerateMode::exact);
        CHECK(static_cast<long>(exact.size()) == count_exact(m, k));
        ExponentSet atmost = enumerate_grevlex(m, k, EnumerateMode::atmost);
        CHECK(static_cast<long>(atmost.size()) == count_atmost(m, k));
        for (size_t i = 1; i < atmost.members.size(); ++i)
            CHECK(grevlex_cmp(atmost.members[i - 1], atmost.members[i]) ==
                  std::strong_ordering::less);
    }
}

TEST_CASE("determinant-method parameters") {
    DmParameters p2 = dm_parameters(2, 1, 2);
    CHECK(p2.mu == 6);
    CHECK(p2.r == 6);
    CHECK(p2.V == 8);
    CHECK(p2.e == 15);

    DmParameters p1 = dm_parameters(2, 1, 1);
    CHECK(p1.mu == 3);
    CHECK(p1.r == 3);
    CHECK(p1.V == 2);
    CHECK(p1.e == 3);

    DmParameters p10 = dm_parameters(2, 1, 10);
    CHECK(p10.mu == 66);
    CHECK(p10.V == 440);
    CHECK(p10.e == 2145);

    CHECK_THROWS_AS(dm_parameters(1, 1, 2), error);
    CHECK_THROWS_AS(dm_parameters(2, 0, 2), error);
}

TEST_CASE("parameter bracketing and the m=1 closed form") {
    for (int n = 2; n <= 4; ++n)
        for (int m = 1; m < n; ++m)
            for (int d = 1; d <= 10; ++d) {
                DmParameters p = dm_parameters(n, m, d);
                CHECK(count_atmost(m, static_cast<int>(p.r) - 1) <= p.mu);
                CHECK(p.mu < count_atmost(m, static_cast<int>(p.r)));
                CHECK(p.e >= 1);
            }
    for (int d = 1; d <= 30; ++d) {
        DmParameters p = dm_parameters(2, 1, d);
        CHECK(p.e == p.mu * (p.mu - 1) / 2);
    }
}

TEST_CASE("V/e ratios decrease and cross the recorded thresholds") {
    std::vector<VeRow> rows = ve_ratio_table(2, 1, 30);
    REQUIRE(rows.size() == 30);
    CHECK(rows[1].ratio == Scalar(8, 15));
    CHECK(rows[3].V == 40);
    CHECK(rows[3].e == 105);
    CHECK(rows[3].ratio == Scalar(8, 21)); // 40/105 reduced

    for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].ratio < rows[i - 1].ratio);

    auto first_below = [&](const Scalar& eps) {
        for (const auto& r : rows)
            if (r.ratio < eps) return r.d;
        return -1;
    };
    CHECK(first_below(Scalar(1, 2)) == 3);
    CHECK(first_below(Scalar(1, 5)) == 11);
    CHECK(first_below(Scalar(1, 10)) == 24);
}

TEST_CASE("ve table csv format") {
    std::ostringstream out;
    write_ve_csv(out, ve_ratio_table(2, 1, 2));
    CHECK(out.str() == "d,V,e,ratio_num,ratio_den\n1,2,3,2,3\n2,8,15,8,15\n");
}
