#include "cdim/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "cdim/curves.hpp"
#include "cdim/fp.hpp"

namespace cdim {

namespace {

struct CheckContext {
    std::ostringstream log;
    bool ok = true;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            log << "    failed: " << what << "\n";
        }
    }
};

// ---------------------------------------------------------------- criterion 1

void parameter_formulas(CheckContext& c) {
    std::vector<VeRow> rows = ve_ratio_table(2, 1, 30);
    for (int d = 1; d <= 30; ++d) {
        DmParameters p = dm_parameters(2, 1, d);
        c.require(p.e == p.mu * (p.mu - 1) / 2, "e = mu(mu-1)/2 at d=" + std::to_string(d));
    }
    for (size_t i = 1; i < rows.size(); ++i)
        c.require(rows[i].ratio < rows[i - 1].ratio,
                  "V/e strictly decreasing at d=" + std::to_string(rows[i].d));
    int first_below = -1;
    for (const auto& r : rows)
        if (r.ratio < Scalar(1, 10)) {
            first_below = r.d;
            break;
        }
    c.require(first_below == 24, "V/e first drops below 1/10 at the recorded d=24");
}

// ---------------------------------------------------------------- criterion 2

void determinant_estimate(CheckContext& c) {
    const DmParameters p = dm_parameters(2, 1, 2); // mu=6, r=6, e=15
    const ExponentSet exps = enumerate_grevlex(2, 2, EnumerateMode::atmost);
    Rng rng(20250808);
    for (int trial = 0; trial < 200; ++trial) {
        int rho = 1 + trial % 3;
        PolyMap graph = (trial % 2 == 0) ? PolyMap::power(2)
                                         : PolyMap::exp_truncation(3 + trial % 2);
        GraphFiberSample sample = sample_graph_fiber(graph, static_cast<int>(p.mu), rho, 1, 1, rng);

        // the fibre and approximation hypotheses, asserted per experiment
        PolyGraphMap psi({PolyMap::identity(), graph});
        std::vector<std::pair<LaurentPoly, LaurentPoly>> pairs;
        for (size_t i = 1; i < sample.points.size(); ++i)
            pairs.push_back({sample.points[i][0], sample.points[0][0]});
        TrCheckReport tr = tr_check(psi, pairs, static_cast<int>(p.r));
        c.require(tr.pass, "approximation hypothesis at trial " + std::to_string(trial));

        PointMatrix m = build_matrix(sample.points, exps);
        DetReport det = det_fraction_free(m);
        bool ord_ok = det.det.is_zero() || det.ord >= static_cast<long>(rho) * p.e;
        c.require(ord_ok, "ord(det) >= rho*e at trial " + std::to_string(trial));
        if (!c.ok) return;
    }
}

// ---------------------------------------------------------------- criterion 3

void hypersurface_capture(CheckContext& c) {
    const DmParameters p = dm_parameters(2, 1, 3); // mu=10, e=45, V=20
    const ExponentSet exps = enumerate_grevlex(2, 3, EnumerateMode::atmost);
    const int s = 5, rho = 2;
    const long budget = height_degree_budget(exps, s); // (s-1) V = 80 < rho e = 90
    Rng rng(424242);
    int forced_seen = 0;
    for (int trial = 0; trial < 100; ++trial) {
        PolyMap graph;
        switch (trial % 3) {
        case 0: graph = PolyMap::power(2); break;
        case 1: graph = PolyMap::exp_truncation(2); break;
        default:
            graph = PolyMap({LaurentPoly(rng.rational(3, 2)), LaurentPoly(rng.rational(3, 2)),
                             LaurentPoly(rng.nonzero_rational(3, 2))});
        }
        // x_i = c + u_i t^rho with distinct constants u_i: height-5 points
        LaurentPoly center;
        center.set_coeff(0, rng.rational(3, 2));
        center.set_coeff(1, rng.rational(3, 2));
        std::vector<std::vector<LaurentPoly>> pts;
        std::vector<Scalar> used;
        while (pts.size() < static_cast<size_t>(p.mu)) {
            Scalar u = rng.nonzero_rational(6, 3);
            if (std::find(used.begin(), used.end(), u) != used.end()) continue;
            used.push_back(u);
            LaurentPoly x = center + LaurentPoly::term(rho, u);
            pts.push_back({x, graph.eval(x)});
        }
        for (const auto& pt : pts)
            c.require(pt[0].degree() < s && pt[1].degree() < s,
                      "sampled point has height >= s at trial " + std::to_string(trial));

        PointMatrix m = build_matrix(pts, exps);
        DetReport det = det_fraction_free(m);
        Verdict v = certify_bounds(det, rho, p.e, s, budget);
        c.require(v == Verdict::forced_zero,
                  std::string("expected forced_zero, got ") + verdict_name(v) + " at trial " +
                      std::to_string(trial));
        if (v != Verdict::forced_zero) return;
        ++forced_seen;

        Hypersurface h = kernel_hypersurface(m);
        c.require(verify_vanishing(h, pts), "kernel vanishing at trial " + std::to_string(trial));
        if (!c.ok) return;
    }
    c.require(forced_seen == 100, "all trials reached the forced-zero regime");
}

// ---------------------------------------------------------------- criterion 4

void hilbert_identities(CheckContext& c) {
    struct Curve {
        const char* text;
        int degree;
    };
    const Curve curves[] = {{"x1", 1}, {"x0*x2 - x1^2", 2}, {"x0^2*x2 - x1^3", 3}};
    for (const auto& curve : curves) {
        IdealBasis gb = buchberger(IdealBasis::from({MultiPoly::parse(curve.text, 3)}));
        for (int r = 0; r <= 12; ++r) {
            HilbertRecord rec = hilbert_fn(gb, r);
            long expected = count_atmost(2, r) - count_atmost(2, r - curve.degree);
            c.require(rec.H == expected,
                      std::string("H law for ") + curve.text + " at r=" + std::to_string(r));
            long sum = 0;
            for (long v : rec.sigma) sum += v;
            c.require(static_cast<long>(r) * rec.H == sum,
                      std::string("sigma identity for ") + curve.text + " at r=" + std::to_string(r));
        }
        Scalar ratio_sum(0);
        for (int i = 0; i < 3; ++i) ratio_sum += a_estimate(gb, i, 12);
        c.require(ratio_sum == 1, std::string("a-ratios sum to 1 for ") + curve.text);
    }
}

// ---------------------------------------------------------------- criterion 5

// independent oracle: leading monomials from rational row reduction of the
// homogeneous graded pieces
std::vector<Exponent> span_leading_monomials(const std::vector<MultiPoly>& gens, int max_deg) {
    int arity = gens.front().arity();
    std::vector<Exponent> columns = enumerate_grevlex(arity, max_deg, EnumerateMode::atmost).members;
    std::reverse(columns.begin(), columns.end());
    std::map<std::vector<int>, size_t> column_of;
    for (size_t j = 0; j < columns.size(); ++j) column_of[columns[j].entries()] = j;

    std::vector<std::vector<Scalar>> rows;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        int room = max_deg - g.total_degree();
        if (room < 0) continue;
        for (const auto& m : enumerate_grevlex(arity, room, EnumerateMode::atmost).members) {
            MultiPoly prod = g.times_monomial(m, Scalar(1));
            std::vector<Scalar> row(columns.size(), Scalar(0));
            for (const auto& [e, cf] : prod.terms()) row[column_of.at(e.entries())] = cf;
            rows.push_back(std::move(row));
        }
    }
    std::vector<Exponent> leading;
    size_t pivot_row = 0;
    for (size_t col = 0; col < columns.size() && pivot_row < rows.size(); ++col) {
        size_t r = pivot_row;
        while (r < rows.size() && rows[r][col] == 0) ++r;
        if (r == rows.size()) continue;
        std::swap(rows[r], rows[pivot_row]);
        Scalar inv = 1 / rows[pivot_row][col];
        for (auto& v : rows[pivot_row]) v *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == pivot_row || rows[i][col] == 0) continue;
            Scalar f = rows[i][col];
            for (size_t j = col; j < columns.size(); ++j) rows[i][j] -= f * rows[pivot_row][j];
        }
        leading.push_back(columns[col]);
        ++pivot_row;
    }
    return leading;
}

void groebner_oracle_equivalence(CheckContext& c) {
    Rng rng(777001);
    for (int trial = 0; trial < 25; ++trial) {
        int arity = static_cast<int>(rng.range(2, 3));
        int count = static_cast<int>(rng.range(1, 3));
        std::vector<MultiPoly> gens;
        for (int g = 0; g < count; ++g) {
            int deg = static_cast<int>(rng.range(1, 3));
            MultiPoly p(arity);
            auto monos = enumerate_grevlex(arity, deg, EnumerateMode::exact).members;
            for (const auto& m : monos)
                if (rng.range(0, 2) != 0) p.add_term(m, rng.rational(6, 3));
            if (p.is_zero()) p.add_term(monos.front(), Scalar(1));
            gens.push_back(std::move(p));
        }
        IdealBasis gb = buchberger(IdealBasis::from(gens));
        std::vector<Exponent> oracle_lts = span_leading_monomials(gens, 6);
        for (int r = 0; r <= 6; ++r) {
            std::vector<Exponent> oracle_standard;
            for (const auto& e : enumerate_grevlex(arity, r, EnumerateMode::exact).members)
                if (std::find(oracle_lts.begin(), oracle_lts.end(), e) == oracle_lts.end())
                    oracle_standard.push_back(e);
            ExponentSet mine = standard_monomials(gb, r);
            c.require(mine.members == oracle_standard, "standard monomials at trial " +
                                                           std::to_string(trial) +
                                                           ", r=" + std::to_string(r));
            if (!c.ok) return;
        }
    }
}

// ---------------------------------------------------------------- criterion 6

void xs_dimension_law(CheckContext& c) {
    BuchbergerOptions opts;
    int computed = 0, skipped = 0;
    for (int d = 1; d <= 3; ++d) {
        AlgebraicPlane curve(
            MultiPoly::parse(d == 1 ? "y - x" : (d == 2 ? "y - x^2" : "y - x^3"), 2, {"x", "y"}));
        for (int s = 1; s <= 6; ++s) {
            int expected = (s - 1) / d + 1;
            try {
                int dim = xs_dimension(curve, s, opts);
                c.require(dim == expected,
                          "dim(X_s) for d=" + std::to_string(d) + ", s=" + std::to_string(s) +
                              ": got " + std::to_string(dim) + ", want " + std::to_string(expected));
                ++computed;
            } catch (const error& e) {
                if (e.code() != errc::budget_exceeded) throw;
                ++skipped;
                c.log << "    budget exceeded at d=" << d << ", s=" << s
                      << " (reported, not failed)\n";
            }
        }
    }
    c.require(computed >= 15, "at least 15 of 18 cells within budget (computed " +
                                  std::to_string(computed) + ", skipped " +
                                  std::to_string(skipped) + ")");
}

// ---------------------------------------------------------------- criterion 7

void height_exponent_optimality(CheckContext& c) {
    Rng rng(99123);
    AlgebraicPlane curve(MultiPoly::parse("y - x^2", 2, {"x", "y"}));
    WitnessMap proj = WitnessMap::projection_x();
    for (int s = 1; s <= 3; ++s) {
        int s_prime = 2 * s + 1;
        for (long e = 1; e <= s; ++e) {
            auto classes = sample_witness_classes(curve, s_prime, proj, e, 2, rng);
            CDimWitnessReport rep = cdim_witness_check(curve, s_prime, proj, e, classes);
            c.require(rep.infinite_fiber, "infinite fibre at s'=" + std::to_string(s_prime) +
                                              ", e=" + std::to_string(e));
        }
        long e_tight = s + 1; // ceil(s'/2)
        auto classes = sample_witness_classes(curve, s_prime, proj, e_tight, 2, rng);
        CDimWitnessReport rep = cdim_witness_check(curve, s_prime, proj, e_tight, classes);
        c.require(!rep.infinite_fiber, "all fibres finite at s'=" + std::to_string(s_prime) +
                                           ", e=" + std::to_string(e_tight));
        c.require(rep.max_finite_fiber == 1, "fibres of size 1 at s'=" + std::to_string(s_prime) +
                                                 ", e=" + std::to_string(e_tight));
        if (!c.ok) return;
    }
}

// ---------------------------------------------------------------- criterion 8

void adversarial_mechanism(CheckContext& c) {
    AdversarialParams params{{1, 7}, {2, 3}, 2};
    for (long i = 1; i <= 7; ++i)
        for (long l = 1; l <= 7; ++l)
            for (long j = 1; j <= 3; ++j) {
                LaurentPoly x = LaurentPoly(i) + LaurentPoly::term(l, Scalar(j));
                LaurentPoly v = adversarial_eval(params, x);
                c.require(v.is_zero() || v.ord() >= 0, "f(" + x.str() + ") stays in k[t]");
            }
    if (!c.ok) return;

    // the fibre at N_1 = 7: three points, inside C_s for the computed s,
    // collapsing for every e <= 7
    int s = 23; // max value degree 22, first coordinates degree 7
    for (long e = 1; e <= 7; ++e) {
        CollapseReport rep = adversarial_collapse_check(params, 1, s, e);
        c.require(rep.fiber_size == 3, "fibre size F(N_1) = 3 at e=" + std::to_string(e));
        c.require(rep.collapsed, "fibre collapses mod t^" + std::to_string(e));
        c.require(rep.chain_ok, "degree chain bound at e=" + std::to_string(e));
        c.require(rep.max_value_degree < s, "values inside the height window");
    }
}

// ---------------------------------------------------------------- criterion 9

void transcendence_reduction(CheckContext& c) {
    MultiPoly f = MultiPoly::parse("y - x", 2, {"x", "y"});
    ReductionStep step = transcendence_reduction_step(f);
    c.require(step.g == MultiPoly::parse("x - 1", 2, {"x", "y"}), "reduction of y - x is x - 1");
    c.require(reduction_identity_holds(f, step, 8), "defining identity to series order 8");
}

// --------------------------------------------------------------- criterion 10

// brute-force oracle over F_5: enumerate height-s points of graph curves
// y = x^k and count fibres of truncated witness maps
namespace f5 {

constexpr long P = 5;

std::vector<FpPoly> all_height(int s) {
    std::vector<FpPoly> out;
    long total = 1;
    for (int i = 0; i < s; ++i) total *= P;
    for (long code = 0; code < total; ++code) {
        FpPoly p(static_cast<size_t>(s), 0);
        long rest = code;
        for (int i = 0; i < s; ++i) {
            p[static_cast<size_t>(i)] = rest % P;
            rest /= P;
        }
        out.push_back(std::move(p));
    }
    return out;
}

FpPoly pow(const FpPoly& x, int k) {
    FpPoly acc{1};
    for (int i = 0; i < k; ++i) acc = fp_poly_mul(acc, x, P);
    return acc;
}

bool height_ok(const FpPoly& v, int s) {
    for (size_t i = static_cast<size_t>(s); i < v.size(); ++i)
        if (v[i] != 0) return false;
    return true;
}

std::vector<long> truncate_key(const FpPoly& v, long e) {
    std::vector<long> key(static_cast<size_t>(e), 0);
    for (size_t i = 0; i < key.size() && i < v.size(); ++i) key[i] = v[i];
    return key;
}

// max fibre of (x, x^k) -> x^pow_of_x mod t^e over height-s curve points
long max_fiber(int k, int s, long e, int pow_of_x) {
    std::map<std::vector<long>, long> fibre;
    for (const auto& x : all_height(s)) {
        if (!height_ok(pow(x, k), s)) continue;
        ++fibre[truncate_key(pow(x, pow_of_x), e)];
    }
    long best = 0;
    for (const auto& [key, n] : fibre) best = std::max(best, n);
    return best;
}

// union of y = x^k1 and y = x^k2, projection to x
long max_fiber_union(int k1, int k2, int s, long e) {
    std::map<std::vector<long>, long> counts;
    for (const auto& x : all_height(s)) {
        FpPoly y1 = pow(x, k1), y2 = pow(x, k2);
        long here = 0;
        if (height_ok(y1, s)) ++here;
        if (height_ok(y2, s) && !(y1 == y2 && height_ok(y1, s))) ++here;
        counts[truncate_key(x, e)] += here;
    }
    long best = 0;
    for (const auto& [key, n] : counts) best = std::max(best, n);
    return best;
}

// product of two graph curves with the componentwise projection
long max_fiber_product(int k1, int k2, int s, long e) {
    std::map<std::pair<std::vector<long>, std::vector<long>>, long> counts;
    for (const auto& x1 : all_height(s)) {
        if (!height_ok(pow(x1, k1), s)) continue;
        for (const auto& x2 : all_height(s)) {
            if (!height_ok(pow(x2, k2), s)) continue;
            ++counts[{truncate_key(x1, e), truncate_key(x2, e)}];
        }
    }
    long best = 0;
    for (const auto& [key, n] : counts) best = std::max(best, n);
    return best;
}

} // namespace f5

void combinators(CheckContext& c) {
    // tabulated rules
    c.require(cdim_combine({1, 1, 1}, {1, 1, 1}, CombineMode::union_of_sets) == CdimTriple{2, 1, 1},
              "union rule");
    c.require(cdim_combine({2, 1, 3}, {3, 2, 1}, CombineMode::product) == CdimTriple{6, 3, 3},
              "product rule");
    c.require(cdim_combine({2, 1, 5}, {}, CombineMode::pullback, 4) == CdimTriple{8, 1, 5},
              "pullback rule");

    // brute-force enumeration over F_5 at heights s <= 2
    for (int s = 1; s <= 2; ++s) {
        long e = s;
        long n_sq = f5::max_fiber(2, s, e, 1);
        long n_cube = f5::max_fiber(3, s, e, 1);
        c.require(n_sq == 1, "parabola fibres are singletons over F_5 at s=" + std::to_string(s));
        c.require(n_cube == 1, "cubic fibres are singletons over F_5 at s=" + std::to_string(s));

        CdimTriple combined =
            cdim_combine({n_sq, 1, e}, {n_cube, 1, e}, CombineMode::union_of_sets);
        long actual_union = f5::max_fiber_union(2, 3, s, e);
        c.require(actual_union <= combined.N && combined.N == 2,
                  "union bound matches enumeration at s=" + std::to_string(s) + " (fibre " +
                      std::to_string(actual_union) + ")");

        CdimTriple prod = cdim_combine({n_sq, 1, e}, {n_cube, 1, e}, CombineMode::product);
        long actual_prod = f5::max_fiber_product(2, 3, s, e);
        c.require(actual_prod <= prod.N && prod.N == 1,
                  "product bound matches enumeration at s=" + std::to_string(s));

        // pull the parabola witness back through squaring (fibres of size <= 2)
        CdimTriple pulled = cdim_combine({n_sq, 1, e}, {}, CombineMode::pullback, 2);
        long actual_pullback = f5::max_fiber(4, s, e, 2); // x -> x^2 on y = x^4
        c.require(actual_pullback <= pulled.N,
                  "pullback bound dominates enumeration at s=" + std::to_string(s) + " (fibre " +
                      std::to_string(actual_pullback) + ")");
    }
}

struct Criterion {
    const char* name;
    std::function<void(CheckContext&)> run;
};

} // namespace

int run_acceptance_suite(std::ostream& out, bool strict) {
    const Criterion criteria[] = {
        {"parameter-formulas", parameter_formulas},
        {"determinant-estimate", determinant_estimate},
        {"hypersurface-capture", hypersurface_capture},
        {"hilbert-identities", hilbert_identities},
        {"groebner-oracle-equivalence", groebner_oracle_equivalence},
        {"xs-dimension-law", xs_dimension_law},
        {"height-exponent-optimality", height_exponent_optimality},
        {"adversarial-mechanism", adversarial_mechanism},
        {"transcendence-reduction", transcendence_reduction},
        {"combinators", combinators},
    };
    int failures = 0;
    int index = 0;
    for (const auto& criterion : criteria) {
        ++index;
        CheckContext ctx;
        auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(ctx);
        } catch (const std::exception& e) {
            ctx.ok = false;
            ctx.log << "    exception: " << e.what() << "\n";
        }
        auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
        char line[160];
        std::snprintf(line, sizeof(line), "%s %2d %-28s (%.2fs)", ctx.ok ? "PASS" : "FAIL", index,
                      criterion.name, elapsed.count());
        out << line << "\n";
        if (!ctx.ok) {
            out << ctx.log.str();
            ++failures;
            if (strict) break;
        }
    }
    out << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
        << "\n";
    return failures;
}

} // namespace cdim
