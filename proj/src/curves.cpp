#include "cdim/curves.hpp"

#include <algorithm>
#include <set>

namespace cdim {

AlgebraicPlane::AlgebraicPlane(MultiPoly poly) : f(std::move(poly)) {
    if (f.arity() != 2) raise(errc::arity_mismatch, "plane curve needs arity 2");
    if (f.is_zero() || f.is_constant()) raise(errc::domain_error, "plane curve polynomial is constant");
}

namespace {

// polynomial in t with MultiPoly coefficients
using TPoly = std::vector<MultiPoly>;

TPoly tpoly_mul(const TPoly& a, const TPoly& b, int arity) {
    TPoly r(a.size() + b.size() - 1, MultiPoly(arity));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

TPoly tpoly_pow(const TPoly& base, int e, int arity) {
    TPoly r{MultiPoly::constant(arity, Scalar(1))};
    for (int i = 0; i < e; ++i) r = tpoly_mul(r, base, arity);
    return r;
}

} // namespace

std::vector<MultiPoly> height_expansion(const MultiPoly& g, int s) {
    if (g.arity() != 2) raise(errc::arity_mismatch, "expected a polynomial in (x, y)");
    if (s < 1) raise(errc::domain_error, "need s >= 1");
    const int arity = 2 * s;
    // x = a_0 + ... + a_{s-1} t^{s-1}, variables 0..s-1; y likewise s..2s-1
    TPoly x_sub, y_sub;
    for (int i = 0; i < s; ++i) {
        x_sub.push_back(MultiPoly::variable(arity, i));
        y_sub.push_back(MultiPoly::variable(arity, s + i));
    }
    TPoly acc{MultiPoly(arity)};
    for (const auto& [e, c] : g.terms()) {
        TPoly term{MultiPoly::constant(arity, c)};
        if (e[0] > 0) term = tpoly_mul(term, tpoly_pow(x_sub, e[0], arity), arity);
        if (e[1] > 0) term = tpoly_mul(term, tpoly_pow(y_sub, e[1], arity), arity);
        if (term.size() > acc.size()) acc.resize(term.size(), MultiPoly(arity));
        for (size_t k = 0; k < term.size(); ++k) acc[k] += term[k];
    }
    return acc;
}

std::vector<std::string> xs_var_names(int s) {
    std::vector<std::string> names;
    for (int i = 0; i < s; ++i) names.push_back("a" + std::to_string(i));
    for (int i = 0; i < s; ++i) names.push_back("b" + std::to_string(i));
    return names;
}

XsIdeal xs_ideal(const AlgebraicPlane& curve, int s) {
    if (s < 1) raise(errc::domain_error, "need s >= 1");
    std::vector<MultiPoly> gens;
    for (const auto& coeff : height_expansion(curve.f, s))
        if (!coeff.is_zero()) gens.push_back(coeff);
    if (gens.empty()) gens.push_back(MultiPoly(2 * s)); // the zero ideal
    XsIdeal xs;
    xs.s = s;
    xs.basis = IdealBasis::from(std::move(gens));
    return xs;
}

int xs_dimension(const AlgebraicPlane& curve, int s, const BuchbergerOptions& opts) {
    return variety_dimension(xs_ideal(curve, s).basis, opts);
}

WitnessMap WitnessMap::projection_x() { return WitnessMap{{MultiPoly::variable(2, 0)}, "proj_x"}; }
WitnessMap WitnessMap::projection_y() { return WitnessMap{{MultiPoly::variable(2, 1)}, "proj_y"}; }

CDimWitnessReport cdim_witness_check(const AlgebraicPlane& curve, int s, const WitnessMap& map,
                                     long e, const std::vector<FiberClass>& classes,
                                     const BuchbergerOptions& opts) {
    if (map.comps.empty()) raise(errc::unsupported_map, "witness map needs at least one component");
    for (const auto& g : map.comps)
        if (g.arity() != 2) raise(errc::unsupported_map, "witness map components live in (x, y)");
    if (e < 1) raise(errc::domain_error, "need e >= 1");
    if (classes.empty()) raise(errc::empty_input, "no residue classes to check");

    XsIdeal xs = xs_ideal(curve, s);
    const int arity = 2 * s;
    // t-expansions of the map components, reused across classes
    std::vector<std::vector<MultiPoly>> expansions;
    for (const auto& g : map.comps) expansions.push_back(height_expansion(g, s));

    CDimWitnessReport rep;
    rep.s = s;
    rep.e = e;
    rep.d = static_cast<int>(map.comps.size());
    rep.map_desc = map.desc;

    for (const auto& cls : classes) {
        if (cls.size() != map.comps.size())
            raise(errc::arity_mismatch, "class tuple size != map component count");
        std::vector<MultiPoly> gens = xs.basis.gens;
        for (size_t k = 0; k < cls.size(); ++k) {
            if (cls[k].modulus_exponent() != e)
                raise(errc::arity_mismatch, "class modulus != e");
            const auto& expansion = expansions[k];
            for (long i = 0; i < e; ++i) {
                MultiPoly constraint =
                    static_cast<size_t>(i) < expansion.size() ? expansion[static_cast<size_t>(i)]
                                                              : MultiPoly(arity);
                constraint -= MultiPoly::constant(arity, cls[k].rep().coeff(i));
                if (!constraint.is_zero()) gens.push_back(constraint);
            }
        }
        if (gens.empty()) gens.push_back(MultiPoly(arity));
        IdealAnalysis analysis = analyze_ideal(IdealBasis::from(std::move(gens)), opts);

        FiberCheck check;
        check.cls = cls;
        check.dimension = analysis.dimension;
        if (check.dimension >= 1) {
            rep.infinite_fiber = true;
            if (!rep.infinite_fiber_class) rep.infinite_fiber_class = cls;
        } else {
            check.size_bound = analysis.quotient_size;
            rep.max_finite_fiber = std::max(rep.max_finite_fiber, check.size_bound);
        }
        rep.fibers.push_back(std::move(check));
    }
    return rep;
}

std::optional<PolyMap> graph_rhs(const MultiPoly& f, int var) {
    if (f.arity() != 2) raise(errc::arity_mismatch, "expected a polynomial in (x, y)");
    const int other = 1 - var;
    // need f = c*v - g(u) with c a nonzero constant, v the solved variable
    Scalar c(0);
    std::vector<LaurentPoly> rhs_coeffs;
    for (const auto& [e, coeff] : f.terms()) {
        if (e[var] > 1) return std::nullopt;
        if (e[var] == 1) {
            if (e[other] != 0) return std::nullopt;
            c = coeff;
            continue;
        }
        size_t k = static_cast<size_t>(e[other]);
        if (rhs_coeffs.size() <= k) rhs_coeffs.resize(k + 1);
        rhs_coeffs[k] = LaurentPoly(-coeff);
    }
    if (c == 0) return std::nullopt;
    for (auto& l : rhs_coeffs) l = l * (1 / c);
    return PolyMap(std::move(rhs_coeffs));
}

std::vector<FiberClass> sample_witness_classes(const AlgebraicPlane& curve, int s,
                                               const WitnessMap& map, long e, int count, Rng& rng) {
    std::optional<PolyMap> rhs = graph_rhs(curve.f, 1);
    int xvar = 0;
    if (!rhs) {
        rhs = graph_rhs(curve.f, 0);
        xvar = 1;
        if (!rhs) raise(errc::unsupported_map, "class sampling needs a graph-shaped curve");
    }
    int rhs_deg = std::max(1, rhs->degree());
    int free_deg = (s - 1) / rhs_deg;
    std::vector<FiberClass> classes;
    for (int i = 0; i < count; ++i) {
        LaurentPoly u;
        for (int k = 0; k <= free_deg; ++k) u.set_coeff(k, rng.nonzero_rational(5, 3));
        LaurentPoly v = rhs->eval(u);
        std::vector<LaurentPoly> pt(2);
        pt[static_cast<size_t>(xvar)] = u;
        pt[static_cast<size_t>(1 - xvar)] = v;
        FiberClass cls;
        for (const auto& g : map.comps) cls.push_back(residue_truncate(g.eval(pt), e));
        classes.push_back(std::move(cls));
    }
    return classes;
}

CdimTriple cdim_combine(const CdimTriple& w1, const CdimTriple& w2, CombineMode mode,
                        long n_pullback) {
    switch (mode) {
    case CombineMode::union_of_sets:
        return CdimTriple{w1.N + w2.N, std::max(w1.d, w2.d), std::max(w1.e, w2.e)};
    case CombineMode::product:
        return CdimTriple{w1.N * w2.N, w1.d + w2.d, std::max(w1.e, w2.e)};
    case CombineMode::pullback:
        if (n_pullback < 1) raise(errc::domain_error, "pullback fibre bound must be >= 1");
        return CdimTriple{n_pullback * w1.N, w1.d, w1.e};
    }
    raise(errc::internal, "bad combine mode");
}

void validate(const AdversarialParams& params) {
    if (params.truncation < 0) raise(errc::domain_error, "truncation must be >= 0");
    if (params.N_seq.size() < static_cast<size_t>(params.truncation) ||
        params.F_vals.size() < static_cast<size_t>(params.truncation))
        raise(errc::domain_error, "need N and F values for every retained term");
    for (size_t i = 0; i < params.N_seq.size(); ++i) {
        if (params.N_seq[i] < 1) raise(errc::domain_error, "N values must be >= 1");
        if (i > 0 && params.N_seq[i] <= params.N_seq[i - 1])
            raise(errc::domain_error, "N must be strictly increasing");
    }
    for (size_t i = 0; i < params.F_vals.size(); ++i) {
        if (params.F_vals[i] < 1) raise(errc::domain_error, "F values must be >= 1");
        if (i > 0 && params.F_vals[i] < params.F_vals[i - 1])
            raise(errc::domain_error, "F must be non-decreasing");
    }
}

LaurentPoly adversarial_term(const AdversarialParams& params, int n, const LaurentPoly& x) {
    validate(params);
    if (n < 0 || n >= params.truncation) raise(errc::domain_error, "term index outside truncation");
    long N = params.N_seq[static_cast<size_t>(n)];
    long F = params.F_vals[static_cast<size_t>(n)];
    LaurentPoly acc = LaurentPoly::t(N) * x.pow(static_cast<unsigned long>(N));
    for (long i = 1; i <= N && !acc.is_zero(); ++i)
        for (long l = 1; l <= N && !acc.is_zero(); ++l)
            for (long j = 1; j <= F && !acc.is_zero(); ++j)
                acc *= x - LaurentPoly(i) - LaurentPoly::term(l, Scalar(j));
    return acc;
}

LaurentPoly adversarial_eval(const AdversarialParams& params, const LaurentPoly& x) {
    validate(params);
    LaurentPoly acc;
    for (int n = 0; n < params.truncation; ++n) acc += adversarial_term(params, n, x);
    return acc;
}

CollapseReport adversarial_collapse_check(const AdversarialParams& params, int n, int s, long e) {
    validate(params);
    if (n < 0 || n >= params.truncation) raise(errc::domain_error, "term index outside truncation");
    CollapseReport rep;
    rep.n = n;
    rep.N_n = params.N_seq[static_cast<size_t>(n)];
    rep.s = s;
    rep.e = e;
    rep.e_within_range = e >= 1 && e <= rep.N_n;
    rep.fiber_size = params.F_vals[static_cast<size_t>(n)];

    std::vector<LaurentPoly> firsts, values;
    long max_deg = 0;
    for (long j = 1; j <= rep.fiber_size; ++j) {
        LaurentPoly xj = LaurentPoly(rep.N_n) + LaurentPoly::term(rep.N_n, Scalar(j));
        LaurentPoly fx = adversarial_eval(params, xj);
        if (!fx.is_zero()) {
            if (fx.ord() < 0) raise(errc::internal, "construction value left k[t]");
            max_deg = std::max(max_deg, fx.degree());
        }
        firsts.push_back(std::move(xj));
        values.push_back(std::move(fx));
    }
    rep.max_value_degree = max_deg;
    if (max_deg >= s || rep.N_n >= s)
        raise(errc::precision_gap,
              "height " + std::to_string(s) + " does not contain the fibre (needs > " +
                  std::to_string(std::max(max_deg, rep.N_n)) + ")");

    rep.collapsed = rep.e_within_range;
    if (rep.e_within_range) {
        ResidueClass base = residue_truncate(LaurentPoly(rep.N_n), e);
        for (const auto& xj : firsts)
            if (residue_truncate(xj, e) != base) rep.collapsed = false;
    }

    if (n >= 1) {
        long Np = params.N_seq[static_cast<size_t>(n - 1)];
        long Fp = params.F_vals[static_cast<size_t>(n - 1)];
        rep.chain_bound = 3 * rep.N_n * Np * Np * Fp;
        rep.chain_ok = max_deg <= *rep.chain_bound;
    } else {
        rep.chain_ok = true;
    }
    return rep;
}

ExpGraphReport exp_graph_check(int s, long prec, const std::vector<LaurentPoly>& samples) {
    if (s < 1) raise(errc::domain_error, "need s >= 1");
    if (prec <= s) raise(errc::domain_error, "need prec > s");
    ExpGraphReport rep;
    rep.s = s;
    rep.prec = prec;
    for (const auto& x : samples) {
        ExpTailCertificate cert;
        cert.x = x;
        if (x.is_zero()) {
            cert.constant_point = true; // exp(0) = 1 sits at height 1
            rep.certificates.push_back(std::move(cert));
            continue;
        }
        if (x.ord() < 1) raise(errc::domain_error, "sample " + x.str() + " has ord_t < 1");
        if (x.degree() >= s) raise(errc::domain_error, "sample " + x.str() + " has height >= s");
        TruncSeries ex = exp_series(x, prec);
        bool found = false;
        for (long k = s; k < prec && !found; ++k) {
            Scalar c = ex.coeff(k);
            if (c != 0) {
                cert.witness_degree = k;
                cert.witness_coeff = c;
                found = true;
            }
        }
        if (!found)
            raise(errc::inconclusive,
                  "no nonzero coefficient of exp(" + x.str() + ") in [" + std::to_string(s) + ", " +
                      std::to_string(prec) + "); raise prec");
        rep.certificates.push_back(std::move(cert));
    }
    return rep;
}

ReductionStep transcendence_reduction_step(const MultiPoly& f) {
    if (f.arity() != 2) raise(errc::arity_mismatch, "expected a polynomial in (x, y)");
    if (f.is_zero()) raise(errc::zero_polynomial, "reduction of 0");
    const int d = f.degree_in(1);
    ReductionStep step;
    step.ydeg_f = d;
    step.xdeg_f = f.degree_in(0);
    MultiPoly g = f.derivative(0);
    for (const auto& [e, c] : f.terms()) {
        int i = e[1];
        if (i == d) continue;
        g.add_term(e, c * Scalar(i - d));
    }
    step.g = g;
    step.terminal = g.is_zero();
    step.ydeg_g = g.degree_in(1);
    step.xdeg_g = g.degree_in(0);
    return step;
}

bool reduction_identity_holds(const MultiPoly& f, const ReductionStep& step, long prec) {
    const TruncSeries x = TruncSeries::from_poly(LaurentPoly::t(), prec);
    const TruncSeries ex = exp_series(LaurentPoly::t(), prec);
    std::vector<TruncSeries> point{x, ex};
    TruncSeries fv = f.eval(point);
    TruncSeries gv = step.g.eval(point);
    const int d = f.degree_in(1);
    // d/dt f(t, e^t) = f_x + f_y e^t evaluated along the graph; comparing the
    // composed series' derivative avoids trusting the chain rule separately
    TruncSeries rhs = fv.derivative() - fv * Scalar(d);
    return gv.agrees_with(rhs);
}

GraphFiberSample sample_graph_fiber(const PolyMap& p, int count, int rho, int center_deg,
                                    int offset_deg, Rng& rng) {
    if (count < 1 || rho < 0 || center_deg < 0 || offset_deg < 0)
        raise(errc::domain_error, "bad sample shape");
    GraphFiberSample out;
    out.rho = rho;
    for (int k = 0; k <= center_deg; ++k) out.center_x.set_coeff(k, rng.rational(4, 2));
    std::set<std::string> seen;
    while (static_cast<int>(out.points.size()) < count) {
        LaurentPoly u;
        for (int k = 0; k <= offset_deg; ++k) u.set_coeff(k, rng.rational(4, 2));
        LaurentPoly x = out.center_x + u.shifted(rho);
        if (!seen.insert(x.str()).second) continue; // points must differ
        out.points.push_back({x, p.eval(x)});
    }
    return out;
}

} // namespace cdim
