#include "cdim/groebner.hpp"

#include <algorithm>
#include <set>

namespace cdim {

IdealBasis IdealBasis::from(std::vector<MultiPoly> gens) {
    IdealBasis b;
    if (gens.empty()) raise(errc::empty_input, "ideal needs at least one generator");
    b.arity = gens.front().arity();
    for (const auto& g : gens)
        if (g.arity() != b.arity) raise(errc::arity_mismatch, "generator arities differ");
    b.gens = std::move(gens);
    b.is_homogeneous =
        std::all_of(b.gens.begin(), b.gens.end(), [](const MultiPoly& g) { return g.is_homogeneous(); });
    return b;
}

MultiPoly s_polynomial(const MultiPoly& p, const MultiPoly& q) {
    if (p.is_zero() || q.is_zero()) raise(errc::zero_polynomial, "S-polynomial of 0");
    auto [ep, cp] = p.leading_term();
    auto [eq, cq] = q.leading_term();
    Exponent l = lcm(ep, eq);
    return p.times_monomial(l - ep, 1 / cp) - q.times_monomial(l - eq, 1 / cq);
}

namespace {

// full reduction of p by the polynomials in basis
MultiPoly reduce(MultiPoly p, const std::vector<MultiPoly>& basis) {
    MultiPoly rem(p.arity());
    while (!p.is_zero()) {
        auto [e, c] = p.leading_term();
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            auto [eg, cg] = g.leading_term();
            if (eg.divides(e)) {
                p -= g.times_monomial(e - eg, c / cg);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.add_term(e, c);
            p.add_term(e, -c);
        }
    }
    return rem;
}

// canonical final form: minimal, inter-reduced, monic, sorted by leading term
std::vector<MultiPoly> reduce_basis(std::vector<MultiPoly> basis) {
    // drop generators whose leading term another one divides
    std::vector<MultiPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].is_zero()) continue;
        auto [ei, ci] = basis[i].leading_term();
        bool dominated = false;
        for (size_t j = 0; j < basis.size() && !dominated; ++j) {
            if (i == j || basis[j].is_zero()) continue;
            auto [ej, cj] = basis[j].leading_term();
            if (ej.divides(ei) && (ej != ei || j < i)) dominated = true;
        }
        if (!dominated) minimal.push_back(basis[i]);
    }
    // reduce each tail against the others
    std::vector<MultiPoly> out;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly r = others.empty() ? minimal[i] : reduce(minimal[i], others);
        if (!r.is_zero()) out.push_back(r.monic());
    }
    std::sort(out.begin(), out.end(), [](const MultiPoly& a, const MultiPoly& b) {
        return grevlex_cmp(a.leading_term().first, b.leading_term().first) == std::strong_ordering::greater;
    });
    return out;
}

} // namespace

IdealBasis buchberger(const IdealBasis& basis, const BuchbergerOptions& opts) {
    if (basis.gens.empty()) raise(errc::empty_input, "ideal needs at least one generator");
    std::vector<MultiPoly> g;
    for (const auto& p : basis.gens)
        if (!p.is_zero()) g.push_back(p.monic());
    if (g.empty()) {
        // the zero ideal: keep a single zero generator so arity survives
        IdealBasis out;
        out.arity = basis.arity;
        out.gens = {MultiPoly(basis.arity)};
        out.is_groebner = true;
        out.is_homogeneous = true;
        return out;
    }

    struct Pair {
        size_t i, j;
        Exponent l;
        Pair(size_t i_, size_t j_, Exponent l_) : i(i_), j(j_), l(std::move(l_)) {}
    };
    auto pair_less = [](const Pair& a, const Pair& b) {
        auto c = grevlex_cmp(a.l, b.l);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    };

    std::vector<Pair> pairs;
    auto push_pairs_for = [&](size_t k) {
        for (size_t i = 0; i < k; ++i)
            pairs.emplace_back(i, k, lcm(g[i].leading_term().first, g[k].leading_term().first));
        std::sort(pairs.begin(), pairs.end(), pair_less);
    };
    for (size_t k = 1; k < g.size(); ++k)
        for (size_t i = 0; i < k; ++i)
            pairs.emplace_back(i, k, lcm(g[i].leading_term().first, g[k].leading_term().first));
    std::sort(pairs.begin(), pairs.end(), pair_less);

    std::set<std::pair<size_t, size_t>> done;
    long budget = opts.pair_budget;

    while (!pairs.empty()) {
        Pair pr = pairs.front();
        pairs.erase(pairs.begin());
        done.insert({pr.i, pr.j});

        const Exponent& ei = g[pr.i].leading_term().first;
        const Exponent& ej = g[pr.j].leading_term().first;
        // product criterion: coprime leading monomials reduce to zero
        if (pr.l.total() == ei.total() + ej.total()) continue;
        // chain criterion: a third generator dividing the lcm with both
        // side pairs already handled
        bool chained = false;
        for (size_t k = 0; k < g.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!g[k].leading_term().first.divides(pr.l)) continue;
            auto key1 = std::minmax(pr.i, k);
            auto key2 = std::minmax(pr.j, k);
            if (done.count({key1.first, key1.second}) && done.count({key2.first, key2.second}))
                chained = true;
        }
        if (chained) continue;

        if (--budget < 0)
            raise(errc::budget_exceeded, "pair reduction budget exhausted");
        MultiPoly s = reduce(s_polynomial(g[pr.i], g[pr.j]), g);
        if (!s.is_zero()) {
            g.push_back(s.monic());
            push_pairs_for(g.size() - 1);
        }
    }

    IdealBasis out;
    out.arity = basis.arity;
    out.gens = reduce_basis(std::move(g));
    if (out.gens.empty()) out.gens = {MultiPoly(basis.arity)};
    out.is_groebner = true;
    out.is_homogeneous = std::all_of(out.gens.begin(), out.gens.end(),
                                     [](const MultiPoly& p) { return p.is_homogeneous(); });
    return out;
}

MultiPoly normal_form(const MultiPoly& p, const IdealBasis& gb) {
    if (!gb.is_groebner) raise(errc::not_groebner, "normal form needs a Groebner basis");
    return reduce(p, gb.gens);
}

namespace {

bool is_unit_ideal(const IdealBasis& gb) {
    for (const auto& p : gb.gens)
        if (!p.is_zero() && p.leading_term().first.total() == 0) return true;
    return false;
}

std::vector<Exponent> leading_exponents(const IdealBasis& gb) {
    std::vector<Exponent> lts;
    for (const auto& p : gb.gens)
        if (!p.is_zero()) lts.push_back(p.leading_term().first);
    return lts;
}

} // namespace

ExponentSet standard_monomials(const IdealBasis& gb, int r) {
    if (!gb.is_groebner) raise(errc::not_groebner, "standard monomials need a Groebner basis");
    if (r < 0) raise(errc::domain_error, "need r >= 0");
    ExponentSet out;
    out.arity = gb.arity;
    if (is_unit_ideal(gb)) return out;
    std::vector<Exponent> lts = leading_exponents(gb);
    for (const auto& e : enumerate_grevlex(gb.arity, r, EnumerateMode::exact).members) {
        bool divisible = false;
        for (const auto& lt : lts)
            if (lt.divides(e)) {
                divisible = true;
                break;
            }
        if (!divisible) out.members.push_back(e);
    }
    return out;
}

HilbertRecord hilbert_fn(const IdealBasis& gb, int r) {
    if (!gb.is_groebner) raise(errc::not_groebner, "Hilbert function needs a Groebner basis");
    if (!gb.is_homogeneous) raise(errc::not_homogeneous, "Hilbert function needs a homogeneous ideal");
    HilbertRecord rec;
    rec.r = r;
    rec.sigma.assign(static_cast<size_t>(gb.arity), 0);
    ExponentSet std_mons = standard_monomials(gb, r);
    rec.H = static_cast<long>(std_mons.size());
    long total = 0;
    for (const auto& e : std_mons.members)
        for (int i = 0; i < gb.arity; ++i) {
            rec.sigma[static_cast<size_t>(i)] += e[i];
            total += e[i];
        }
    if (total != static_cast<long>(r) * rec.H)
        raise(errc::internal, "sigma identity violated"); // cannot happen
    return rec;
}

HilbertFitReport hilbert_poly_check(const IdealBasis& gb, int r_min, int r_max) {
    if (r_max <= r_min) raise(errc::domain_error, "need r_max > r_min");
    std::vector<long> H;
    for (int r = r_min; r <= r_max; ++r) H.push_back(hilbert_fn(gb, r).H);
    long d1 = H[1] - H[0];
    for (size_t i = 1; i + 1 < H.size(); ++i)
        if (H[i + 1] - H[i] != d1)
            raise(errc::non_polynomial_range,
                  "Hilbert values on [" + std::to_string(r_min) + "," + std::to_string(r_max) +
                      "] are not linear");
    HilbertFitReport rep;
    rep.leading = Scalar(d1);
    rep.constant = Scalar(H[0]) - Scalar(d1) * Scalar(r_min);
    if (gb.gens.size() == 1 && !gb.gens.front().is_zero() && !is_unit_ideal(gb)) {
        rep.principal_degree = gb.gens.front().total_degree();
        rep.matches_degree = rep.leading == Scalar(*rep.principal_degree);
    }
    return rep;
}

Scalar a_estimate(const IdealBasis& gb, int i, int r_max) {
    if (i < 0 || i >= gb.arity) raise(errc::invalid_arity, "variable index out of range");
    if (r_max < 1) raise(errc::domain_error, "need r_max >= 1");
    HilbertRecord rec = hilbert_fn(gb, r_max);
    if (rec.H == 0) raise(errc::zero_hilbert, "H_I(r) = 0 at r = " + std::to_string(r_max));
    Scalar ratio(rec.sigma[static_cast<size_t>(i)], static_cast<long>(r_max) * rec.H);
    ratio.canonicalize();
    return ratio;
}

namespace {

// Variables pinned down by a single generator can be removed up front: the
// variety stays isomorphic, so dimension and quotient size do not change.
struct Presolved {
    std::vector<MultiPoly> gens; // over the kept variables
    int kept = 0;
    bool unit = false; // a contradictory constant appeared
};

Presolved presolve(const IdealBasis& basis) {
    const int n = basis.arity;
    std::vector<MultiPoly> gens;
    for (const auto& g : basis.gens)
        if (!g.is_zero()) gens.push_back(g);
    std::vector<bool> active(static_cast<size_t>(n), true);

    auto drop_zeros = [&] {
        std::erase_if(gens, [](const MultiPoly& g) { return g.is_zero(); });
    };

    bool changed = true;
    while (changed) {
        changed = false;
        // v = const from a generator with support {v, 1}
        for (size_t gi = 0; gi < gens.size() && !changed; ++gi) {
            const MultiPoly& g = gens[gi];
            if (g.terms().size() > 2) continue;
            int var = -1;
            int linear_terms = 0;
            Scalar coeff(0), constant(0);
            bool shape_ok = true;
            for (const auto& [e, c] : g.terms()) {
                if (e.total() == 0) {
                    constant = c;
                } else if (e.total() == 1) {
                    ++linear_terms;
                    for (int i = 0; i < n; ++i)
                        if (e[i] == 1) var = i;
                    coeff = c;
                } else {
                    shape_ok = false;
                }
            }
            if (!shape_ok || linear_terms != 1 || var < 0 || coeff == 0) continue;
            Scalar value = -constant / coeff;
            for (auto& other : gens) other = other.substitute(var, value);
            active[static_cast<size_t>(var)] = false;
            drop_zeros();
            changed = true;
        }
        if (changed) continue;
        // v occurring only as the linear term of one generator
        std::vector<int> occurrences(static_cast<size_t>(n), 0);
        std::vector<size_t> owner(static_cast<size_t>(n), 0);
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            std::vector<bool> seen(static_cast<size_t>(n), false);
            for (const auto& [e, c] : gens[gi].terms())
                for (int i = 0; i < n; ++i)
                    if (e[i] > 0 && !seen[static_cast<size_t>(i)]) {
                        seen[static_cast<size_t>(i)] = true;
                        ++occurrences[static_cast<size_t>(i)];
                        owner[static_cast<size_t>(i)] = gi;
                    }
        }
        for (int v = 0; v < n && !changed; ++v) {
            if (!active[static_cast<size_t>(v)] || occurrences[static_cast<size_t>(v)] != 1) continue;
            const MultiPoly& g = gens[owner[static_cast<size_t>(v)]];
            int linear_terms = 0;
            bool only_linear = true;
            for (const auto& [e, c] : g.terms()) {
                if (e[v] == 0) continue;
                if (e[v] == 1 && e.total() == 1)
                    ++linear_terms;
                else
                    only_linear = false;
            }
            if (!only_linear || linear_terms != 1) continue;
            gens.erase(gens.begin() + static_cast<long>(owner[static_cast<size_t>(v)]));
            active[static_cast<size_t>(v)] = false;
            changed = true;
        }
    }

    Presolved out;
    std::vector<int> index(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i)
        if (active[static_cast<size_t>(i)]) index[static_cast<size_t>(i)] = out.kept++;
    for (const auto& g : gens) {
        if (g.is_constant()) {
            out.unit = true; // nonzero constant: no solutions
            return out;
        }
        MultiPoly mapped(std::max(out.kept, 1));
        for (const auto& [e, c] : g.terms()) {
            std::vector<int> compact(static_cast<size_t>(std::max(out.kept, 1)), 0);
            for (int i = 0; i < n; ++i)
                if (e[i] > 0) compact[static_cast<size_t>(index[static_cast<size_t>(i)])] = e[i];
            mapped.add_term(Exponent(std::move(compact)), c);
        }
        out.gens.push_back(std::move(mapped));
    }
    return out;
}

int dimension_from_gb(const IdealBasis& gb) {
    if (is_unit_ideal(gb)) return -1;
    std::vector<Exponent> lts = leading_exponents(gb);
    int n = gb.arity;
    if (n > 24) raise(errc::budget_exceeded, "dimension search over " + std::to_string(n) + " variables");
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool independent = true;
        for (const auto& lt : lts) {
            bool contained = true;
            for (int i = 0; i < n && contained; ++i)
                if (lt[i] > 0 && !(mask & (1u << i))) contained = false;
            if (contained) {
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;
}

} // namespace

IdealAnalysis analyze_ideal(const IdealBasis& basis, const BuchbergerOptions& opts) {
    Presolved pre = presolve(basis);
    IdealAnalysis out;
    if (pre.unit) {
        out.dimension = -1;
        out.quotient_size = 0;
        return out;
    }
    if (pre.gens.empty()) {
        // everything was pinned down (or left free)
        out.dimension = pre.kept;
        out.quotient_size = pre.kept == 0 ? 1 : 0;
        return out;
    }
    IdealBasis gb = buchberger(IdealBasis::from(pre.gens), opts);
    out.dimension = dimension_from_gb(gb);
    if (out.dimension <= 0) out.quotient_size = quotient_dimension(gb);
    return out;
}

int variety_dimension(const IdealBasis& basis, const BuchbergerOptions& opts) {
    if (basis.is_groebner) return dimension_from_gb(basis);
    Presolved pre = presolve(basis);
    if (pre.unit) return -1;
    if (pre.gens.empty()) return pre.kept;
    return dimension_from_gb(buchberger(IdealBasis::from(pre.gens), opts));
}

long quotient_dimension(const IdealBasis& gb) {
    if (!gb.is_groebner) raise(errc::not_groebner, "quotient dimension needs a Groebner basis");
    if (variety_dimension(gb) > 0)
        raise(errc::domain_error, "quotient is infinite-dimensional");
    long total = 0;
    for (int r = 0;; ++r) {
        long h = static_cast<long>(standard_monomials(gb, r).size());
        if (h == 0) break;
        total += h;
    }
    return total;
}

} // namespace cdim
