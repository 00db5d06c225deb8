#pragma once

#include <optional>
#include <vector>

#include "cdim/multipoly.hpp"

namespace cdim {

// Generating set of an ideal over Q. When is_groebner holds, gens is the
// reduced, monic, grevlex Groebner basis sorted by descending leading term;
// this form is canonical, so ideal equality is basis equality.
struct IdealBasis {
    int arity = 0;
    std::vector<MultiPoly> gens;
    bool is_groebner = false;
    bool is_homogeneous = false;

    static IdealBasis from(std::vector<MultiPoly> gens);
};

struct BuchbergerOptions {
    // each S-polynomial reduction counts against this
    long pair_budget = 100000;
};

// Reduced Groebner basis; raises budget_exceeded on runaway instances.
IdealBasis buchberger(const IdealBasis& basis, const BuchbergerOptions& opts = {});

// full normal form of p modulo the (Groebner) basis
MultiPoly normal_form(const MultiPoly& p, const IdealBasis& gb);

// lcm-cancellation of the leading terms of p and q
MultiPoly s_polynomial(const MultiPoly& p, const MultiPoly& q);

// degree-r monomials outside LT(I), ascending; cardinality = H_I(r) for
// homogeneous I
ExponentSet standard_monomials(const IdealBasis& gb, int r);

struct HilbertRecord {
    int r = 0;
    long H = 0;
    std::vector<long> sigma; // per-variable exponent sums over the standard monomials
};

// H_I(r) and the sigma vector; requires a homogeneous Groebner basis.
// The identity r*H = sum(sigma) holds for every record.
HilbertRecord hilbert_fn(const IdealBasis& gb, int r);

struct HilbertFitReport {
    Scalar leading;            // slope of the linear fit
    Scalar constant;           // value at r = 0
    std::optional<long> principal_degree; // degree of the generator when principal
    bool matches_degree = false;          // leading == principal_degree
};

// fit H_I(r) to a linear polynomial on [r_min, r_max]; raises
// non_polynomial_range when the first differences are not constant
HilbertFitReport hilbert_poly_check(const IdealBasis& gb, int r_min, int r_max);

// exact ratio sigma_{I,i}(r_max) / (r_max * H_I(r_max)); the ratios over all
// i sum to 1
Scalar a_estimate(const IdealBasis& gb, int i, int r_max);

// Krull dimension of the affine variety: the largest number of variables
// supporting no leading exponent of the Groebner basis. -1 for the unit
// ideal. Computes a Groebner basis first when needed.
int variety_dimension(const IdealBasis& basis, const BuchbergerOptions& opts = {});

// total count of standard monomials of a zero-dimensional ideal
// (the K-dimension of the quotient ring); requires variety dimension <= 0
long quotient_dimension(const IdealBasis& gb);

struct IdealAnalysis {
    int dimension = -1;
    long quotient_size = 0; // meaningful when dimension <= 0
};

// Dimension plus quotient size in one pass. Before running Buchberger this
// eliminates variables pinned down by a single generator (v = const, or v
// occurring only as the linear term of one generator); the variety is
// replaced by an isomorphic one, so both outputs are unchanged.
IdealAnalysis analyze_ideal(const IdealBasis& basis, const BuchbergerOptions& opts = {});

} // namespace cdim
