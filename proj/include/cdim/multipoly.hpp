#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cdim/monomial.hpp"
#include "cdim/series.hpp"

namespace cdim {

// Sparse multivariate polynomial over the rationals; terms kept
// grevlex-descending so begin() is the leading term.
class MultiPoly {
public:
    explicit MultiPoly(int arity) : arity_(arity) {
        if (arity < 1) raise(errc::invalid_arity, "need arity >= 1");
    }

    static MultiPoly constant(int arity, const Scalar& c);
    static MultiPoly monomial(const Exponent& e, const Scalar& c);
    static MultiPoly variable(int arity, int index, int power = 1);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const std::map<Exponent, Scalar, GrevlexGreater>& terms() const { return terms_; }

    Scalar coeff(const Exponent& e) const;
    void add_term(const Exponent& e, const Scalar& c);

    // grevlex-maximal term; ZeroPolynomial on 0
    std::pair<Exponent, Scalar> leading_term() const;

    int total_degree() const; // -1 for zero
    int degree_in(int var) const;
    bool is_homogeneous() const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Scalar& c) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    bool operator==(const MultiPoly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly times_monomial(const Exponent& e, const Scalar& c) const;
    MultiPoly derivative(int var) const;
    MultiPoly monic() const; // leading coefficient 1
    // pin one variable to a constant; arity is unchanged, the variable no
    // longer occurs
    MultiPoly substitute(int var, const Scalar& value) const;

    // substitute values for all variables; arity must match
    Scalar eval(std::span<const Scalar> point) const;
    LaurentPoly eval(std::span<const LaurentPoly> point) const;
    TruncSeries eval(std::span<const TruncSeries> point) const;

    // default names x0, x1, ...
    std::string str(const std::vector<std::string>& names = {}) const;
    static MultiPoly parse(std::string_view text, int arity,
                           const std::vector<std::string>& names = {});

private:
    int arity_;
    std::map<Exponent, Scalar, GrevlexGreater> terms_;
};

// evaluation of F at a tuple of exact/truncated series values (arity check)
inline LaurentPoly poly_eval_series(const MultiPoly& f, std::span<const LaurentPoly> point) {
    return f.eval(point);
}
inline TruncSeries poly_eval_series(const MultiPoly& f, std::span<const TruncSeries> point) {
    return f.eval(point);
}

// f(x_1..x_n) -> x_0^(d-|a|) * f, homogeneous of degree d = total_degree(f),
// in arity+1 variables with the new variable inserted first.
MultiPoly homogenize(const MultiPoly& f);

std::vector<std::string> default_var_names(int arity);

} // namespace cdim
