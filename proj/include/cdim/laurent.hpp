#pragma once

#include <limits>
#include <map>
#include <string>
#include <string_view>

#include "cdim/scalar.hpp"

namespace cdim {

// Sentinels for the valuation/degree of the zero element.
inline constexpr long kOrdInf = std::numeric_limits<long>::max();
inline constexpr long kDegNegInf = std::numeric_limits<long>::min();

// Element of k[t, t^-1]: finite map degree -> nonzero coefficient.
// Exact; the zero element has empty support.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Scalar& c) { set_coeff(0, c); } // NOLINT: implicit constant
    LaurentPoly(long c) { set_coeff(0, Scalar(c)); }  // NOLINT

    // c * t^k
    static LaurentPoly term(long k, const Scalar& c) {
        LaurentPoly p;
        p.set_coeff(k, c);
        return p;
    }
    static LaurentPoly t(long k = 1) { return term(k, Scalar(1)); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, Scalar>& terms() const { return terms_; }

    Scalar coeff(long k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Scalar(0) : it->second;
    }
    void set_coeff(long k, const Scalar& c) {
        if (c == 0)
            terms_.erase(k);
        else
            terms_[k] = c;
    }
    void add_coeff(long k, const Scalar& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // t-adic valuation; kOrdInf for zero
    long ord() const { return terms_.empty() ? kOrdInf : terms_.begin()->first; }
    // top degree; kDegNegInf for zero
    long degree() const { return terms_.empty() ? kDegNegInf : terms_.rbegin()->first; }
    bool is_polynomial() const { return terms_.empty() || ord() >= 0; }

    Scalar leading_coeff() const; // at degree(); ZeroPolynomial on zero

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly operator*(const Scalar& c) const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly pow(unsigned long e) const;
    LaurentPoly shifted(long k) const; // * t^k
    LaurentPoly derivative() const;    // d/dt

    std::string str() const;
    static LaurentPoly parse(std::string_view text);

private:
    std::map<long, Scalar> terms_;
};

// Quotient and remainder by the top term of b (b nonzero); exact for
// Laurent polynomials over a field.
struct LaurentDivMod {
    LaurentPoly quot, rem;
};
LaurentDivMod laurent_divmod(const LaurentPoly& a, const LaurentPoly& b);

// a / b when the division is exact; raises internal otherwise.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

// Monic gcd (lowest-degree normalization t^min(ord) folded in).
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

// a_j t^j -> a_j lambda^j t^j; ring homomorphism fixing constants.
LaurentPoly coeff_scale(const LaurentPoly& a, const Scalar& lambda);

// Residue class modulo t^e, e >= 1; canonical representative with support
// in [0, e).
class ResidueClass {
public:
    ResidueClass(long e, const LaurentPoly& rep);

    long modulus_exponent() const { return e_; }
    const LaurentPoly& rep() const { return rep_; }

    ResidueClass operator+(const ResidueClass& o) const;
    ResidueClass operator*(const ResidueClass& o) const;
    ResidueClass operator-() const;
    bool operator==(const ResidueClass& o) const { return e_ == o.e_ && rep_ == o.rep_; }
    bool operator!=(const ResidueClass& o) const { return !(*this == o); }

    std::string str() const;

private:
    long e_;
    LaurentPoly rep_;
};

// Reduction map onto O_K/(t^e); requires ord >= 0.
ResidueClass residue_truncate(const LaurentPoly& a, long e);

} // namespace cdim
