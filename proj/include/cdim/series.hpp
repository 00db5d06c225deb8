#pragma once

#include <string>
#include <vector>

#include "cdim/laurent.hpp"

namespace cdim {

// Truncated element of k((t)) with explicit absolute precision: coefficients
// of degree >= prec are unknown. Exact zero and "zero to this precision" are
// distinct states; the latter has an indeterminate valuation.
class TruncSeries {
public:
    // zero to precision prec (everything below prec known to vanish)
    static TruncSeries zero_to(long prec);

    // known part of an exact value, forgetting degrees >= prec
    static TruncSeries from_poly(const LaurentPoly& p, long prec);

    long prec() const { return prec_; }
    bool is_zero_to_prec() const { return coeffs_.empty(); }

    // t-adic valuation; raises indeterminate_valuation when everything
    // known vanishes.
    long ord() const;
    // val when determinate, prec when not; sound lower bound either way
    long ord_lower_bound() const { return coeffs_.empty() ? prec_ : val_; }

    // coefficient of t^k for k < prec
    Scalar coeff(long k) const;
    // the known coefficients as an exact Laurent polynomial
    LaurentPoly known_part() const;

    TruncSeries operator-() const;
    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries operator*(const Scalar& c) const;
    TruncSeries pow(unsigned long e) const;

    // structural equality: same precision and same known coefficients
    bool operator==(const TruncSeries& o) const {
        return prec_ == o.prec_ && known_part() == o.known_part();
    }
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }

    // equality of known coefficients on the common precision range
    bool agrees_with(const TruncSeries& o) const;

    // drop knowledge above new_prec (no-op if new_prec >= prec)
    TruncSeries truncated(long new_prec) const;

    TruncSeries derivative() const; // d/dt; precision drops by one

    std::string str() const;

private:
    TruncSeries() = default;
    void normalize();

    long prec_ = 0;
    long val_ = 0;                // degree of coeffs_[0] when nonempty
    std::vector<Scalar> coeffs_; // degrees val_ .. val_+size-1; first entry nonzero
};

// mixed arithmetic: the exact operand is promoted to the other's precision
TruncSeries operator+(const LaurentPoly& a, const TruncSeries& b);
TruncSeries operator+(const TruncSeries& a, const LaurentPoly& b);
TruncSeries operator-(const LaurentPoly& a, const TruncSeries& b);
TruncSeries operator-(const TruncSeries& a, const LaurentPoly& b);
TruncSeries operator*(const LaurentPoly& a, const TruncSeries& b);
TruncSeries operator*(const TruncSeries& a, const LaurentPoly& b);

// multiplicative inverse; output valuation -ord(a), output precision
// prec - 2*ord(a). Requires a determinate valuation.
TruncSeries invert_series(const TruncSeries& a);

// sum z^i/i! to absolute precision prec; requires ord(z) >= 1
TruncSeries exp_series(const LaurentPoly& z, long prec);
TruncSeries exp_series(const TruncSeries& z, long prec);

TruncSeries coeff_scale(const TruncSeries& a, const Scalar& lambda);

// requires prec >= e and no known negative-degree coefficient
ResidueClass residue_truncate(const TruncSeries& a, long e);

} // namespace cdim
