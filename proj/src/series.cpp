#include "cdim/series.hpp"

#include <algorithm>
#include <sstream>

namespace cdim {

void TruncSeries::normalize() {
    // drop unknown-range entries, then leading zeros
    if (!coeffs_.empty() && val_ + static_cast<long>(coeffs_.size()) > prec_) {
        long keep = prec_ - val_;
        coeffs_.resize(keep > 0 ? static_cast<size_t>(keep) : 0);
    }
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        val_ += static_cast<long>(lead);
    }
    // trailing zeros are fine to keep out; they carry no information beyond prec bookkeeping
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) val_ = 0;
}

TruncSeries TruncSeries::zero_to(long prec) {
    TruncSeries s;
    s.prec_ = prec;
    return s;
}

TruncSeries TruncSeries::from_poly(const LaurentPoly& p, long prec) {
    TruncSeries s;
    s.prec_ = prec;
    if (!p.is_zero()) {
        long lo = p.ord();
        long hi = std::min(p.degree(), prec - 1);
        if (lo <= hi) {
            s.val_ = lo;
            s.coeffs_.assign(static_cast<size_t>(hi - lo + 1), Scalar(0));
            for (const auto& [k, c] : p.terms())
                if (k <= hi) s.coeffs_[static_cast<size_t>(k - lo)] = c;
        }
    }
    s.normalize();
    return s;
}

long TruncSeries::ord() const {
    if (coeffs_.empty())
        raise(errc::indeterminate_valuation,
              "series is 0 to precision O(t^" + std::to_string(prec_) + ")");
    return val_;
}

Scalar TruncSeries::coeff(long k) const {
    if (k >= prec_)
        raise(errc::insufficient_precision,
              "coefficient of t^" + std::to_string(k) + " is beyond O(t^" + std::to_string(prec_) + ")");
    if (coeffs_.empty() || k < val_ || k >= val_ + static_cast<long>(coeffs_.size())) return Scalar(0);
    return coeffs_[static_cast<size_t>(k - val_)];
}

LaurentPoly TruncSeries::known_part() const {
    LaurentPoly p;
    for (size_t i = 0; i < coeffs_.size(); ++i) p.set_coeff(val_ + static_cast<long>(i), coeffs_[i]);
    return p;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    return from_poly(known_part() + o.known_part(), std::min(prec_, o.prec_));
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    return from_poly(known_part() - o.known_part(), std::min(prec_, o.prec_));
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    long prec = std::min(prec_ + o.ord_lower_bound(), o.prec_ + ord_lower_bound());
    return from_poly(known_part() * o.known_part(), prec);
}

TruncSeries TruncSeries::operator*(const Scalar& c) const {
    if (c == 0) return zero_to(prec_);
    return from_poly(known_part() * c, prec_);
}

TruncSeries TruncSeries::pow(unsigned long e) const {
    if (e == 0) return from_poly(LaurentPoly(1), prec_);
    TruncSeries r = *this;
    for (unsigned long i = 1; i < e; ++i) r = r * *this;
    return r;
}

bool TruncSeries::agrees_with(const TruncSeries& o) const {
    long p = std::min(prec_, o.prec_);
    LaurentPoly diff = known_part() - o.known_part();
    for (const auto& [k, c] : diff.terms())
        if (k < p && c != 0) return false;
    return true;
}

TruncSeries TruncSeries::truncated(long new_prec) const {
    if (new_prec >= prec_) return *this;
    return from_poly(known_part(), new_prec);
}

TruncSeries TruncSeries::derivative() const {
    return from_poly(known_part().derivative(), prec_ - 1);
}

std::string TruncSeries::str() const {
    std::ostringstream out;
    if (!coeffs_.empty()) out << known_part().str() << " + ";
    out << "O(t^" << prec_ << ")";
    return out.str();
}

TruncSeries operator+(const LaurentPoly& a, const TruncSeries& b) {
    return TruncSeries::from_poly(a, b.prec()) + b;
}
TruncSeries operator+(const TruncSeries& a, const LaurentPoly& b) { return b + a; }
TruncSeries operator-(const LaurentPoly& a, const TruncSeries& b) {
    return TruncSeries::from_poly(a, b.prec()) - b;
}
TruncSeries operator-(const TruncSeries& a, const LaurentPoly& b) {
    return a - TruncSeries::from_poly(b, a.prec());
}

TruncSeries operator*(const LaurentPoly& a, const TruncSeries& b) {
    if (a.is_zero()) return TruncSeries::zero_to(b.prec());
    // exact factor: only b's uncertainty propagates
    return TruncSeries::from_poly(a * b.known_part(), b.prec() + a.ord());
}
TruncSeries operator*(const TruncSeries& a, const LaurentPoly& b) { return b * a; }

TruncSeries invert_series(const TruncSeries& a) {
    long v = a.ord(); // raises indeterminate_valuation on 0-to-prec
    long rel = a.prec() - v;
    // a = c t^v (1 + u); invert the unit part by long division to rel terms
    LaurentPoly unit = a.known_part().shifted(-v);
    Scalar c0 = unit.coeff(0);
    std::vector<Scalar> inv(static_cast<size_t>(rel), Scalar(0));
    inv[0] = 1 / c0;
    for (long k = 1; k < rel; ++k) {
        Scalar acc(0);
        for (long j = 0; j < k; ++j) acc += inv[static_cast<size_t>(j)] * unit.coeff(k - j);
        inv[static_cast<size_t>(k)] = -acc / c0;
    }
    LaurentPoly out;
    for (long k = 0; k < rel; ++k) out.set_coeff(k - v, inv[static_cast<size_t>(k)]);
    return TruncSeries::from_poly(out, a.prec() - 2 * v);
}

namespace {

// shared tail of exp: z given exactly as a Laurent polynomial with ord >= 1
TruncSeries exp_of_poly(const LaurentPoly& z, long prec) {
    if (!z.is_zero() && z.ord() < 1)
        raise(errc::domain_error, "exp requires ord_t >= 1, got ord_t = " + std::to_string(z.ord()));
    LaurentPoly sum(1);
    LaurentPoly power(1);
    Scalar factorial(1);
    for (long i = 1; !z.is_zero() && i * z.ord() < prec; ++i) {
        power *= z;
        factorial *= Scalar(i);
        sum += power * (1 / factorial);
    }
    return TruncSeries::from_poly(sum, prec);
}

} // namespace

TruncSeries exp_series(const LaurentPoly& z, long prec) { return exp_of_poly(z, prec); }

TruncSeries exp_series(const TruncSeries& z, long prec) {
    const LaurentPoly known = z.known_part();
    for (const auto& [k, c] : known.terms())
        if (k < 1 && c != 0)
            raise(errc::domain_error, "exp requires ord_t >= 1, got a t^" + std::to_string(k) + " term");
    if (z.prec() < 1)
        raise(errc::insufficient_precision, "cannot certify ord_t >= 1 at O(t^" + std::to_string(z.prec()) + ")");
    // exp(z + O(t^p)) = exp(z)(1 + O(t^p))
    return exp_of_poly(z.known_part(), std::min(prec, z.prec()));
}

TruncSeries coeff_scale(const TruncSeries& a, const Scalar& lambda) {
    if (lambda == 0) raise(errc::zero_scale, "coeff_scale with lambda = 0");
    return TruncSeries::from_poly(coeff_scale(a.known_part(), lambda), a.prec());
}

ResidueClass residue_truncate(const TruncSeries& a, long e) {
    if (e < 1) raise(errc::domain_error, "modulus exponent must be >= 1");
    if (a.prec() < e)
        raise(errc::insufficient_precision,
              "need precision >= " + std::to_string(e) + ", have O(t^" + std::to_string(a.prec()) + ")");
    const LaurentPoly known = a.known_part();
    for (const auto& [k, c] : known.terms())
        if (k < 0 && c != 0) raise(errc::negative_valuation, "cannot reduce " + a.str());
    return ResidueClass(e, known);
}

} // namespace cdim
