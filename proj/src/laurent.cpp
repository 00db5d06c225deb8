#include "cdim/laurent.hpp"

#include <cctype>
#include <sstream>

namespace cdim {

Scalar LaurentPoly::leading_coeff() const {
    if (terms_.empty()) raise(errc::zero_polynomial, "leading coefficient of 0");
    return terms_.rbegin()->second;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_coeff(k, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_coeff(k, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) r.add_coeff(ka + kb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::operator*(const Scalar& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [k, a] : terms_) r.terms_.emplace(k, a * c);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
    LaurentPoly r(1);
    LaurentPoly base = *this;
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly r;
    for (const auto& [d, c] : terms_) r.terms_.emplace(d + k, c);
    return r;
}

LaurentPoly LaurentPoly::derivative() const {
    LaurentPoly r;
    for (const auto& [d, c] : terms_)
        if (d != 0) r.terms_.emplace(d - 1, c * Scalar(d));
    return r;
}

LaurentDivMod laurent_divmod(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) raise(errc::zero_polynomial, "division by 0");
    LaurentDivMod dm;
    dm.rem = a;
    const long db = b.degree();
    const Scalar lb = b.leading_coeff();
    while (!dm.rem.is_zero() && dm.rem.degree() >= db) {
        long shift = dm.rem.degree() - db;
        Scalar q = dm.rem.leading_coeff() / lb;
        LaurentPoly piece = LaurentPoly::term(shift, q);
        dm.quot += piece;
        dm.rem -= piece * b;
    }
    return dm;
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return {};
    // shift so both sides are honest polynomials before long division
    long sa = a.ord() < 0 ? -a.ord() : 0;
    long sb = b.is_zero() ? 0 : (b.ord() < 0 ? -b.ord() : 0);
    LaurentDivMod dm = laurent_divmod(a.shifted(sa + sb), b.shifted(sb));
    if (!dm.rem.is_zero()) raise(errc::internal, "inexact polynomial division");
    return dm.quot.shifted(-sa);
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    long shift = std::min(a.is_zero() ? kOrdInf : a.ord(), b.is_zero() ? kOrdInf : b.ord());
    LaurentPoly x = a.shifted(a.is_zero() ? 0 : -a.ord());
    LaurentPoly y = b.shifted(b.is_zero() ? 0 : -b.ord());
    while (!y.is_zero()) {
        LaurentPoly r = laurent_divmod(x, y).rem;
        x = y;
        y = r;
    }
    x = x * (Scalar(1) / x.leading_coeff());
    return x.shifted(shift);
}

LaurentPoly coeff_scale(const LaurentPoly& a, const Scalar& lambda) {
    if (lambda == 0) raise(errc::zero_scale, "coeff_scale with lambda = 0");
    LaurentPoly r;
    for (const auto& [k, c] : a.terms()) r.set_coeff(k, c * scalar_pow(lambda, k));
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Scalar a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (k == 0) {
            out << scalar_str(a);
        } else {
            if (a != 1) out << scalar_str(a) << "*";
            out << "t";
            if (k != 1) out << "^" << k;
        }
    }
    return out.str();
}

namespace {

struct Cursor {
    std::string_view s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char get() {
        skip_ws();
        return s[i++];
    }
};

long parse_int(Cursor& c) {
    c.skip_ws();
    size_t start = c.i;
    if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+')) ++c.i;
    size_t digits = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == digits) raise(errc::parse_error, "expected integer at position " + std::to_string(start));
    return std::stol(std::string(c.s.substr(start, c.i - start)));
}

Scalar parse_number(Cursor& c) {
    c.skip_ws();
    size_t start = c.i;
    while (c.i < c.s.size() &&
           (std::isdigit(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '/' || c.s[c.i] == '.'))
        ++c.i;
    if (c.i == start) raise(errc::parse_error, "expected number at position " + std::to_string(start));
    return parse_scalar(c.s.substr(start, c.i - start));
}

} // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
    Cursor c{text};
    LaurentPoly result;
    bool expect_term = true;
    bool saw_any = false;
    int sign = 1;
    while (!c.done()) {
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            c.get();
            if (expect_term) {
                sign = (ch == '-') ? -sign : sign;
            } else {
                sign = (ch == '-') ? -1 : 1;
                expect_term = true;
            }
            continue;
        }
        if (!expect_term) raise(errc::parse_error, "unexpected '" + std::string(1, ch) + "' at position " + std::to_string(c.i));

        Scalar coeff(1);
        bool saw_number = false;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            coeff = parse_number(c);
            saw_number = true;
        }
        long deg = 0;
        c.skip_ws();
        if (c.i < c.s.size() && (c.s[c.i] == '*' || c.s[c.i] == 't')) {
            if (c.s[c.i] == '*') {
                c.get();
                c.skip_ws();
            }
            if (c.i >= c.s.size() || c.s[c.i] != 't')
                raise(errc::parse_error, "expected 't' at position " + std::to_string(c.i));
            ++c.i;
            deg = 1;
            c.skip_ws();
            if (c.i < c.s.size() && c.s[c.i] == '^') {
                ++c.i;
                deg = parse_int(c);
            }
        } else if (!saw_number) {
            raise(errc::parse_error, "expected term at position " + std::to_string(c.i));
        }
        result.add_coeff(deg, sign < 0 ? Scalar(-coeff) : coeff);
        sign = 1;
        expect_term = false;
        saw_any = true;
    }
    if (expect_term || !saw_any)
        raise(errc::parse_error, "incomplete Laurent polynomial: '" + std::string(text) + "'");
    return result;
}

ResidueClass::ResidueClass(long e, const LaurentPoly& rep) : e_(e) {
    if (e < 1) raise(errc::domain_error, "modulus exponent must be >= 1");
    for (const auto& [k, c] : rep.terms()) {
        if (k < 0) raise(errc::negative_valuation, "residue representative has a pole");
        if (k < e) rep_.set_coeff(k, c);
    }
}

ResidueClass ResidueClass::operator+(const ResidueClass& o) const {
    if (e_ != o.e_) raise(errc::arity_mismatch, "residue moduli differ");
    return ResidueClass(e_, rep_ + o.rep_);
}

ResidueClass ResidueClass::operator*(const ResidueClass& o) const {
    if (e_ != o.e_) raise(errc::arity_mismatch, "residue moduli differ");
    return ResidueClass(e_, rep_ * o.rep_);
}

ResidueClass ResidueClass::operator-() const { return ResidueClass(e_, -rep_); }

std::string ResidueClass::str() const {
    return rep_.str() + " mod t^" + std::to_string(e_);
}

ResidueClass residue_truncate(const LaurentPoly& a, long e) {
    if (e < 1) raise(errc::domain_error, "modulus exponent must be >= 1");
    if (!a.is_zero() && a.ord() < 0) raise(errc::negative_valuation, "cannot reduce " + a.str());
    return ResidueClass(e, a);
}

} // namespace cdim
