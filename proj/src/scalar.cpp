#include "cdim/scalar.hpp"

#include <cctype>

namespace cdim {

const char* errc_name(errc c) {
    switch (c) {
    case errc::indeterminate_valuation: return "IndeterminateValuation";
    case errc::negative_valuation: return "NegativeValuation";
    case errc::insufficient_precision: return "InsufficientPrecision";
    case errc::zero_scale: return "ZeroScale";
    case errc::domain_error: return "DomainError";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::invalid_arity: return "InvalidArity";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::not_groebner: return "NotGroebner";
    case errc::not_homogeneous: return "NotHomogeneous";
    case errc::non_polynomial_range: return "NonPolynomialRange";
    case errc::zero_hilbert: return "ZeroHilbert";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::not_square: return "NotSquare";
    case errc::full_rank: return "FullRank";
    case errc::empty_input: return "EmptyInput";
    case errc::unsupported_map: return "UnsupportedMap";
    case errc::precision_gap: return "PrecisionGap";
    case errc::inconclusive: return "Inconclusive";
    case errc::parse_error: return "ParseError";
    case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

Scalar parse_scalar(std::string_view text) {
    // trim
    size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string s(text.substr(b, e - b));
    if (s.empty()) raise(errc::parse_error, "empty scalar");

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        if (s.find('/') != std::string::npos)
            raise(errc::parse_error, "scalar mixes '.' and '/': " + s);
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        if (frac_len == 0) raise(errc::parse_error, "trailing '.': " + s);
        try {
            mpz_class num(digits, 10);
            mpz_class den;
            mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
            Scalar q(num, den);
            q.canonicalize();
            return q;
        } catch (const std::invalid_argument&) {
            raise(errc::parse_error, "bad decimal scalar: " + s);
        }
    }

    try {
        Scalar q(s);
        if (q.get_den() == 0) raise(errc::parse_error, "zero denominator: " + s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        raise(errc::parse_error, "bad scalar: " + s);
    }
}

std::string scalar_str(const Scalar& q) {
    Scalar c = q;
    c.canonicalize();
    return c.get_str();
}

Scalar scalar_pow(const Scalar& q, long e) {
    if (e == 0) return Scalar(1);
    if (q == 0) {
        if (e < 0) raise(errc::zero_scale, "0 raised to a negative power");
        return Scalar(0);
    }
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), a);
    mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), a);
    Scalar r = e > 0 ? Scalar(num, den) : Scalar(den, num);
    r.canonicalize();
    return r;
}

long scalar_to_long(const Scalar& q) {
    if (!is_integer(q)) raise(errc::domain_error, "not an integer: " + scalar_str(q));
    if (!q.get_num().fits_slong_p()) raise(errc::domain_error, "integer out of range");
    return q.get_num().get_si();
}

} // namespace cdim
