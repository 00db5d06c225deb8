#pragma once

#include <vector>

#include "cdim/errors.hpp"

namespace cdim {

// Prime-field scalar. Cross-check oracle only: the main library works over
// an exact characteristic-zero field, and nothing here feeds back into it.
class Fp {
public:
    Fp(long v, long p) : p_(p) {
        if (p < 2) raise(errc::domain_error, "modulus must be >= 2");
        v_ = ((v % p) + p) % p;
    }

    long value() const { return v_; }
    long modulus() const { return p_; }

    Fp operator+(const Fp& o) const { return Fp(v_ + o.v_, p_); }
    Fp operator-(const Fp& o) const { return Fp(v_ - o.v_, p_); }
    Fp operator*(const Fp& o) const { return Fp(v_ * o.v_, p_); }
    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }

    Fp inverse() const {
        if (v_ == 0) raise(errc::zero_scale, "inverse of 0");
        long r = 1;
        for (long e = p_ - 2; e > 0; --e) r = (r * v_) % p_; // p is tiny here
        return Fp(r, p_);
    }

private:
    long v_;
    long p_;
};

// dense polynomial over F_p, index = degree of t
using FpPoly = std::vector<long>;

inline FpPoly fp_poly_mul(const FpPoly& a, const FpPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

inline FpPoly fp_poly_add(FpPoly a, const FpPoly& b, long p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % p;
    return a;
}

inline bool fp_poly_is_zero(const FpPoly& a) {
    for (long c : a)
        if (c != 0) return false;
    return true;
}

} // namespace cdim
