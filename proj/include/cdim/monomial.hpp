#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "cdim/scalar.hpp"

namespace cdim {

// Monomial exponent vector in N^m.
class Exponent {
public:
    explicit Exponent(std::vector<int> entries);
    static Exponent zero(int arity) { return Exponent(std::vector<int>(arity, 0)); }

    int arity() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
    int total() const { return total_; }
    const std::vector<int>& entries() const { return entries_; }

    bool divides(const Exponent& o) const;
    Exponent operator+(const Exponent& o) const;
    Exponent operator-(const Exponent& o) const; // requires divides(o) componentwise
    bool operator==(const Exponent& o) const { return entries_ == o.entries_; }
    bool operator!=(const Exponent& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::vector<int> entries_;
    int total_;
};

Exponent lcm(const Exponent& a, const Exponent& b);

// Graded order with reverse-lexicographic tiebreak: lower total degree is
// smaller; at equal degree, the exponent with the larger entry at the first
// differing index is the smaller monomial. So in two variables
// (1,0) < (0,1), i.e. x0 < x1.
std::strong_ordering grevlex_cmp(const Exponent& a, const Exponent& b);

struct GrevlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const {
        return grevlex_cmp(a, b) == std::strong_ordering::less;
    }
};
struct GrevlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const {
        return grevlex_cmp(a, b) == std::strong_ordering::greater;
    }
};

// Strictly ascending, duplicate-free exponent list of shared arity.
struct ExponentSet {
    int arity = 0;
    std::vector<Exponent> members;

    size_t size() const { return members.size(); }
};

// number of monomials in m variables of degree exactly k: C(k+m-1, m-1)
long count_exact(int m, int k);
// ... of degree at most k: C(k+m, m); 0 for k < 0
long count_atmost(int m, int k);

enum class EnumerateMode { exact, atmost };

// all exponents of degree == k (exact) or <= k (atmost), ascending
ExponentSet enumerate_grevlex(int m, int k, EnumerateMode mode);

// Determinant-method parameters for n ambient variables, m parameters and
// monomial degree d:
//   mu = D_n(d)
//   r  = the unique x with D_m(x-1) <= mu < D_m(x)
//   V  = sum_{k<=d} k L_n(k)   (total degree of the monomial set)
//   e  = sum_{k<r} k L_m(k) + r (mu - D_m(r-1))
struct DmParameters {
    int n = 0, m = 0, d = 0;
    long mu = 0;
    long r = 0;
    long V = 0;
    long e = 0;
};

DmParameters dm_parameters(int n, int m, int d);

struct VeRow {
    int d;
    long V;
    long e;
    Scalar ratio; // V/e, exact
};

std::vector<VeRow> ve_ratio_table(int n, int m, int d_max);

// header "d,V,e,ratio_num,ratio_den"
void write_ve_csv(std::ostream& out, const std::vector<VeRow>& rows);

} // namespace cdim
