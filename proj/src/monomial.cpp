#include "cdim/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "cdim/errors.hpp"

namespace cdim {

Exponent::Exponent(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int v : entries_)
        if (v < 0) raise(errc::domain_error, "negative exponent entry");
    total_ = std::accumulate(entries_.begin(), entries_.end(), 0);
}

bool Exponent::divides(const Exponent& o) const {
    if (arity() != o.arity()) raise(errc::arity_mismatch, "exponent arities differ");
    for (int i = 0; i < arity(); ++i)
        if (entries_[static_cast<size_t>(i)] > o[i]) return false;
    return true;
}

Exponent Exponent::operator+(const Exponent& o) const {
    if (arity() != o.arity()) raise(errc::arity_mismatch, "exponent arities differ");
    std::vector<int> e(entries_);
    for (int i = 0; i < arity(); ++i) e[static_cast<size_t>(i)] += o[i];
    return Exponent(std::move(e));
}

Exponent Exponent::operator-(const Exponent& o) const {
    if (arity() != o.arity()) raise(errc::arity_mismatch, "exponent arities differ");
    std::vector<int> e(entries_);
    for (int i = 0; i < arity(); ++i) {
        e[static_cast<size_t>(i)] -= o[i];
        if (e[static_cast<size_t>(i)] < 0) raise(errc::domain_error, "exponent subtraction underflow");
    }
    return Exponent(std::move(e));
}

std::string Exponent::str() const {
    std::ostringstream out;
    out << "(";
    for (int i = 0; i < arity(); ++i) out << (i ? "," : "") << entries_[static_cast<size_t>(i)];
    out << ")";
    return out.str();
}

Exponent lcm(const Exponent& a, const Exponent& b) {
    if (a.arity() != b.arity()) raise(errc::arity_mismatch, "exponent arities differ");
    std::vector<int> e(static_cast<size_t>(a.arity()));
    for (int i = 0; i < a.arity(); ++i) e[static_cast<size_t>(i)] = std::max(a[i], b[i]);
    return Exponent(std::move(e));
}

std::strong_ordering grevlex_cmp(const Exponent& a, const Exponent& b) {
    if (a.arity() != b.arity()) raise(errc::arity_mismatch, "exponent arities differ");
    if (a.total() != b.total()) return a.total() <=> b.total();
    for (int i = 0; i < a.arity(); ++i) {
        if (a[i] != b[i]) return b[i] <=> a[i]; // larger first-differing entry = smaller monomial
    }
    return std::strong_ordering::equal;
}

namespace {

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if (!r.fits_slong_p()) raise(errc::domain_error, "binomial coefficient out of range");
    return r.get_si();
}

void enumerate_rec(int m, int budget, bool exactly, std::vector<int>& cur, std::vector<Exponent>& out) {
    if (static_cast<int>(cur.size()) == m - 1) {
        if (exactly) {
            cur.push_back(budget);
            out.emplace_back(cur);
            cur.pop_back();
        } else {
            for (int v = 0; v <= budget; ++v) {
                cur.push_back(v);
                out.emplace_back(cur);
                cur.pop_back();
            }
        }
        return;
    }
    for (int v = 0; v <= budget; ++v) {
        cur.push_back(v);
        enumerate_rec(m, budget - v, exactly, cur, out);
        cur.pop_back();
    }
}

} // namespace

long count_exact(int m, int k) {
    if (m < 1) raise(errc::invalid_arity, "need m >= 1");
    if (k < 0) return 0;
    return binom(static_cast<long>(k) + m - 1, m - 1);
}

long count_atmost(int m, int k) {
    if (m < 1) raise(errc::invalid_arity, "need m >= 1");
    if (k < 0) return 0; // convention; keeps the r-bracketing total
    return binom(static_cast<long>(k) + m, m);
}

ExponentSet enumerate_grevlex(int m, int k, EnumerateMode mode) {
    if (m < 1) raise(errc::invalid_arity, "need m >= 1");
    if (k < 0) raise(errc::domain_error, "need k >= 0");
    ExponentSet set;
    set.arity = m;
    std::vector<int> cur;
    enumerate_rec(m, k, mode == EnumerateMode::exact, cur, set.members);
    std::sort(set.members.begin(), set.members.end(), GrevlexLess{});
    return set;
}

DmParameters dm_parameters(int n, int m, int d) {
    if (m < 1 || n <= m) raise(errc::invalid_arity, "need 1 <= m < n");
    if (d < 1) raise(errc::domain_error, "need d >= 1");
    DmParameters p;
    p.n = n;
    p.m = m;
    p.d = d;
    p.mu = count_atmost(n, d);
    long r = 0;
    while (!(count_atmost(m, static_cast<int>(r) - 1) <= p.mu && p.mu < count_atmost(m, static_cast<int>(r)))) ++r;
    p.r = r;
    for (int k = 0; k <= d; ++k) p.V += static_cast<long>(k) * count_exact(n, k);
    for (int k = 1; k < r; ++k) p.e += static_cast<long>(k) * count_exact(m, k);
    p.e += r * (p.mu - count_atmost(m, static_cast<int>(r) - 1));
    return p;
}

std::vector<VeRow> ve_ratio_table(int n, int m, int d_max) {
    if (d_max < 1) raise(errc::domain_error, "need d_max >= 1");
    std::vector<VeRow> rows;
    rows.reserve(static_cast<size_t>(d_max));
    for (int d = 1; d <= d_max; ++d) {
        DmParameters p = dm_parameters(n, m, d);
        Scalar ratio(p.V, p.e);
        ratio.canonicalize();
        rows.push_back(VeRow{d, p.V, p.e, ratio});
    }
    return rows;
}

void write_ve_csv(std::ostream& out, const std::vector<VeRow>& rows) {
    out << "d,V,e,ratio_num,ratio_den\n";
    for (const auto& r : rows)
        out << r.d << "," << r.V << "," << r.e << "," << r.ratio.get_num().get_str() << ","
            << r.ratio.get_den().get_str() << "\n";
}

} // namespace cdim
