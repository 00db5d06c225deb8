#include "cdim/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cdim {

MultiPoly MultiPoly::constant(int arity, const Scalar& c) {
    MultiPoly p(arity);
    p.add_term(Exponent::zero(arity), c);
    return p;
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Scalar& c) {
    MultiPoly p(e.arity());
    p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::variable(int arity, int index, int power) {
    if (index < 0 || index >= arity) raise(errc::invalid_arity, "variable index out of range");
    std::vector<int> e(static_cast<size_t>(arity), 0);
    e[static_cast<size_t>(index)] = power;
    MultiPoly p(arity);
    p.add_term(Exponent(std::move(e)), Scalar(1));
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
}

Scalar MultiPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Scalar& c) {
    if (e.arity() != arity_) raise(errc::arity_mismatch, "exponent arity != polynomial arity");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::pair<Exponent, Scalar> MultiPoly::leading_term() const {
    if (terms_.empty()) raise(errc::zero_polynomial, "leading term of 0");
    return *terms_.begin();
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.total());
    return d;
}

int MultiPoly::degree_in(int var) const {
    int d = is_zero() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.total();
    for (const auto& [e, c] : terms_)
        if (e.total() != d) return false;
    return true;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (arity_ != o.arity_) raise(errc::arity_mismatch, "polynomial arities differ");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    if (arity_ != o.arity_) raise(errc::arity_mismatch, "polynomial arities differ");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (arity_ != o.arity_) raise(errc::arity_mismatch, "polynomial arities differ");
    MultiPoly r(arity_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

MultiPoly MultiPoly::operator*(const Scalar& c) const {
    MultiPoly r(arity_);
    if (c == 0) return r;
    for (const auto& [e, a] : terms_) r.terms_.emplace(e, a * c);
    return r;
}

MultiPoly MultiPoly::times_monomial(const Exponent& e, const Scalar& c) const {
    MultiPoly r(arity_);
    if (c == 0) return r;
    for (const auto& [ea, ca] : terms_) r.terms_.emplace(ea + e, ca * c);
    return r;
}

MultiPoly MultiPoly::derivative(int var) const {
    if (var < 0 || var >= arity_) raise(errc::invalid_arity, "variable index out of range");
    MultiPoly r(arity_);
    for (const auto& [e, c] : terms_) {
        int k = e[var];
        if (k == 0) continue;
        std::vector<int> d = e.entries();
        d[static_cast<size_t>(var)] = k - 1;
        r.add_term(Exponent(std::move(d)), c * Scalar(k));
    }
    return r;
}

MultiPoly MultiPoly::monic() const {
    if (terms_.empty()) return *this;
    return *this * (1 / leading_term().second);
}

MultiPoly MultiPoly::substitute(int var, const Scalar& value) const {
    if (var < 0 || var >= arity_) raise(errc::invalid_arity, "variable index out of range");
    MultiPoly r(arity_);
    for (const auto& [e, c] : terms_) {
        int k = e[var];
        if (k == 0) {
            r.add_term(e, c);
            continue;
        }
        std::vector<int> d = e.entries();
        d[static_cast<size_t>(var)] = 0;
        r.add_term(Exponent(std::move(d)), c * scalar_pow(value, k));
    }
    return r;
}

namespace {

template <typename V>
V eval_generic(const MultiPoly& f, std::span<const V> point, const V& one) {
    if (static_cast<int>(point.size()) != f.arity())
        raise(errc::arity_mismatch, "evaluation point arity != polynomial arity");
    // cache powers per variable
    std::vector<std::vector<V>> powers(point.size());
    for (size_t i = 0; i < point.size(); ++i) powers[i].push_back(one);
    auto power = [&](size_t var, int k) -> const V& {
        auto& cache = powers[var];
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * point[var]);
        return cache[static_cast<size_t>(k)];
    };
    bool first = true;
    V acc = one; // placeholder; reassigned on first term
    for (const auto& [e, c] : f.terms()) {
        V term = one * c;
        for (int i = 0; i < f.arity(); ++i)
            if (e[i] > 0) term = term * power(static_cast<size_t>(i), e[i]);
        if (first) {
            acc = term;
            first = false;
        } else {
            acc = acc + term;
        }
    }
    if (first) return one * Scalar(0);
    return acc;
}

} // namespace

Scalar MultiPoly::eval(std::span<const Scalar> point) const {
    return eval_generic<Scalar>(*this, point, Scalar(1));
}

LaurentPoly MultiPoly::eval(std::span<const LaurentPoly> point) const {
    return eval_generic<LaurentPoly>(*this, point, LaurentPoly(1));
}

TruncSeries MultiPoly::eval(std::span<const TruncSeries> point) const {
    if (static_cast<int>(point.size()) != arity_)
        raise(errc::arity_mismatch, "evaluation point arity != polynomial arity");
    long prec = kOrdInf;
    for (const auto& s : point) prec = std::min(prec, s.prec());
    return eval_generic<TruncSeries>(*this, point, TruncSeries::from_poly(LaurentPoly(1), prec));
}

std::vector<std::string> default_var_names(int arity) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(arity));
    for (int i = 0; i < arity; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

std::string MultiPoly::str(const std::vector<std::string>& names_in) const {
    if (terms_.empty()) return "0";
    std::vector<std::string> names = names_in.empty() ? default_var_names(arity_) : names_in;
    if (static_cast<int>(names.size()) != arity_)
        raise(errc::arity_mismatch, "variable name list arity mismatch");
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Scalar a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool has_vars = e.total() > 0;
        bool coeff_shown = (a != 1) || !has_vars;
        if (coeff_shown) out << scalar_str(a);
        bool star = coeff_shown;
        for (int i = 0; i < arity_; ++i) {
            if (e[i] == 0) continue;
            if (star) out << "*";
            out << names[static_cast<size_t>(i)];
            if (e[i] > 1) out << "^" << e[i];
            star = true;
        }
    }
    return out.str();
}

namespace {

struct PCursor {
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
};

int match_name(PCursor& c, const std::vector<std::string>& names) {
    c.skip_ws();
    int best = -1;
    size_t best_len = 0;
    for (size_t v = 0; v < names.size(); ++v) {
        const std::string& nm = names[v];
        if (nm.size() > best_len && c.s.substr(c.i, nm.size()) == nm) {
            best = static_cast<int>(v);
            best_len = nm.size();
        }
    }
    if (best >= 0) c.i += best_len;
    return best;
}

} // namespace

MultiPoly MultiPoly::parse(std::string_view text, int arity, const std::vector<std::string>& names_in) {
    std::vector<std::string> names = names_in.empty() ? default_var_names(arity) : names_in;
    if (static_cast<int>(names.size()) != arity)
        raise(errc::arity_mismatch, "variable name list arity mismatch");
    PCursor c{text};
    MultiPoly result(arity);
    bool expect_term = true;
    bool saw_any = false;
    int sign = 1;
    while (!c.done()) {
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            ++c.i;
            if (expect_term) {
                sign = (ch == '-') ? -sign : sign;
            } else {
                sign = (ch == '-') ? -1 : 1;
                expect_term = true;
            }
            continue;
        }
        if (!expect_term)
            raise(errc::parse_error,
                  "unexpected '" + std::string(1, ch) + "' at position " + std::to_string(c.i));

        Scalar coeff(1);
        std::vector<int> exps(static_cast<size_t>(arity), 0);
        bool saw_factor = false;
        for (;;) {
            c.skip_ws();
            if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
                size_t start = c.i;
                while (c.i < c.s.size() &&
                       (std::isdigit(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '/' ||
                        c.s[c.i] == '.'))
                    ++c.i;
                coeff *= parse_scalar(c.s.substr(start, c.i - start));
                saw_factor = true;
            } else {
                int v = match_name(c, names);
                if (v < 0) break;
                int power = 1;
                c.skip_ws();
                if (c.i < c.s.size() && c.s[c.i] == '^') {
                    ++c.i;
                    c.skip_ws();
                    size_t start = c.i;
                    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
                    if (c.i == start)
                        raise(errc::parse_error, "expected exponent at position " + std::to_string(start));
                    power = std::stoi(std::string(c.s.substr(start, c.i - start)));
                }
                exps[static_cast<size_t>(v)] += power;
                saw_factor = true;
            }
            c.skip_ws();
            if (c.i < c.s.size() && c.s[c.i] == '*') {
                ++c.i;
                continue;
            }
            break;
        }
        if (!saw_factor)
            raise(errc::parse_error, "expected term at position " + std::to_string(c.i));
        result.add_term(Exponent(std::move(exps)), sign < 0 ? Scalar(-coeff) : coeff);
        sign = 1;
        expect_term = false;
        saw_any = true;
    }
    if (expect_term || !saw_any)
        raise(errc::parse_error, "incomplete polynomial: '" + std::string(text) + "'");
    return result;
}

MultiPoly homogenize(const MultiPoly& f) {
    if (f.is_zero()) return MultiPoly(f.arity() + 1);
    int d = f.total_degree();
    MultiPoly r(f.arity() + 1);
    for (const auto& [e, c] : f.terms()) {
        std::vector<int> ext;
        ext.reserve(static_cast<size_t>(f.arity()) + 1);
        ext.push_back(d - e.total());
        ext.insert(ext.end(), e.entries().begin(), e.entries().end());
        r.add_term(Exponent(std::move(ext)), c);
    }
    return r;
}

} // namespace cdim
