#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qeuler/bigint.hpp"

namespace qeuler {

/*
 * Sparse multivariate polynomials with BigInt coefficients over the fixed
 * variable universe q < t < r < u < x1 < x2 < ...  Values are immutable in
 * spirit: every operation returns a new canonical polynomial (no stored zero
 * coefficients, exponents nonnegative), so equality is map equality and all
 * operations are safe to call concurrently.
 */

class Var {
public:
    static constexpr Var q() { return Var(0); }
    static constexpr Var t() { return Var(1); }
    static constexpr Var r() { return Var(2); }
    static constexpr Var u() { return Var(3); }
    static Var x(int i) {
        if (i < 1) throw std::invalid_argument("Var::x: index must be >= 1");
        return Var(3 + i);
    }

    constexpr int code() const { return code_; }

    std::string name() const {
        switch (code_) {
            case 0: return "q";
            case 1: return "t";
            case 2: return "r";
            case 3: return "u";
            default: return "x" + std::to_string(code_ - 3);
        }
    }

    friend constexpr bool operator==(Var a, Var b) { return a.code_ == b.code_; }
    friend constexpr bool operator<(Var a, Var b) { return a.code_ < b.code_; }

private:
    explicit constexpr Var(int code) : code_(code) {}
    int code_;
};

// Product of variable powers; factors sorted by variable, exponents > 0.
class Monomial {
public:
    Monomial() = default;

    static Monomial var(Var v, int exp = 1) {
        if (exp < 0) throw std::invalid_argument("Monomial: negative exponent");
        Monomial m;
        if (exp > 0) m.factors_.emplace_back(v, exp);
        return m;
    }

    bool trivial() const { return factors_.empty(); }

    int degree() const {
        int d = 0;
        for (const auto& [v, e] : factors_) d += e;
        return d;
    }

    int exponent(Var v) const {
        for (const auto& [w, e] : factors_)
            if (w == v) return e;
        return 0;
    }

    const std::vector<std::pair<Var, int>>& factors() const { return factors_; }

    Monomial operator*(const Monomial& o) const {
        Monomial m;
        auto a = factors_.begin(), ae = factors_.end();
        auto b = o.factors_.begin(), be = o.factors_.end();
        while (a != ae || b != be) {
            if (b == be || (a != ae && a->first < b->first)) {
                m.factors_.push_back(*a++);
            } else if (a == ae || b->first < a->first) {
                m.factors_.push_back(*b++);
            } else {
                m.factors_.emplace_back(a->first, a->second + b->second);
                ++a, ++b;
            }
        }
        return m;
    }

    std::string to_string() const {
        if (trivial()) return "1";
        std::string out;
        for (const auto& [v, e] : factors_) {
            if (!out.empty()) out += "*";
            out += v.name();
            if (e > 1) out += "^" + std::to_string(e);
        }
        return out;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.factors_ == b.factors_;
    }

private:
    std::vector<std::pair<Var, int>> factors_;
};

// Graded-lexicographic order: total degree first, then the earlier variable
// with the larger exponent wins.  Fixes the canonical serialization order.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        auto ia = a.factors().begin(), ae = a.factors().end();
        auto ib = b.factors().begin(), be = b.factors().end();
        while (ia != ae || ib != be) {
            if (ib == be) return false;       // a has a positive exponent where b has 0
            if (ia == ae) return true;
            if (ia->first == ib->first) {
                if (ia->second != ib->second) return ia->second < ib->second;
                ++ia, ++ib;
            } else if (ia->first < ib->first) {
                return false;
            } else {
                return true;
            }
        }
        return false;
    }
};

class Poly {
public:
    using TermMap = std::map<Monomial, BigInt, GrlexLess>;

    Poly() = default;
    Poly(int c) { if (c != 0) terms_[Monomial()] = c; }
    Poly(const BigInt& c) { if (c != 0) terms_[Monomial()] = c; }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(1); }
    static Poly variable(Var v) { return monomial(Monomial::var(v), 1); }

    static Poly monomial(const Monomial& m, const BigInt& c) {
        Poly p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    BigInt coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    BigInt constant_term() const { return coefficient(Monomial()); }

    // The polynomial as an integer; throws when any variable survives.
    BigInt as_integer() const {
        if (terms_.empty()) return 0;
        if (terms_.size() != 1 || !terms_.begin()->first.trivial())
            throw std::domain_error("as_integer: polynomial is not constant");
        return terms_.begin()->second;
    }

    int degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    int degree_in(Var v) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
        return d;
    }

    std::set<Var> variables() const {
        std::set<Var> out;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.factors()) out.insert(v);
        return out;
    }

    bool is_homogeneous(int deg) const {
        for (const auto& [m, c] : terms_)
            if (m.degree() != deg) return false;
        return true;
    }

    void add_term(const Monomial& m, const BigInt& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    Poly operator+(const Poly& o) const { Poly p = *this; p += o; return p; }
    Poly operator-(const Poly& o) const { Poly p = *this; p -= o; return p; }

    Poly operator-() const {
        Poly p;
        for (const auto& [m, c] : terms_) p.terms_[m] = -c;
        return p;
    }

    Poly operator*(const Poly& o) const {
        Poly p;
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) p.add_term(ma * mb, ca * cb);
        return p;
    }

    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly operator*(const BigInt& c) const {
        Poly p;
        if (c != 0)
            for (const auto& [m, co] : terms_) p.terms_[m] = co * c;
        return p;
    }

    friend Poly operator*(const BigInt& c, const Poly& p) { return p * c; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    Poly pow(int e) const {
        if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
        Poly out = one(), base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) out *= base;
            if (e > 1) base *= base;
        }
        return out;
    }

    // Simultaneous substitution; unbound variables pass through.
    Poly substitute(const std::map<Var, Poly>& bindings) const {
        Poly out;
        for (const auto& [m, c] : terms_) {
            Poly term(c);
            Monomial untouched;
            for (const auto& [v, e] : m.factors()) {
                auto it = bindings.find(v);
                if (it == bindings.end())
                    untouched = untouched * Monomial::var(v, e);
                else
                    term *= it->second.pow(e);
            }
            if (!untouched.trivial()) term *= monomial(untouched, 1);
            out += term;
        }
        return out;
    }

    Poly substitute(Var v, const Poly& value) const { return substitute({{v, value}}); }

    // Drops every term whose exponent in v is >= bound (reduction mod v^bound).
    Poly truncate_in(Var v, int bound) const {
        Poly out;
        for (const auto& [m, c] : terms_)
            if (m.exponent(v) < bound) out.terms_[m] = c;
        return out;
    }

    // Canonical text form, e.g. "1 + 2*q + q^2*t"; terms in grlex order.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            BigInt mag = c < 0 ? BigInt(-c) : c;
            std::string piece;
            if (m.trivial())
                piece = mag.str();
            else if (mag == 1)
                piece = m.to_string();
            else
                piece = mag.str() + "*" + m.to_string();
            if (first) {
                out = (c < 0 ? "-" : "") + piece;
                first = false;
            } else {
                out += (c < 0 ? " - " : " + ") + piece;
            }
        }
        return out;
    }

    static Poly parse(std::string_view s);

private:
    TermMap terms_;
};

namespace detail {

inline void skip_space(std::string_view s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline BigInt parse_number(std::string_view s, size_t& i) {
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw std::invalid_argument("Poly::parse: expected a number");
    return BigInt(std::string(s.substr(start, i - start)));
}

inline Var parse_var(std::string_view s, size_t& i) {
    char c = s[i++];
    switch (c) {
        case 'q': return Var::q();
        case 't': return Var::t();
        case 'r': return Var::r();
        case 'u': return Var::u();
        case 'x': {
            if (i < s.size() && s[i] == '_') ++i;
            BigInt idx = parse_number(s, i);
            if (idx < 1 || idx > 1000000) throw std::invalid_argument("Poly::parse: bad x index");
            return Var::x(static_cast<int>(idx));
        }
        default:
            throw std::invalid_argument(std::string("Poly::parse: unknown variable '") + c + "'");
    }
}

}  // namespace detail

inline Poly Poly::parse(std::string_view s) {
    using detail::skip_space;
    size_t i = 0;
    skip_space(s, i);
    if (i == s.size()) throw std::invalid_argument("Poly::parse: empty input");
    Poly out;
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
            skip_space(s, i);
        } else if (!first) {
            throw std::invalid_argument("Poly::parse: expected '+' or '-' between terms");
        }
        BigInt coeff = 1;
        bool have_coeff = false, have_var = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coeff = detail::parse_number(s, i);
            have_coeff = true;
        }
        Monomial mono;
        while (true) {
            skip_space(s, i);
            size_t save = i;
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_space(s, i);
            }
            if (i >= s.size() || !std::isalpha(static_cast<unsigned char>(s[i]))) {
                i = save;
                break;
            }
            Var v = detail::parse_var(s, i);
            int exp = 1;
            skip_space(s, i);
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip_space(s, i);
                BigInt e = detail::parse_number(s, i);
                if (e < 0 || e > 1000000) throw std::invalid_argument("Poly::parse: bad exponent");
                exp = static_cast<int>(e);
            }
            mono = mono * Monomial::var(v, exp);
            have_var = true;
        }
        if (!have_coeff && !have_var)
            throw std::invalid_argument("Poly::parse: empty term");
        out.add_term(mono, sign < 0 ? BigInt(-coeff) : coeff);
        first = false;
        skip_space(s, i);
        if (i < s.size() && s[i] != '+' && s[i] != '-')
            throw std::invalid_argument("Poly::parse: unexpected character");
    }
    return out;
}

}  // namespace qeuler
