#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "qeuler/poly.hpp"
#include "qeuler/series.hpp"

namespace qeuler {

// [n]_v = 1 + v + ... + v^{n-1}, with [0]_v = 0.  The base may be any
// polynomial, e.g. the product t*q.
inline Poly q_int(int n, const Poly& base) {
    if (n < 0) throw std::invalid_argument("q_int: negative argument");
    Poly out, power = Poly::one();
    for (int i = 0; i < n; ++i) {
        out += power;
        if (i + 1 < n) power *= base;
    }
    return out;
}

inline Poly q_int(int n) { return q_int(n, Poly::variable(Var::q())); }

// [n]_q! = [n]_q [n-1]_q ... [1]_q, empty product for n = 0.
inline Poly q_factorial(int n) {
    if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
    Poly out = Poly::one();
    for (int i = 1; i <= n; ++i) out *= q_int(i);
    return out;
}

// Gaussian binomial via the Pascal recurrence
//   [n,k]_q = [n-1,k-1]_q + q^k [n-1,k]_q,
// which keeps everything division-free.
inline Poly q_binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("q_binomial: negative n");
    if (k < 0 || k > n) return Poly::zero();
    std::vector<Poly> row(static_cast<size_t>(k) + 1);
    row[0] = Poly::one();
    Poly q = Poly::variable(Var::q());
    for (int i = 1; i <= n; ++i) {
        int top = std::min(i, k);
        for (int j = top; j >= 1; --j) {
            Poly qj = Poly::monomial(Monomial::var(Var::q(), j), 1);
            row[j] = (j == i ? Poly::zero() : qj * row[j]) + row[j - 1];
        }
    }
    return row[k];
}

// q-multinomial as a product of q-binomials; parts must sum to n.
inline Poly q_multinomial(int n, const std::vector<int>& parts) {
    long long total = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("q_multinomial: negative part");
        total += p;
    }
    if (total != n) throw std::invalid_argument("q_multinomial: parts do not sum to n");
    Poly out = Poly::one();
    int rest = n;
    for (int p : parts) {
        out *= q_binomial(rest, p);
        rest -= p;
    }
    return out;
}

// exp_q(s*z) truncated at the given order, in the normalized numerator
// representation: the n-th entry is s^n (so exp_q(z) is all ones).
inline ZSeries q_exp_series(int order, const Poly& arg_scale) {
    ZSeries out(order);
    Poly power = Poly::one();
    for (int n = 0; n <= order; ++n) {
        out.set(n, power);
        if (n < order) power *= arg_scale;
    }
    return out;
}

inline ZSeries q_exp_series(int order) { return q_exp_series(order, Poly::one()); }

// Convolution weights for products of normalized exponential series.
inline ConvWeight qbinom_weights() {
    return [](int n, int k) { return q_binomial(n, k); };
}

// Same weights with q evaluated at an integer (used for checks at fixed q).
inline ConvWeight qbinom_weights_at(const BigInt& qv) {
    return [qv](int n, int k) {
        return Poly(q_binomial(n, k).substitute(Var::q(), Poly(qv)).as_integer());
    };
}

// Classical exponential-series weights (the q -> 1 specialization).
inline ConvWeight binom_weights() {
    return [](int n, int k) { return Poly(binomial(n, k)); };
}

}  // namespace qeuler
