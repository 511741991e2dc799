#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qeuler/eulerian.hpp"
#include "qeuler/perm.hpp"
#include "qeuler/poly.hpp"
#include "qeuler/qanalog.hpp"
#include "qeuler/report.hpp"

namespace qeuler {

// Symmetric (or quasisymmetric) polynomial restricted to x_1..x_m,
// homogeneous of the stated degree.
struct SymPoly {
    Poly value;
    int vars = 0;
    int degree = 0;
};

inline bool is_homogeneous(const SymPoly& f) {
    if (f.value.is_zero()) return true;
    if (!f.value.is_homogeneous(f.degree)) return false;
    for (Var v : f.value.variables())
        if (v.code() < Var::x(1).code() || v.code() > Var::x(f.vars).code()) return false;
    return true;
}

// Invariance under every adjacent transposition of the variable indices.
inline bool is_symmetric(const SymPoly& f) {
    for (int i = 1; i < f.vars; ++i) {
        std::map<Var, Poly> swap{{Var::x(i), Poly::variable(Var::x(i + 1))},
                                 {Var::x(i + 1), Poly::variable(Var::x(i))}};
        if (!(f.value.substitute(swap) == f.value)) return false;
    }
    return true;
}

// Gessel fundamental quasisymmetric function F_{S,n} in m variables:
// the sum of x_{i_1}...x_{i_n} over weakly decreasing i_1 >= ... >= i_n
// with a strict drop i_j > i_{j+1} forced at every j in S.
inline Poly fundamental_F(const std::vector<int>& S, int n, int m) {
    if (n < 0 || m < 1) throw std::invalid_argument("fundamental_F: bad n or m");
    std::vector<bool> strict(n + 1, false);
    for (int s : S) {
        if (s < 1 || s > n - 1) throw std::invalid_argument("fundamental_F: S not within [n-1]");
        strict[s] = true;
    }
    if (n == 0) return Poly::one();
    Poly out;
    Monomial mono;
    std::function<void(int, int)> rec = [&](int pos, int maxidx) {
        if (pos > n) {
            out.add_term(mono, 1);
            return;
        }
        for (int i = 1; i <= maxidx; ++i) {
            Monomial saved = mono;
            mono = mono * Monomial::var(Var::x(i));
            rec(pos + 1, strict[pos] ? i - 1 : i);
            mono = saved;
        }
    };
    rec(1, m);
    return out;
}

// Complete homogeneous symmetric polynomial h_n in m variables.
inline Poly complete_homogeneous(int n, int m) { return fundamental_F({}, n, m); }

// One fundamental term c * F_{S,n} of a quasisymmetric expansion.
struct FTerm {
    std::vector<int> descents;
    Poly coeff = Poly::one();
};

// Principal specialization x_i := q^{i-1} of sum_k c_k F_{S_k,n}, returned
// exactly as (numerator, n):  numerator / ((1-q)(1-q^2)...(1-q^n)), with
// numerator = sum_k c_k q^{sum S_k}.  All terms must share the degree n.
inline std::pair<Poly, int> principal_specialization(const std::vector<FTerm>& terms, int n) {
    Poly numerator;
    for (const FTerm& t : terms) {
        int s = 0;
        for (int d : t.descents) {
            if (d < 1 || d > n - 1)
                throw std::invalid_argument("principal_specialization: descent outside [n-1]");
            s += d;
        }
        numerator += t.coeff * Poly::monomial(Monomial::var(Var::q(), s), 1);
    }
    return {numerator, n};
}

// 1/((1-q)(1-q^2)...(1-q^n)) expanded modulo q^N.
inline Poly inverse_qpochhammer(int n, int N) {
    Poly out = Poly::one();
    for (int i = 1; i <= n; ++i) {
        Poly geom;
        for (int e = 0; e < N; e += i) geom.add_term(Monomial::var(Var::q(), e), 1);
        out = (out * geom).truncate_in(Var::q(), N);
    }
    return out;
}

// Truncated evaluation of the principal specialization, valid modulo q^N.
inline Poly principal_specialization_truncated(const std::vector<FTerm>& terms, int n, int N) {
    auto [numerator, deg] = principal_specialization(terms, n);
    return (numerator * inverse_qpochhammer(deg, N)).truncate_in(Var::q(), N);
}

namespace detail {

inline SymPoly sum_F_exd(int n, int m, const PermFilter& filter) {
    Poly value = sum_over_perms(
        n, filter,
        [&](const Perm&, const StatRecord& s) { return fundamental_F(s.exd_set, n, m); },
        1, StatDepth::light);
    return SymPoly{value, m, n};
}

}  // namespace detail

// Q_{n,j}: sum of F_{Exd(sigma),n} over sigma in S_n with exc(sigma) = j.
inline SymPoly Q_nj(int n, int j, int m) {
    if (j < 0) throw std::invalid_argument("Q_nj: negative j");
    return detail::sum_F_exd(n, m, PermFilter::with_exc(j));
}

// Q_{lambda,j}: same sum restricted to permutations of cycle type lambda.
inline SymPoly Q_lambda_j(const std::vector<int>& lambda, int j, int m) {
    if (j < 0) throw std::invalid_argument("Q_lambda_j: negative j");
    int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    PermFilter shape = PermFilter::with_cycle_type(lambda);
    Poly value = sum_over_perms(
        n, shape,
        [&](const Perm&, const StatRecord& s) {
            return s.exc == j ? fundamental_F(s.exd_set, n, m) : Poly::zero();
        },
        1, StatDepth::light);
    return SymPoly{value, m, n};
}

// tilde Q_{n,j}: the derangement-restricted sum.
inline SymPoly tildeQ_nj(int n, int j, int m) {
    if (j < 0) throw std::invalid_argument("tildeQ_nj: negative j");
    Poly value = sum_over_perms(
        n, PermFilter::derangements(),
        [&](const Perm&, const StatRecord& s) {
            return s.exc == j ? fundamental_F(s.exd_set, n, m) : Poly::zero();
        },
        1, StatDepth::light);
    return SymPoly{value, m, n};
}

// Generating-function identity for the Q_{n,j}, checked through z^N with
// m >= N variables by cross-multiplication:
//   (H(zt) - t H(z)) * sum_n (sum_j Q_{n,j} t^j) z^n = (1-t) H(z),
// where H(z) = sum h_n z^n with ordinary coefficients.
inline Report verify_symfun_egf(int N, int m) {
    Report rep;
    rep.theorem = "thm2-1";
    rep.n_or_N = N;
    if (m < N) throw std::invalid_argument("verify_symfun_egf: need m >= N");
    Poly t = Poly::variable(Var::t());

    ZSeries qgen(N), denom(N), numer(N);
    for (int n = 0; n <= N; ++n) {
        Poly coeff;
        for (int j = 0; j <= std::max(0, n - 1); ++j)
            coeff += Q_nj(n, j, m).value * Poly::monomial(Monomial::var(Var::t(), j), 1);
        qgen.set(n, coeff);
        Poly h = complete_homogeneous(n, m);
        denom.set(n, h * (t.pow(n) - t));
        numer.set(n, (Poly::one() - t) * h);
    }
    ZSeries product = series_mul(denom, qgen);
    for (int n = 0; n <= N; ++n)
        rep.add("n=" + std::to_string(n), n, product[n] == numer[n], product[n].to_string(),
                numer[n].to_string());
    return rep;
}

// Q_{n,j} = sum_{k=0..n} h_k tildeQ_{n-k,j}, checked exactly per (n, j).
inline Report verify_derangement_factorization(int max_n, int m) {
    Report rep;
    rep.theorem = "cor2-3";
    rep.n_or_N = max_n;
    for (int n = 0; n <= max_n; ++n)
        for (int j = 0; j <= std::max(0, n - 1); ++j) {
            Poly lhs = Q_nj(n, j, m).value;
            Poly rhs;
            for (int k = 0; k <= n; ++k)
                rhs += complete_homogeneous(k, m) * tildeQ_nj(n - k, j, m).value;
            rep.add("n=" + std::to_string(n) + " j=" + std::to_string(j), n, lhs == rhs,
                    lhs.to_string(), rhs.to_string());
        }
    return rep;
}

// tildeQ_{n,j} = sum over 0 <= k <= n-2 and j+k-n < i < j of tildeQ_{k,i} h_{n-k}.
inline Report verify_derangement_recurrence(int max_n, int m) {
    Report rep;
    rep.theorem = "rec9";
    rep.n_or_N = max_n;
    for (int n = 1; n <= max_n; ++n)
        for (int j = 0; j <= std::max(0, n - 1); ++j) {
            Poly lhs = tildeQ_nj(n, j, m).value;
            Poly rhs;
            for (int k = 0; k <= n - 2; ++k)
                for (int i = std::max(0, j + k - n + 1); i < j; ++i)
                    rhs += tildeQ_nj(k, i, m).value * complete_homogeneous(n - k, m);
            rep.add("n=" + std::to_string(n) + " j=" + std::to_string(j), n, lhs == rhs,
                    lhs.to_string(), rhs.to_string());
        }
    return rep;
}

// Principal specialization of sum_j Q_{n,j} t^j:
//  (a) the exact numerator sum_sigma q^(sum Exd(sigma)) t^exc matches the
//      brute-force sum of q^(maj-exc) t^exc,
//  (b) substituting t -> tq recovers the (maj, exc) polynomial,
//  (c) the truncated evaluation x_i := q^{i-1} (m = q_order variables) agrees
//      with the closed form modulo q^q_order.
inline Report verify_principal_specialization(int max_n, int q_order) {
    Report rep;
    rep.theorem = "eq5-6";
    rep.n_or_N = max_n;
    for (int n = 0; n <= max_n; ++n) {
        std::vector<FTerm> terms;
        Poly direct;
        for_each_perm(
            n,
            [&](const Perm&, const StatRecord& s) {
                Poly texc = Poly::monomial(Monomial::var(Var::t(), s.exc), 1);
                terms.push_back(FTerm{s.exd_set, texc});
                direct.add_term(
                    Monomial::var(Var::q(), s.maj - s.exc) * Monomial::var(Var::t(), s.exc), 1);
            },
            StatDepth::light);
        auto [numerator, deg] = principal_specialization(terms, n);
        rep.add("numerator n=" + std::to_string(n), n, numerator == direct, numerator.to_string(),
                direct.to_string());

        Poly tq = Poly::variable(Var::t()) * Poly::variable(Var::q());
        Poly shifted = numerator.substitute(Var::t(), tq);
        Poly majexc = maj_exc_poly(n);
        rep.add("t->tq n=" + std::to_string(n), n, shifted == majexc, shifted.to_string(),
                majexc.to_string());

        if (n <= q_order) {
            Poly closed = principal_specialization_truncated(terms, n, q_order);
            Poly evaluated;
            std::map<Var, Poly> bind;
            for (int i = 1; i <= q_order; ++i)
                bind.emplace(Var::x(i), Poly::monomial(Monomial::var(Var::q(), i - 1), 1));
            for (int j = 0; j <= std::max(0, n - 1); ++j) {
                Poly spec = Q_nj(n, j, q_order).value.substitute(bind);
                evaluated += spec * Poly::monomial(Monomial::var(Var::t(), j), 1);
            }
            evaluated = evaluated.truncate_in(Var::q(), q_order);
            rep.add("truncated n=" + std::to_string(n), n, closed == evaluated, closed.to_string(),
                    evaluated.to_string());
        }
    }
    return rep;
}

}  // namespace qeuler
