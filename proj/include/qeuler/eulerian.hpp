#pragma once

#include <map>
#include <vector>

#include "qeuler/perm.hpp"
#include "qeuler/qanalog.hpp"
#include "qeuler/report.hpp"
#include "qeuler/series.hpp"

namespace qeuler {

// sum over S_n of q^maj t^exc
inline Poly maj_exc_poly(int n, int threads = 1) {
    return sum_over_perms(
        n, PermFilter::all(),
        [](const Perm&, const StatRecord& s) {
            Monomial m = Monomial::var(Var::q(), s.maj) * Monomial::var(Var::t(), s.exc);
            return Poly::monomial(m, 1);
        },
        threads, StatDepth::light);
}

// sum over S_n of q^maj t^exc r^fix
inline Poly fix_refined_poly(int n, int threads = 1) {
    return sum_over_perms(
        n, PermFilter::all(),
        [](const Perm&, const StatRecord& s) {
            Monomial m = Monomial::var(Var::q(), s.maj) * Monomial::var(Var::t(), s.exc) *
                         Monomial::var(Var::r(), s.fix);
            return Poly::monomial(m, 1);
        },
        threads, StatDepth::light);
}

// sum over S_n of q^aid t^des, aid = (admissible inversions) + des
inline Poly aid_des_poly(int n, int threads = 1) {
    return sum_over_perms(
        n, PermFilter::all(),
        [](const Perm&, const StatRecord& s) {
            Monomial m = Monomial::var(Var::q(), s.aid) * Monomial::var(Var::t(), s.des);
            return Poly::monomial(m, 1);
        },
        threads, StatDepth::full);
}

// Classical Eulerian polynomial, sum of t^des.
inline Poly eulerian_poly(int n) {
    return sum_over_perms(
        n, PermFilter::all(),
        [](const Perm&, const StatRecord& s) {
            return Poly::monomial(Monomial::var(Var::t(), s.des), 1);
        },
        1, StatDepth::light);
}

// Cache of the (maj, exc) family, indexed by n.
class QEulerianTable {
public:
    explicit QEulerianTable(int threads = 1) : threads_(threads) {}

    const Poly& get(int n) {
        auto it = table_.find(n);
        if (it == table_.end()) it = table_.emplace(n, maj_exc_poly(n, threads_)).first;
        return it->second;
    }

private:
    int threads_;
    std::map<int, Poly> table_;
};

// Checks, through z^N, that the (maj, exc) polynomials satisfy the
// q-exponential generating function identity
//   sum_n A_n(q,t) z^n/[n]_q! = (1-tq) exp_q(z) / (exp_q(ztq) - tq exp_q(z)).
// Division is avoided: with D = exp_q(ztq) - tq exp_q(z) and
// R = (1-tq) exp_q(z), the check is D * LHS = R as normalized series.
// The q -> 1 specialization (the classical e^z form, with plain binomial
// convolution) is checked alongside.
inline Report verify_maj_exc_egf(int N, int threads = 1) {
    Report rep;
    rep.theorem = "thm1-1";
    rep.n_or_N = N;

    Poly tq = Poly::variable(Var::t()) * Poly::variable(Var::q());
    ZSeries lhs(N);
    QEulerianTable table(threads);
    for (int n = 0; n <= N; ++n) lhs.set(n, table.get(n));

    // denom = exp_q(z*tq) - tq*exp_q(z)
    ZSeries denom = series_sub(q_exp_series(N, tq), [&] {
        ZSeries e = q_exp_series(N);
        ZSeries out(N);
        for (int n = 0; n <= N; ++n) out.set(n, tq * e[n]);
        return out;
    }());
    ZSeries numer(N);
    {
        ZSeries e = q_exp_series(N);
        Poly one_minus_tq = Poly::one() - tq;
        for (int n = 0; n <= N; ++n) numer.set(n, one_minus_tq * e[n]);
    }

    ZSeries product = series_mul_weighted(denom, lhs, qbinom_weights());
    for (int n = 0; n <= N; ++n) {
        bool ok = product[n] == numer[n];
        rep.add("n=" + std::to_string(n), n, ok, product[n].to_string(), numer[n].to_string());
    }

    // q = 1: classical Eulerian EGF, cross-multiplied with integer binomials.
    Poly t = Poly::variable(Var::t());
    std::map<Var, Poly> q1{{Var::q(), Poly::one()}};
    ZSeries lhs1(N), denom1(N), numer1(N);
    for (int n = 0; n <= N; ++n) {
        lhs1.set(n, table.get(n).substitute(q1));
        denom1.set(n, t.pow(n) - t);
        numer1.set(n, Poly::one() - t);
    }
    ZSeries product1 = series_mul_weighted(denom1, lhs1, binom_weights());
    for (int n = 0; n <= N; ++n) {
        bool ok = product1[n] == numer1[n];
        rep.add("q=1 n=" + std::to_string(n), n, ok, product1[n].to_string(),
                numer1[n].to_string());
    }
    return rep;
}

// Right-hand side of the fixed-point refinement: the sum over m and ordered
// tuples (k_0, k_1, ..., k_m) with k_0 >= 0, k_1..k_m >= 2 and sum n of
//   (tq)^m [n; k_0,...,k_m]_q r^{k_0} prod_i [k_i - 1]_{tq}.
inline Poly fix_refinement_rhs(int n) {
    Poly tq = Poly::variable(Var::t()) * Poly::variable(Var::q());
    Poly out;
    std::vector<int> parts;
    // Ordered tuples: recursion over k_1..k_m once k_0 is fixed.
    std::function<void(int, Poly)> rec = [&](int rest, Poly inner) {
        if (rest == 0) {
            int m = static_cast<int>(parts.size()) - 1;
            out += tq.pow(m) * q_multinomial(n, parts) *
                   Poly::monomial(Monomial::var(Var::r(), parts[0]), 1) * inner;
        }
        for (int k = 2; k <= rest; ++k) {
            parts.push_back(k);
            rec(rest - k, inner * q_int(k - 1, tq));
            parts.pop_back();
        }
    };
    for (int k0 = 0; k0 <= n; ++k0) {
        parts.assign(1, k0);
        rec(n - k0, Poly::one());
    }
    return out;
}

inline Report verify_fix_refinement(int max_n, int threads = 1) {
    Report rep;
    rep.theorem = "thm1-2";
    rep.n_or_N = max_n;
    for (int n = 0; n <= max_n; ++n) {
        Poly lhs = fix_refined_poly(n, threads);
        Poly rhs = fix_refinement_rhs(n);
        rep.add("n=" + std::to_string(n), n, lhs == rhs, lhs.to_string(), rhs.to_string());
    }
    return rep;
}

inline Report verify_aid_des_equidistribution(int max_n, int threads = 1) {
    Report rep;
    rep.theorem = "thm4-1";
    rep.n_or_N = max_n;
    for (int n = 1; n <= max_n; ++n) {
        Poly lhs = aid_des_poly(n, threads);
        Poly rhs = maj_exc_poly(n, threads);
        rep.add("n=" + std::to_string(n), n, lhs == rhs, lhs.to_string(), rhs.to_string());
    }
    return rep;
}

// t = 1 and q = 1 reductions of the (maj, exc) polynomial: [n]_q! and the
// classical Eulerian polynomial.
inline Report verify_reductions(int max_n, int threads = 1) {
    Report rep;
    rep.theorem = "reductions";
    rep.n_or_N = max_n;
    for (int n = 0; n <= max_n; ++n) {
        Poly a = maj_exc_poly(n, threads);
        Poly at1 = a.substitute(Var::t(), Poly::one());
        Poly fact = q_factorial(n);
        rep.add("t=1 n=" + std::to_string(n), n, at1 == fact, at1.to_string(), fact.to_string());
        Poly aq1 = a.substitute(Var::q(), Poly::one());
        Poly eul = eulerian_poly(n);
        rep.add("q=1 n=" + std::to_string(n), n, aq1 == eul, aq1.to_string(), eul.to_string());
    }
    return rep;
}

}  // namespace qeuler
