#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qeuler/bigint.hpp"
#include "qeuler/perm.hpp"
#include "qeuler/poset.hpp"
#include "qeuler/quasisym.hpp"
#include "qeuler/report.hpp"

namespace qeuler {

// Order complex of a poset: faces[d] lists the d-dimensional faces (chains
// of d+1 elements), each written in increasing index order along the chain.
struct OrderComplex {
    std::vector<std::vector<std::vector<int>>> faces;

    int dimension() const { return static_cast<int>(faces.size()) - 1; }

    long long face_count(int d) const {
        if (d == -1) return 1;  // the empty face
        if (d < -1 || d > dimension()) return 0;
        return static_cast<long long>(faces[d].size());
    }
};

inline OrderComplex order_complex(const Poset& p) {
    OrderComplex out;
    std::vector<int> chain;
    std::function<void(int)> extend = [&](int last) {
        for (int next = 0; next < p.size(); ++next) {
            if (last >= 0 && !p.less(last, next)) continue;
            chain.push_back(next);
            int d = static_cast<int>(chain.size()) - 1;
            if (d >= static_cast<int>(out.faces.size())) out.faces.resize(d + 1);
            out.faces[d].push_back(chain);
            extend(next);
            chain.pop_back();
        }
    };
    extend(-1);
    return out;
}

// Exact rank of a sparse integer matrix by fraction-free (Bareiss) row
// elimination; rows are sorted (column, value) lists.
using SparseRow = std::vector<std::pair<int, BigInt>>;

inline long long sparse_rank(std::vector<SparseRow> rows, int ncols) {
    auto value_at = [](const SparseRow& row, int col) -> const BigInt* {
        auto it = std::lower_bound(row.begin(), row.end(), col,
                                   [](const auto& e, int c) { return e.first < c; });
        return (it != row.end() && it->first == col) ? &it->second : nullptr;
    };
    long long rank = 0;
    BigInt prev_pivot = 1;
    size_t active = 0;  // rows before this index are spent pivots
    for (int col = 0; col < ncols && active < rows.size(); ++col) {
        // pick the pivot with the smallest magnitude, then fewest entries
        size_t best = rows.size();
        for (size_t r = active; r < rows.size(); ++r) {
            const BigInt* v = value_at(rows[r], col);
            if (!v) continue;
            if (best == rows.size()) {
                best = r;
                continue;
            }
            const BigInt* bv = value_at(rows[best], col);
            BigInt av = abs(*v), ab = abs(*bv);
            if (av < ab || (av == ab && rows[r].size() < rows[best].size())) best = r;
        }
        if (best == rows.size()) continue;
        std::swap(rows[active], rows[best]);
        const SparseRow pivot_row = rows[active];
        const BigInt pivot = *value_at(pivot_row, col);
        // one-step fraction-free update; every remaining row is rescaled so
        // entries stay minors of the original matrix (divisions are exact)
        for (size_t r = active + 1; r < rows.size(); ++r) {
            const BigInt* v = value_at(rows[r], col);
            if (!v) {
                for (auto& [c, e] : rows[r]) e = pivot * e / prev_pivot;
                continue;
            }
            BigInt factor = *v;
            SparseRow merged;
            merged.reserve(rows[r].size() + pivot_row.size());
            auto a = rows[r].begin(), ae = rows[r].end();
            auto b = pivot_row.begin(), be = pivot_row.end();
            while (a != ae || b != be) {
                if (b == be || (a != ae && a->first < b->first)) {
                    merged.emplace_back(a->first, pivot * a->second / prev_pivot);
                    ++a;
                } else if (a == ae || b->first < a->first) {
                    merged.emplace_back(b->first, -factor * b->second / prev_pivot);
                    ++b;
                } else {
                    BigInt val = (pivot * a->second - factor * b->second) / prev_pivot;
                    if (val != 0) merged.emplace_back(a->first, val);
                    ++a, ++b;
                }
            }
            rows[r] = std::move(merged);
        }
        rows.erase(std::remove_if(rows.begin() + active + 1, rows.end(),
                                  [](const SparseRow& r) { return r.empty(); }),
                   rows.end());
        prev_pivot = pivot;
        ++active;
        ++rank;
    }
    return rank;
}

namespace detail {

// Boundary matrix from d-faces (columns) to (d-1)-faces (rows), reduced:
// d = 0 maps every vertex to the empty face.
inline std::vector<SparseRow> boundary_columns(const OrderComplex& cx, int d) {
    std::vector<SparseRow> cols;
    if (d < 0 || d > cx.dimension()) return cols;
    std::map<std::vector<int>, int> index;
    if (d > 0)
        for (size_t i = 0; i < cx.faces[d - 1].size(); ++i)
            index[cx.faces[d - 1][i]] = static_cast<int>(i);
    for (const std::vector<int>& face : cx.faces[d]) {
        SparseRow col;
        if (d == 0) {
            col.emplace_back(0, BigInt(1));
        } else {
            for (int k = 0; k <= d; ++k) {
                std::vector<int> sub = face;
                sub.erase(sub.begin() + k);
                col.emplace_back(index.at(sub), (k % 2 == 0) ? BigInt(1) : BigInt(-1));
            }
            std::sort(col.begin(), col.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
        }
        cols.push_back(std::move(col));
    }
    return cols;
}

}  // namespace detail

// Reduced Betti numbers over the rationals, keyed by dimension (-1 included:
// the complex of the empty poset has betti[-1] = 1).
inline std::map<int, long long> reduced_betti(const Poset& p) {
    OrderComplex cx = order_complex(p);
    int top = cx.dimension();
    std::map<int, long long> betti;
    // rank of each boundary map; boundary_rank[d] for d in 0..top
    std::vector<long long> brank(std::max(0, top + 2), 0);
    for (int d = 0; d <= top; ++d) {
        // rank is transposition-invariant; feed columns as rows
        long long rows_count = cx.face_count(d - 1);
        brank[d] = sparse_rank(detail::boundary_columns(cx, d), static_cast<int>(rows_count));
    }
    for (int d = -1; d <= top; ++d) {
        long long kernel = cx.face_count(d) - (d >= 0 ? brank[d] : 0);
        long long image_above = (d + 1 <= top) ? brank[d + 1] : 0;
        betti[d] = kernel - image_above;
    }
    return betti;
}

inline long long reduced_euler_characteristic(const OrderComplex& cx) {
    long long chi = -1;  // the empty face
    for (int d = 0; d <= cx.dimension(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * cx.face_count(d);
    return chi;
}

// Alternating sum of the Betti numbers must reproduce the reduced Euler
// characteristic; cheap independent check run by every verification below.
inline bool euler_characteristic_consistent(const Poset& p,
                                            const std::map<int, long long>& betti) {
    long long from_faces = reduced_euler_characteristic(order_complex(p));
    long long from_betti = 0;
    for (const auto& [d, b] : betti) {
        long long sign = (((d % 2) + 2) % 2 == 0) ? 1 : -1;  // d = -1 contributes -b
        from_betti += sign * b;
    }
    return from_faces == from_betti;
}

// (B_n \ {emptyset}) * C_n.
inline Poset rees_bn_cn(int n) {
    return rees_product(remove_bottom(boolean_lattice(n)), chain_poset(n));
}

// (B_n(p) \ {0}) * C_n over F_p.
inline Poset rees_bnq_cn(int n, int p) {
    return rees_product(remove_bottom(subspace_lattice(p, n)), chain_poset(n));
}

// Open ideal below the maximal element (top, j) of a Rees product with C_n,
// located by its label.
inline Poset rees_open_ideal(const Poset& rees, const std::string& top_label, int j) {
    return open_ideal(rees, rees.index_of("(" + top_label + "," + std::to_string(j) + ")"));
}

inline std::string betti_to_string(const std::map<int, long long>& betti) {
    std::string out = "{";
    for (const auto& [d, b] : betti) {
        if (out.size() > 1) out += ", ";
        out += std::to_string(d) + ":" + std::to_string(b);
    }
    return out + "}";
}

// Boolean Rees product homology: the top Betti number of the ideal below
// ([n], j) equals the number of permutations with j-1 excedances (checked
// both directly and as the coefficient of x_1...x_n in Q_{n,j-1}), and all
// lower homology vanishes.
inline Report verify_rees_homology_dims(int max_n) {
    Report rep;
    rep.theorem = "thm3-3";
    rep.n_or_N = max_n;
    for (int n = 1; n <= max_n; ++n) {
        Poset rees = rees_bn_cn(n);
        std::string top_label = boolean_lattice(n).label((1 << n) - 1);
        for (int j = 1; j <= n; ++j) {
            Poset ideal = rees_open_ideal(rees, top_label, j);
            std::map<int, long long> betti = reduced_betti(ideal);
            bool euler_ok = euler_characteristic_consistent(ideal, betti);

            BigInt eulerian = 0;
            for_each_perm(
                n, PermFilter::with_exc(j - 1),
                [&](const Perm&, const StatRecord&) { eulerian += 1; }, StatDepth::light);
            Monomial squarefree;
            for (int i = 1; i <= n; ++i) squarefree = squarefree * Monomial::var(Var::x(i));
            BigInt qdim = Q_nj(n, j - 1, n).value.coefficient(squarefree);

            long long top_betti = betti.count(n - 2) ? betti.at(n - 2) : 0;
            bool vanish = true;
            for (const auto& [d, b] : betti)
                if (d < n - 2 && b != 0) vanish = false;
            bool ok = euler_ok && vanish && BigInt(top_betti) == eulerian && qdim == eulerian;
            rep.add("n=" + std::to_string(n) + " j=" + std::to_string(j), n, ok,
                    "betti=" + betti_to_string(betti),
                    "eulerian=" + eulerian.str() + " qdim=" + qdim.str());
        }
    }
    return rep;
}

// Subspace-lattice analog at a fixed prime.  Reports three layers:
//  - "as-stated":   top Betti == sum over des(sigma) = j-1 of p^ai(sigma);
//  - "corrected":   top Betti == sum of p^(C(n,2) - ai(sigma)) (the form the
//                   computed homology actually satisfies);
//  - "flag-count":  sum_j top_betti(j) * p^(j-1) == p^(n-1) [n]_p!.
// The vanishing of lower homology and the Euler-characteristic cross-check
// are folded into every instance.
inline Report verify_subspace_rees_dims(int max_n, int p) {
    Report rep;
    rep.theorem = "eq13";
    rep.n_or_N = max_n;
    for (int n = 1; n <= max_n; ++n) {
        Poset full = subspace_lattice(p, n);
        std::string top_label = full.label(full.maximal_elements().front());
        Poset rees = rees_bnq_cn(n, p);
        std::vector<long long> top_betti(n + 1, 0);
        for (int j = 1; j <= n; ++j) {
            Poset ideal = rees_open_ideal(rees, top_label, j);
            std::map<int, long long> betti = reduced_betti(ideal);
            bool euler_ok = euler_characteristic_consistent(ideal, betti);
            top_betti[j] = betti.count(n - 2) ? betti.at(n - 2) : 0;
            bool vanish = true;
            for (const auto& [d, b] : betti)
                if (d < n - 2 && b != 0) vanish = false;

            BigInt stated = 0, corrected = 0;
            int pairs = n * (n - 1) / 2;
            for_each_perm(n, PermFilter::with_des(j - 1),
                          [&](const Perm&, const StatRecord& s) {
                              stated += int_pow(p, s.ai);
                              corrected += int_pow(p, pairs - s.ai);
                          });
            bool ok_stated = euler_ok && vanish && BigInt(top_betti[j]) == stated;
            bool ok_corrected = euler_ok && vanish && BigInt(top_betti[j]) == corrected;
            std::string inst = "n=" + std::to_string(n) + " j=" + std::to_string(j);
            rep.add("as-stated " + inst, n, ok_stated, std::to_string(top_betti[j]),
                    stated.str());
            rep.add("corrected " + inst, n, ok_corrected, std::to_string(top_betti[j]),
                    corrected.str());
        }
        BigInt weighted = 0;
        for (int j = 1; j <= n; ++j) weighted += BigInt(top_betti[j]) * int_pow(p, j - 1);
        BigInt flags = int_pow(p, n - 1) *
                       q_factorial(n).substitute(Var::q(), Poly(BigInt(p))).as_integer();
        rep.add("flag-count n=" + std::to_string(n), n, weighted == flags, weighted.str(),
                flags.str());
    }
    return rep;
}

// Generating-function comparison at a fixed prime: the series with z^n
// coefficient sum_j top_betti(I_{n,j}(p)) t^{j-1}, cross-multiplied against
// (1-t) exp_q(z) / (exp_q(zt) - t exp_q(z)) with q evaluated at p.
inline Report verify_subspace_rees_series(int max_n, int p) {
    Report rep;
    rep.theorem = "eq14";
    rep.n_or_N = max_n;
    Poly t = Poly::variable(Var::t());
    ZSeries lhs(max_n);
    lhs.set(0, Poly::one());
    for (int n = 1; n <= max_n; ++n) {
        Poset full = subspace_lattice(p, n);
        std::string top_label = full.label(full.maximal_elements().front());
        Poset rees = rees_bnq_cn(n, p);
        Poly coeff;
        for (int j = 1; j <= n; ++j) {
            std::map<int, long long> betti =
                reduced_betti(rees_open_ideal(rees, top_label, j));
            long long top = betti.count(n - 2) ? betti.at(n - 2) : 0;
            coeff += Poly(BigInt(top)) * Poly::monomial(Monomial::var(Var::t(), j - 1), 1);
        }
        lhs.set(n, coeff);
    }
    ZSeries expz = q_exp_series(max_n);
    ZSeries expzt = q_exp_series(max_n, t);
    ZSeries denom(max_n), numer(max_n);
    for (int n = 0; n <= max_n; ++n) {
        denom.set(n, expzt[n] - t * expz[n]);
        numer.set(n, (Poly::one() - t) * expz[n]);
    }
    ZSeries product = series_mul_weighted(denom, lhs, qbinom_weights_at(p));
    for (int n = 0; n <= max_n; ++n)
        rep.add("n=" + std::to_string(n), n, product[n] == numer[n], product[n].to_string(),
                numer[n].to_string());
    return rep;
}

}  // namespace qeuler
