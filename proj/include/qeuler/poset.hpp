#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qeuler {

// Finite poset given by its strict order relation (stored as the full
// transitive closure) plus a rank function computed as chain height.
class Poset {
public:
    Poset() = default;

    Poset(std::vector<std::string> labels, std::vector<std::vector<bool>> strict_less)
        : labels_(std::move(labels)), less_(std::move(strict_less)) {
        size_t n = labels_.size();
        if (less_.size() != n) throw std::invalid_argument("Poset: relation size mismatch");
        for (size_t a = 0; a < n; ++a) {
            if (less_[a].size() != n) throw std::invalid_argument("Poset: relation size mismatch");
            if (less_[a][a]) throw std::invalid_argument("Poset: relation not irreflexive");
        }
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b)
                if (less_[a][b])
                    for (size_t c = 0; c < n; ++c)
                        if (less_[b][c] && !less_[a][c])
                            throw std::invalid_argument("Poset: relation not transitive");
        compute_ranks();
    }

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_.at(i); }
    bool less(int a, int b) const { return less_[a][b]; }
    int rank_of(int i) const { return rank_.at(i); }

    int index_of(std::string_view label) const {
        for (int i = 0; i < size(); ++i)
            if (labels_[i] == label) return i;
        throw std::out_of_range("Poset: no element labelled " + std::string(label));
    }

    // b covers a: a < b with nothing strictly between.
    bool covers(int a, int b) const {
        if (!less_[a][b]) return false;
        for (int c = 0; c < size(); ++c)
            if (less_[a][c] && less_[c][b]) return false;
        return true;
    }

    std::vector<std::pair<int, int>> cover_relations() const {
        std::vector<std::pair<int, int>> out;
        for (int a = 0; a < size(); ++a)
            for (int b = 0; b < size(); ++b)
                if (covers(a, b)) out.emplace_back(a, b);
        return out;
    }

    std::vector<int> maximal_elements() const {
        std::vector<int> out;
        for (int a = 0; a < size(); ++a) {
            bool maximal = true;
            for (int b = 0; maximal && b < size(); ++b) maximal = !less_[a][b];
            if (maximal) out.push_back(a);
        }
        return out;
    }

    // Every cover step raises rank by exactly one and all minimal elements
    // sit at rank zero; what the Rees product requires of its inputs.
    bool is_ranked_pure() const {
        for (const auto& [a, b] : cover_relations())
            if (rank_[b] != rank_[a] + 1) return false;
        return true;
    }

    Poset induced(const std::vector<int>& keep) const {
        std::vector<std::string> labels;
        labels.reserve(keep.size());
        for (int i : keep) labels.push_back(labels_.at(i));
        std::vector<std::vector<bool>> rel(keep.size(), std::vector<bool>(keep.size(), false));
        for (size_t a = 0; a < keep.size(); ++a)
            for (size_t b = 0; b < keep.size(); ++b) rel[a][b] = less_[keep[a]][keep[b]];
        return Poset(std::move(labels), std::move(rel));
    }

private:
    void compute_ranks() {
        int n = size();
        rank_.assign(n, 0);
        // height = longest chain below; process in any linear extension
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            int ca = 0, cb = 0;
            for (int i = 0; i < n; ++i) {
                ca += less_[i][a] ? 1 : 0;
                cb += less_[i][b] ? 1 : 0;
            }
            return ca < cb;
        });
        for (int v : order)
            for (int w = 0; w < n; ++w)
                if (less_[w][v]) rank_[v] = std::max(rank_[v], rank_[w] + 1);
    }

    std::vector<std::string> labels_;
    std::vector<std::vector<bool>> less_;
    std::vector<int> rank_;
};

// Lattice of subsets of [n] ordered by inclusion (2^n elements).
inline Poset boolean_lattice(int n) {
    if (n < 0) throw std::invalid_argument("boolean_lattice: negative n");
    int count = 1 << n;
    std::vector<std::string> labels(count);
    for (int s = 0; s < count; ++s) {
        std::string lab = "{";
        for (int i = 0; i < n; ++i)
            if ((s >> i) & 1) {
                if (lab.size() > 1) lab += ",";
                lab += std::to_string(i + 1);
            }
        labels[s] = lab + "}";
    }
    std::vector<std::vector<bool>> rel(count, std::vector<bool>(count, false));
    for (int a = 0; a < count; ++a)
        for (int b = 0; b < count; ++b) rel[a][b] = a != b && (a & b) == a;
    return Poset(std::move(labels), std::move(rel));
}

// The chain 1 < 2 < ... < n; element j has rank j-1.
inline Poset chain_poset(int n) {
    if (n < 1) throw std::invalid_argument("chain_poset: need n >= 1");
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) rel[a][b] = true;
    return Poset(std::move(labels), std::move(rel));
}

namespace detail {

// Subspaces of F_p^n as row-reduced echelon bases, each row a vector mod p.
struct Subspace {
    std::vector<std::vector<int>> rows;  // RREF basis, possibly empty
};

inline std::vector<int> reduce_mod(std::vector<int> vec, const std::vector<std::vector<int>>& rows,
                                   int p) {
    for (const auto& row : rows) {
        int pivot = -1;
        for (size_t i = 0; i < row.size(); ++i)
            if (row[i] != 0) {
                pivot = static_cast<int>(i);
                break;
            }
        if (pivot < 0 || vec[pivot] == 0) continue;
        int factor = vec[pivot];  // pivot entry of an RREF row is 1
        for (size_t i = 0; i < vec.size(); ++i)
            vec[i] = ((vec[i] - factor * row[i]) % p + p) % p;
    }
    return vec;
}

inline bool subspace_contains(const Subspace& big, const Subspace& small, int p) {
    for (const auto& v : small.rows) {
        std::vector<int> rem = reduce_mod(v, big.rows, p);
        for (int e : rem)
            if (e != 0) return false;
    }
    return true;
}

inline std::vector<Subspace> all_subspaces(int p, int n) {
    std::vector<Subspace> out;
    out.push_back(Subspace{});  // zero subspace
    for (int k = 1; k <= n; ++k) {
        // pivot columns c_0 < ... < c_{k-1}; free entries right of each pivot
        std::vector<int> cols(k);
        std::function<void(int, int)> choose = [&](int idx, int start) {
            if (idx == k) {
                std::vector<std::pair<int, int>> free_cells;  // (row, col)
                for (int a = 0; a < k; ++a)
                    for (int c = cols[a] + 1; c < n; ++c) {
                        bool is_pivot = std::find(cols.begin(), cols.end(), c) != cols.end();
                        if (!is_pivot) free_cells.emplace_back(a, c);
                    }
                std::vector<std::vector<int>> mat(k, std::vector<int>(n, 0));
                for (int a = 0; a < k; ++a) mat[a][cols[a]] = 1;
                long long total = 1;
                for (size_t i = 0; i < free_cells.size(); ++i) total *= p;
                for (long long code = 0; code < total; ++code) {
                    long long c = code;
                    for (const auto& [a, col] : free_cells) {
                        mat[a][col] = static_cast<int>(c % p);
                        c /= p;
                    }
                    out.push_back(Subspace{mat});
                }
                return;
            }
            for (int c = start; c < n; ++c) {
                cols[idx] = c;
                choose(idx + 1, c + 1);
            }
        };
        choose(0, 0);
    }
    return out;
}

inline std::string subspace_label(const Subspace& s) {
    if (s.rows.empty()) return "<0>";
    std::string out = "<";
    for (size_t a = 0; a < s.rows.size(); ++a) {
        if (a) out += ",";
        for (int e : s.rows[a]) out += std::to_string(e);
    }
    return out + ">";
}

}  // namespace detail

// Lattice of subspaces of F_p^n ordered by containment; p in {2, 3}.
inline Poset subspace_lattice(int p, int n) {
    if (p != 2 && p != 3) throw std::invalid_argument("subspace_lattice: unsupported field size");
    if (n < 1) throw std::invalid_argument("subspace_lattice: need n >= 1");
    std::vector<detail::Subspace> spaces = detail::all_subspaces(p, n);
    int count = static_cast<int>(spaces.size());
    std::vector<std::string> labels(count);
    for (int i = 0; i < count; ++i) labels[i] = detail::subspace_label(spaces[i]);
    std::vector<std::vector<bool>> rel(count, std::vector<bool>(count, false));
    for (int a = 0; a < count; ++a)
        for (int b = 0; b < count; ++b) {
            if (a == b) continue;
            if (spaces[a].rows.size() >= spaces[b].rows.size()) continue;
            rel[a][b] = detail::subspace_contains(spaces[b], spaces[a], p);
        }
    return Poset(std::move(labels), std::move(rel));
}

// Drops the unique minimum (ranks are recomputed by the constructor).
inline Poset remove_bottom(const Poset& p) {
    std::vector<int> minima;
    for (int a = 0; a < p.size(); ++a) {
        bool minimal = true;
        for (int b = 0; minimal && b < p.size(); ++b) minimal = !p.less(b, a);
        if (minimal) minima.push_back(a);
    }
    if (minima.size() != 1) throw std::invalid_argument("remove_bottom: minimum not unique");
    std::vector<int> keep;
    for (int a = 0; a < p.size(); ++a)
        if (a != minima[0]) keep.push_back(a);
    return p.induced(keep);
}

// Rees product P*Q: pairs (p, q) with rank_P(p) >= rank_Q(q), ordered by
// (p1,q1) <= (p2,q2) iff p1 <= p2, q1 <= q2 and
// rank_P(p2) - rank_P(p1) >= rank_Q(q2) - rank_Q(q1).
inline Poset rees_product(const Poset& P, const Poset& Q) {
    if (!P.is_ranked_pure() || !Q.is_ranked_pure())
        throw std::invalid_argument("rees_product: inputs must be pure ranked posets");
    std::vector<std::pair<int, int>> elems;
    for (int a = 0; a < P.size(); ++a)
        for (int b = 0; b < Q.size(); ++b)
            if (P.rank_of(a) >= Q.rank_of(b)) elems.emplace_back(a, b);
    int count = static_cast<int>(elems.size());
    std::vector<std::string> labels(count);
    for (int i = 0; i < count; ++i)
        labels[i] = "(" + P.label(elems[i].first) + "," + Q.label(elems[i].second) + ")";
    std::vector<std::vector<bool>> rel(count, std::vector<bool>(count, false));
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j) {
            if (i == j) continue;
            auto [p1, q1] = elems[i];
            auto [p2, q2] = elems[j];
            bool ple = p1 == p2 || P.less(p1, p2);
            bool qle = q1 == q2 || Q.less(q1, q2);
            if (!ple || !qle) continue;
            rel[i][j] = P.rank_of(p2) - P.rank_of(p1) >= Q.rank_of(q2) - Q.rank_of(q1);
        }
    return Poset(std::move(labels), std::move(rel));
}

// Induced subposet on {x : x < top}.
inline Poset open_ideal(const Poset& p, int top) {
    if (top < 0 || top >= p.size()) throw std::invalid_argument("open_ideal: no such element");
    std::vector<int> keep;
    for (int a = 0; a < p.size(); ++a)
        if (p.less(a, top)) keep.push_back(a);
    return p.induced(keep);
}

// Debug/golden-test dump: {"elements": [...], "covers": [[a,b],...], "ranks": [...]}.
inline std::string poset_json(const Poset& p) {
    std::string out = "{\"elements\":[";
    for (int i = 0; i < p.size(); ++i) {
        if (i) out += ",";
        out += "\"" + p.label(i) + "\"";
    }
    out += "],\"covers\":[";
    bool first = true;
    for (const auto& [a, b] : p.cover_relations()) {
        if (!first) out += ",";
        first = false;
        out += "[" + std::to_string(a) + "," + std::to_string(b) + "]";
    }
    out += "],\"ranks\":[";
    for (int i = 0; i < p.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p.rank_of(i));
    }
    return out + "]}";
}

}  // namespace qeuler
