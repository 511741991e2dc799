#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qeuler/letters.hpp"
#include "qeuler/quasisym.hpp"
#include "qeuler/report.hpp"

namespace qeuler {

// Duval's algorithm: the unique factorization of a word into a weakly
// (lexicographically) decreasing sequence of Lyndon words.
inline std::vector<Word> lyndon_factorize(const Word& w, AlphabetOrder ord) {
    if (w.empty()) throw std::invalid_argument("lyndon_factorize: empty word");
    std::vector<Word> factors;
    size_t n = w.size(), i = 0;
    while (i < n) {
        size_t j = i + 1, k = i;
        while (j < n && !letter_less(w[j], w[k], ord)) {
            if (letter_less(w[k], w[j], ord))
                k = i;
            else
                ++k;
            ++j;
        }
        size_t len = j - k;
        while (i <= k) {
            factors.emplace_back(w.begin() + i, w.begin() + i + len);
            i += len;
        }
    }
    return factors;
}

// Partition of the word length by Lyndon factor sizes, weakly decreasing.
inline std::vector<int> lyndon_type(const Word& w, AlphabetOrder ord) {
    std::vector<int> parts;
    for (const Word& f : lyndon_factorize(w, ord)) parts.push_back(static_cast<int>(f.size()));
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

namespace detail {

// Compares the infinite periodic expansions of two circular words over the
// interleaved alphabet; a shared prefix of length lcm(|a|,|b|) settles it.
inline int compare_periodic(const Word& a, const Word& b) {
    size_t la = a.size(), lb = b.size();
    size_t len = std::lcm(la, lb);
    for (size_t i = 0; i < len; ++i) {
        const BarredLetter& x = a[i % la];
        const BarredLetter& y = b[i % lb];
        if (letter_less(x, y, AlphabetOrder::interleaved)) return -1;
        if (letter_less(y, x, AlphabetOrder::interleaved)) return 1;
    }
    return 0;
}

}  // namespace detail

// A word up to rotation, stored in the canonical rotation (the one whose
// infinite clockwise reading is lexicographically smallest).
class CircularWord {
public:
    explicit CircularWord(Word letters) : letters_(std::move(letters)) {
        if (letters_.empty()) throw std::invalid_argument("CircularWord: empty word");
        canonicalize();
    }

    const Word& letters() const { return letters_; }
    int size() const { return static_cast<int>(letters_.size()); }

    bool primitive() const {
        size_t n = letters_.size();
        for (size_t k = 1; k < n; ++k) {
            if (n % k != 0) continue;
            bool fixed = true;
            for (size_t i = 0; fixed && i < n; ++i) fixed = letters_[i] == letters_[(i + k) % n];
            if (fixed) return false;
        }
        return true;
    }

    std::string to_string() const { return "(" + word_to_string(letters_) + ")"; }

    friend bool operator==(const CircularWord&, const CircularWord&) = default;

private:
    void canonicalize() {
        size_t n = letters_.size(), best = 0;
        for (size_t r = 1; r < n; ++r) {
            Word cand(letters_.begin() + r, letters_.end());
            cand.insert(cand.end(), letters_.begin(), letters_.begin() + r);
            Word cur(letters_.begin() + best, letters_.end());
            cur.insert(cur.end(), letters_.begin(), letters_.begin() + best);
            if (detail::compare_periodic(cand, cur) < 0) best = r;
        }
        std::rotate(letters_.begin(), letters_.begin() + best, letters_.end());
    }

    Word letters_;
};

// Total order on necklaces: lexicographic on the smallest infinite reading,
// with the word length as a tiebreak for non-primitive circular words.
inline int necklace_compare(const CircularWord& a, const CircularWord& b) {
    int c = detail::compare_periodic(a.letters(), b.letters());
    if (c != 0) return c;
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

// Bar rule on a circular word: a letter followed clockwise by a larger
// absolute value must be barred, by a smaller one must be unbarred, and
// equal neighbours leave the bar free.
inline bool satisfies_circular_bar_rule(const Word& w) {
    size_t n = w.size();
    for (size_t i = 0; i < n; ++i) {
        const BarredLetter& cur = w[i];
        const BarredLetter& next = w[(i + 1) % n];
        if (cur.value < next.value && !cur.barred) return false;
        if (cur.value > next.value && cur.barred) return false;
    }
    return true;
}

// Necklace: primitive, satisfies the bar rule, and is not a single barred
// letter.
inline bool is_necklace(const CircularWord& c) {
    if (c.size() == 1 && c.letters()[0].barred) return false;
    return c.primitive() && satisfies_circular_bar_rule(c.letters());
}

// All necklaces of a given size with letter values bounded by max_letter.
inline std::vector<CircularWord> necklaces_of_size(int size, int max_letter) {
    if (size < 1 || max_letter < 1) throw std::invalid_argument("necklaces_of_size: bad bounds");
    std::vector<CircularWord> out;
    std::set<Word, WordDedupLess> seen;
    Word w(size);
    // Choose absolute values, then bars at the free (equal-neighbour) spots.
    std::function<void(int)> values = [&](int pos) {
        if (pos == size) {
            std::vector<int> free_spots;
            for (int i = 0; i < size; ++i) {
                const BarredLetter& next = w[(i + 1) % size];
                w[i].barred = w[i].value < next.value;
                if (w[i].value == next.value) free_spots.push_back(i);
            }
            int nfree = static_cast<int>(free_spots.size());
            for (int mask = 0; mask < (1 << nfree); ++mask) {
                for (int b = 0; b < nfree; ++b) w[free_spots[b]].barred = (mask >> b) & 1;
                CircularWord c(w);
                if (is_necklace(c) && seen.insert(c.letters()).second) out.push_back(c);
            }
            return;
        }
        for (int v = 1; v <= max_letter; ++v) {
            w[pos].value = v;
            values(pos + 1);
        }
    };
    values(0);
    std::sort(out.begin(), out.end(), [](const CircularWord& a, const CircularWord& b) {
        return necklace_compare(a, b) > 0;
    });
    return out;
}

// Ornament: a multiset of necklaces, stored weakly decreasing in necklace
// order.  The type is the partition of necklace sizes.
class Ornament {
public:
    explicit Ornament(std::vector<CircularWord> necklaces) : necklaces_(std::move(necklaces)) {
        for (const CircularWord& c : necklaces_)
            if (!is_necklace(c)) throw std::invalid_argument("Ornament: component is not a necklace");
        std::sort(necklaces_.begin(), necklaces_.end(),
                  [](const CircularWord& a, const CircularWord& b) {
                      return necklace_compare(a, b) > 0;
                  });
    }

    const std::vector<CircularWord>& necklaces() const { return necklaces_; }

    std::vector<int> type() const {
        std::vector<int> parts;
        for (const CircularWord& c : necklaces_) parts.push_back(c.size());
        std::sort(parts.rbegin(), parts.rend());
        return parts;
    }

    int bars() const {
        int total = 0;
        for (const CircularWord& c : necklaces_) total += bar_count(c.letters());
        return total;
    }

    Poly weight() const {
        Poly out = Poly::one();
        for (const CircularWord& c : necklaces_) out *= word_weight(c.letters());
        return out;
    }

    std::string to_string() const {
        std::string out;
        for (const CircularWord& c : necklaces_) out += c.to_string();
        return out;
    }

    friend bool operator==(const Ornament&, const Ornament&) = default;

private:
    std::vector<CircularWord> necklaces_;
};

inline bool ornament_less(const Ornament& a, const Ornament& b) {
    const auto& x = a.necklaces();
    const auto& y = b.necklaces();
    for (size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
        int c = necklace_compare(x[i], y[i]);
        if (c != 0) return c < 0;
    }
    return x.size() < y.size();
}

// All ornaments of the given type with letters <= max_letter, optionally
// restricted to a bar count.
inline std::vector<Ornament> enumerate_ornaments(const std::vector<int>& type,
                                                 std::optional<int> bars, int max_letter) {
    std::map<int, int> multiplicity;  // necklace size -> count
    for (size_t i = 0; i < type.size(); ++i) {
        if (type[i] < 1) throw std::invalid_argument("enumerate_ornaments: bad partition");
        if (i > 0 && type[i] > type[i - 1])
            throw std::invalid_argument("enumerate_ornaments: partition not weakly decreasing");
        ++multiplicity[type[i]];
    }
    std::vector<Ornament> out;
    std::vector<CircularWord> chosen;
    std::vector<std::pair<int, int>> groups(multiplicity.begin(), multiplicity.end());
    std::map<int, std::vector<CircularWord>> pool;
    for (const auto& [sz, cnt] : groups) pool[sz] = necklaces_of_size(sz, max_letter);

    std::function<void(size_t)> pick_group = [&](size_t g) {
        if (g == groups.size()) {
            Ornament orn(chosen);
            if (!bars || orn.bars() == *bars) out.push_back(orn);
            return;
        }
        auto [sz, cnt] = groups[g];
        const auto& candidates = pool[sz];
        // multiset choice: indices weakly increasing
        std::function<void(int, int)> pick = [&](int start, int left) {
            if (left == 0) {
                pick_group(g + 1);
                return;
            }
            for (int i = start; i < static_cast<int>(candidates.size()); ++i) {
                chosen.push_back(candidates[i]);
                pick(i, left - 1);
                chosen.pop_back();
            }
        };
        pick(0, cnt);
    };
    pick_group(0);
    std::sort(out.begin(), out.end(), ornament_less);
    return out;
}

// Banner bar rule: B(i) barred when |B(i)| < |B(i+1)|, unbarred when
// |B(i)| > |B(i+1)| or i is the last position; free on equal neighbours.
inline bool is_banner(const Word& w) {
    if (w.empty()) return true;
    size_t n = w.size();
    for (size_t i = 0; i + 1 < n; ++i) {
        if (w[i].value < w[i + 1].value && !w[i].barred) return false;
        if (w[i].value > w[i + 1].value && w[i].barred) return false;
    }
    return !w[n - 1].barred;
}

// Banners of the given length with letters <= max_letter; optional filters
// on the bar count and on excluding Lyndon types with parts of size 1.
inline std::vector<Word> enumerate_banners(int length, std::optional<int> bars,
                                           bool exclude_singleton_factors, int max_letter) {
    if (length < 0 || max_letter < 1) throw std::invalid_argument("enumerate_banners: bad bounds");
    std::vector<Word> out;
    if (length == 0) {
        if ((!bars || *bars == 0)) out.push_back(Word{});
        return out;
    }
    Word w(length);
    std::function<void(int)> values = [&](int pos) {
        if (pos == length) {
            std::vector<int> free_spots;
            for (int i = 0; i + 1 < length; ++i) {
                w[i].barred = w[i].value < w[i + 1].value;
                if (w[i].value == w[i + 1].value) free_spots.push_back(i);
            }
            w[length - 1].barred = false;
            int nfree = static_cast<int>(free_spots.size());
            for (int mask = 0; mask < (1 << nfree); ++mask) {
                for (int b = 0; b < nfree; ++b) w[free_spots[b]].barred = (mask >> b) & 1;
                if (bars && bar_count(w) != *bars) continue;
                if (exclude_singleton_factors) {
                    std::vector<int> type = lyndon_type(w, AlphabetOrder::interleaved);
                    if (!type.empty() && type.back() == 1) continue;
                }
                out.push_back(w);
            }
            return;
        }
        for (int v = 1; v <= max_letter; ++v) {
            w[pos].value = v;
            values(pos + 1);
        }
    };
    values(0);
    return out;
}

// Wraps each Lyndon factor (interleaved order) into a circular word.  For a
// valid banner this always lands on an ornament of the same type, weight and
// bar count.
inline Ornament banner_to_ornament(const Word& banner) {
    if (!is_banner(banner)) throw std::invalid_argument("banner_to_ornament: bar rule violated");
    if (banner.empty()) return Ornament({});
    std::vector<CircularWord> parts;
    for (const Word& f : lyndon_factorize(banner, AlphabetOrder::interleaved))
        parts.emplace_back(f);
    return Ornament(std::move(parts));
}

// Weakly increasing positive sequence with a mark 1 <= j <= length-1.
struct MarkedSequence {
    std::vector<int> values;
    int mark = 1;
};

inline std::vector<MarkedSequence> enumerate_marked_sequences(int length, int max_letter) {
    std::vector<MarkedSequence> out;
    if (length < 2) return out;  // no valid mark exists below length 2
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int lo) {
        if (static_cast<int>(cur.size()) == length) {
            for (int j = 1; j <= length - 1; ++j) out.push_back(MarkedSequence{cur, j});
            return;
        }
        for (int v = lo; v <= max_letter; ++v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

inline Poly marked_sequence_weight(const MarkedSequence& s) {
    Monomial m;
    for (int v : s.values) m = m * Monomial::var(Var::x(v));
    return Poly::monomial(m, 1);
}

// ---------------------------------------------------------------------------
// Identity checks
// ---------------------------------------------------------------------------

// Ornament expansion: Q_{lambda,j} equals the weight sum over ornaments of
// type lambda with j bars, for all lambda |- n and all j.
inline Report verify_ornament_expansion(int max_n, int max_letter) {
    Report rep;
    rep.theorem = "thm2-2";
    rep.n_or_N = max_n;
    for (int n = 1; n <= max_n; ++n)
        for (const std::vector<int>& lambda : partitions_of(n))
            for (int j = 0; j <= n; ++j) {
                Poly lhs = Q_lambda_j(lambda, j, max_letter).value;
                Poly rhs;
                for (const Ornament& orn : enumerate_ornaments(lambda, j, max_letter))
                    rhs += orn.weight();
                rep.add("n=" + std::to_string(n) + " lambda=" + partition_to_string(lambda) +
                            " j=" + std::to_string(j),
                        n, lhs == rhs, lhs.to_string(), rhs.to_string());
            }
    return rep;
}

// Banner expansion: tildeQ_{n,j} equals the weight sum over banners of
// length n with j bars whose Lyndon type has no singleton parts.
inline Report verify_banner_expansion(int max_n, int m) {
    Report rep;
    rep.theorem = "cor2-4";
    rep.n_or_N = max_n;
    for (int n = 1; n <= max_n; ++n)
        for (int j = 0; j <= n; ++j) {
            Poly lhs = tildeQ_nj(n, j, m).value;
            Poly rhs;
            for (const Word& b : enumerate_banners(n, j, true, m)) rhs += word_weight(b);
            rep.add("n=" + std::to_string(n) + " j=" + std::to_string(j), n, lhs == rhs,
                    lhs.to_string(), rhs.to_string());
        }
    return rep;
}

// The Lyndon wrap-around map is a weight- and bar-preserving bijection from
// banners of type lambda with j bars onto ornaments of the same type and
// bars, letters bounded on both sides.
inline Report verify_banner_ornament_bijection(int max_n, int max_letter) {
    Report rep;
    rep.theorem = "prop2-5";
    rep.n_or_N = max_n;
    for (int n = 1; n <= max_n; ++n)
        for (const std::vector<int>& lambda : partitions_of(n))
            for (int j = 0; j <= n; ++j) {
                std::vector<Ornament> images;
                bool ok = true;
                std::string note;
                for (const Word& b : enumerate_banners(n, j, false, max_letter)) {
                    if (lyndon_type(b, AlphabetOrder::interleaved) != lambda) continue;
                    Ornament img = banner_to_ornament(b);
                    if (img.type() != lambda || img.bars() != j ||
                        !(img.weight() == word_weight(b))) {
                        ok = false;
                        note = "image mismatch for banner " + word_to_string(b);
                        break;
                    }
                    images.push_back(img);
                }
                std::vector<Ornament> expected = enumerate_ornaments(lambda, j, max_letter);
                if (ok) {
                    std::sort(images.begin(), images.end(), ornament_less);
                    for (size_t i = 0; ok && i + 1 < images.size(); ++i)
                        if (images[i] == images[i + 1]) {
                            ok = false;
                            note = "not injective";
                        }
                    if (ok && !(images == expected)) {
                        ok = false;
                        note = "image set differs from ornament set";
                    }
                }
                rep.add("n=" + std::to_string(n) + " lambda=" + partition_to_string(lambda) +
                            " j=" + std::to_string(j),
                        n, ok, note.empty() ? std::to_string(images.size()) + " banners" : note,
                        std::to_string(expected.size()) + " ornaments");
            }
    return rep;
}

// Weight recurrence implied by the marked-sequence decomposition: with
// BW_n = sum over banners of length n (no singleton Lyndon parts) of
// w(B) u^bars(B), and BW_0 = 1,
//   BW_n = sum_{k=2..n} BW_{n-k} * h_k * (u + u^2 + ... + u^{k-1}).
inline Report verify_banner_weight_recurrence(int max_n, int m) {
    Report rep;
    rep.theorem = "thm2-6";
    rep.n_or_N = max_n;
    Poly u = Poly::variable(Var::u());
    auto banner_gf = [&](int n) {
        Poly out;
        for (const Word& b : enumerate_banners(n, std::nullopt, true, m))
            out += word_weight(b) * Poly::monomial(Monomial::var(Var::u(), bar_count(b)), 1);
        return out;
    };
    std::vector<Poly> bw(max_n + 1);
    for (int n = 0; n <= max_n; ++n) bw[n] = banner_gf(n);
    for (int n = 2; n <= max_n; ++n) {
        Poly rhs;
        for (int k = 2; k <= n; ++k) {
            Poly marks;
            for (int j = 1; j <= k - 1; ++j) marks.add_term(Monomial::var(Var::u(), j), 1);
            rhs += bw[n - k] * complete_homogeneous(k, m) * marks;
        }
        rep.add("n=" + std::to_string(n), n, bw[n] == rhs, bw[n].to_string(), rhs.to_string());
    }
    // Marked sequences of length k with letters <= m account for the factor
    // h_k * (u + ... + u^{k-1}); checked once so the struct stays honest.
    for (int k = 2; k <= std::min(4, max_n); ++k) {
        Poly direct;
        for (const MarkedSequence& s : enumerate_marked_sequences(k, m))
            direct += marked_sequence_weight(s) * Poly::monomial(Monomial::var(Var::u(), s.mark), 1);
        Poly marks;
        for (int j = 1; j <= k - 1; ++j) marks.add_term(Monomial::var(Var::u(), j), 1);
        Poly closed = complete_homogeneous(k, m) * marks;
        rep.add("marked k=" + std::to_string(k), k, direct == closed, direct.to_string(),
                closed.to_string());
    }
    return rep;
}

}  // namespace qeuler
