#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "qeuler/poly.hpp"

namespace qeuler {

// A barred or unbarred positive integer.  Printed as "3" / "3'" (apostrophe
// marks the bar).
struct BarredLetter {
    int value = 1;
    bool barred = false;

    friend bool operator==(const BarredLetter&, const BarredLetter&) = default;
};

using Word = std::vector<BarredLetter>;

// Two distinct orderings are in play and must never be mixed up:
//  - block:       1' < 2' < ... < 1 < 2 < ...   (all barred below all unbarred;
//                 used for the excedance-descent set of a barred permutation)
//  - interleaved: 1' < 1 < 2' < 2 < ...         (used for Lyndon factorization,
//                 necklaces and banners)
enum class AlphabetOrder { block, interleaved };

inline bool letter_less(const BarredLetter& a, const BarredLetter& b, AlphabetOrder ord) {
    if (ord == AlphabetOrder::block) {
        if (a.barred != b.barred) return a.barred;
        return a.value < b.value;
    }
    if (a.value != b.value) return a.value < b.value;
    return a.barred && !b.barred;
}

// Descent positions {i : w_i > w_{i+1}} of a word, 1-based.
inline std::vector<int> word_descents(const Word& w, AlphabetOrder ord) {
    std::vector<int> out;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (letter_less(w[i + 1], w[i], ord)) out.push_back(static_cast<int>(i) + 1);
    return out;
}

// Product of x_{|a|} over the letters (bars do not affect the weight).
inline Poly word_weight(const Word& w) {
    Monomial m;
    for (const BarredLetter& a : w) m = m * Monomial::var(Var::x(a.value));
    return Poly::monomial(m, 1);
}

inline int bar_count(const Word& w) {
    int bars = 0;
    for (const BarredLetter& a : w) bars += a.barred ? 1 : 0;
    return bars;
}

// Container ordering for dedup sets only; the two mathematical alphabet
// orders always go through letter_less with an explicit AlphabetOrder.
struct WordDedupLess {
    bool operator()(const Word& a, const Word& b) const {
        return std::lexicographical_compare(
            a.begin(), a.end(), b.begin(), b.end(), [](const BarredLetter& x, const BarredLetter& y) {
                return x.value != y.value ? x.value < y.value : x.barred < y.barred;
            });
    }
};

inline std::string letter_to_string(const BarredLetter& a) {
    return std::to_string(a.value) + (a.barred ? "'" : "");
}

inline std::string word_to_string(const Word& w) {
    std::string out;
    for (const BarredLetter& a : w) {
        if (!out.empty()) out += " ";
        out += letter_to_string(a);
    }
    return out;
}

}  // namespace qeuler
