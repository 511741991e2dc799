#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "qeuler/letters.hpp"
#include "qeuler/poly.hpp"

namespace qeuler {

// Permutation of {1..n} in one-line notation.
class Perm {
public:
    explicit Perm(std::vector<int> image) : image_(std::move(image)) {
        std::vector<bool> seen(image_.size(), false);
        for (int v : image_) {
            if (v < 1 || v > static_cast<int>(image_.size()) || seen[v - 1])
                throw std::invalid_argument("Perm: not a permutation of [n]");
            seen[v - 1] = true;
        }
    }

    static Perm identity(int n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        return Perm(std::move(img));
    }

    // "32541" for n <= 9, "10,3,1,..." otherwise (commas force the long form).
    static Perm parse(std::string_view s) {
        std::vector<int> img;
        if (s.find(',') != std::string_view::npos) {
            size_t i = 0;
            while (i < s.size()) {
                size_t j = s.find(',', i);
                if (j == std::string_view::npos) j = s.size();
                img.push_back(std::stoi(std::string(s.substr(i, j - i))));
                i = j + 1;
            }
        } else {
            for (char c : s) {
                if (c < '1' || c > '9') throw std::invalid_argument("Perm::parse: bad digit");
                img.push_back(c - '0');
            }
        }
        return Perm(std::move(img));
    }

    int size() const { return static_cast<int>(image_.size()); }

    // sigma(i), 1-based.
    int operator()(int i) const { return image_[i - 1]; }

    const std::vector<int>& image() const { return image_; }

    std::string to_string() const {
        bool wide = size() > 9;
        std::string out;
        for (int v : image_) {
            if (wide && !out.empty()) out += ",";
            out += std::to_string(v);
        }
        return out;
    }

    friend bool operator==(const Perm&, const Perm&) = default;

private:
    std::vector<int> image_;
};

enum class StatDepth { light, full };  // light skips inv and ai

struct StatRecord {
    std::vector<int> des_set, exc_set, exd_set;
    int des = 0, exc = 0, maj = 0, fix = 0;
    int inv = -1, ai = -1, aid = -1;      // -1 until computed (full depth)
    std::vector<int> cycle_type;          // partition of n, weakly decreasing
};

// An inversion (i,j) is admissible when sigma(j) < sigma(j+1), or some k
// strictly between i and j has sigma(k) < sigma(j).
inline int admissible_inversions(const Perm& p) {
    int n = p.size(), count = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (p(i) <= p(j)) continue;
            bool ok = j < n && p(j) < p(j + 1);
            for (int k = i + 1; !ok && k < j; ++k) ok = p(k) < p(j);
            if (ok) ++count;
        }
    return count;
}

inline StatRecord compute_stats(const Perm& p, StatDepth depth = StatDepth::full) {
    int n = p.size();
    StatRecord s;
    for (int i = 1; i < n; ++i)
        if (p(i) > p(i + 1)) {
            s.des_set.push_back(i);
            s.maj += i;
        }
    s.des = static_cast<int>(s.des_set.size());
    Word barred(n);
    for (int i = 1; i <= n; ++i) {
        if (p(i) > i) s.exc_set.push_back(i);
        if (p(i) == i) ++s.fix;
        barred[i - 1] = BarredLetter{p(i), p(i) > i};
    }
    s.exc = static_cast<int>(s.exc_set.size());
    s.exd_set = word_descents(barred, AlphabetOrder::block);

    std::vector<bool> seen(n, false);
    for (int i = 1; i <= n; ++i) {
        if (seen[i - 1]) continue;
        int len = 0, j = i;
        while (!seen[j - 1]) {
            seen[j - 1] = true;
            j = p(j);
            ++len;
        }
        s.cycle_type.push_back(len);
    }
    std::sort(s.cycle_type.rbegin(), s.cycle_type.rend());

    if (depth == StatDepth::full) {
        s.inv = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (p(i) > p(j)) ++s.inv;
        s.ai = admissible_inversions(p);
        s.aid = s.ai + s.des;
    }
    return s;
}

// Permutation selection for exhaustive scans.
class PermFilter {
public:
    static PermFilter all() { return PermFilter(Kind::all); }
    static PermFilter derangements() { return PermFilter(Kind::derangements); }
    static PermFilter with_exc(int j) { PermFilter f(Kind::exc); f.value_ = j; return f; }
    static PermFilter with_des(int j) { PermFilter f(Kind::des); f.value_ = j; return f; }
    static PermFilter with_cycle_type(std::vector<int> lambda) {
        PermFilter f(Kind::cycle_type);
        for (size_t i = 0; i < lambda.size(); ++i) {
            if (lambda[i] < 1) throw std::invalid_argument("PermFilter: bad partition part");
            if (i > 0 && lambda[i] > lambda[i - 1])
                throw std::invalid_argument("PermFilter: partition not weakly decreasing");
        }
        f.lambda_ = std::move(lambda);
        return f;
    }

    void validate(int n) const {
        if (kind_ == Kind::cycle_type) {
            long long total = std::accumulate(lambda_.begin(), lambda_.end(), 0LL);
            if (total != n) throw std::invalid_argument("PermFilter: partition does not sum to n");
        }
    }

    bool matches(const StatRecord& s) const {
        switch (kind_) {
            case Kind::all: return true;
            case Kind::derangements: return s.fix == 0;
            case Kind::exc: return s.exc == value_;
            case Kind::des: return s.des == value_;
            case Kind::cycle_type: return s.cycle_type == lambda_;
        }
        return false;
    }

private:
    enum class Kind { all, derangements, cycle_type, exc, des };
    explicit PermFilter(Kind k) : kind_(k) {}
    Kind kind_;
    int value_ = 0;
    std::vector<int> lambda_;
};

namespace detail {

inline int64_t factorial_i64(int n) {
    int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Permutation at the given lexicographic rank (factorial number system).
inline std::vector<int> unrank_perm(int n, int64_t rank) {
    std::vector<int> pool(n), img;
    std::iota(pool.begin(), pool.end(), 1);
    img.reserve(n);
    for (int i = n; i >= 1; --i) {
        int64_t f = factorial_i64(i - 1);
        int idx = static_cast<int>(rank / f);
        rank %= f;
        img.push_back(pool[idx]);
        pool.erase(pool.begin() + idx);
    }
    return img;
}

}  // namespace detail

// Visits qualifying permutations of [n] exactly once, in lexicographic order.
inline void for_each_perm(int n, const PermFilter& filter,
                          const std::function<void(const Perm&, const StatRecord&)>& fn,
                          StatDepth depth = StatDepth::full) {
    if (n < 0) throw std::invalid_argument("for_each_perm: negative n");
    filter.validate(n);
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    do {
        Perm p(img);
        StatRecord s = compute_stats(p, depth);
        if (filter.matches(s)) fn(p, s);
    } while (std::next_permutation(img.begin(), img.end()));
}

inline void for_each_perm(int n, const std::function<void(const Perm&, const StatRecord&)>& fn,
                          StatDepth depth = StatDepth::full) {
    for_each_perm(n, PermFilter::all(), fn, depth);
}

// Sum of term_fn over all qualifying permutations.  Workers scan disjoint
// rank ranges of S_n and the partial polynomials are merged; the result is
// independent of the thread count since Poly addition is exact.
inline Poly sum_over_perms(int n, const PermFilter& filter,
                           const std::function<Poly(const Perm&, const StatRecord&)>& term_fn,
                           int threads = 1, StatDepth depth = StatDepth::full) {
    if (n < 0) throw std::invalid_argument("sum_over_perms: negative n");
    filter.validate(n);
    if (n == 0) {
        // S_0 has exactly the empty permutation.
        Perm p(std::vector<int>{});
        StatRecord s = compute_stats(p, depth);
        return filter.matches(s) ? term_fn(p, s) : Poly::zero();
    }
    int64_t total = detail::factorial_i64(n);
    int workers = static_cast<int>(std::max<int64_t>(1, std::min<int64_t>(threads, total)));
    std::vector<Poly> partial(workers);
    auto run = [&](int w) {
        int64_t lo = total * w / workers, hi = total * (w + 1) / workers;
        if (lo >= hi) return;
        std::vector<int> img = detail::unrank_perm(n, lo);
        Poly acc;
        for (int64_t rank = lo; rank < hi; ++rank) {
            Perm p(img);
            StatRecord s = compute_stats(p, depth);
            if (filter.matches(s)) acc += term_fn(p, s);
            std::next_permutation(img.begin(), img.end());
        }
        partial[w] = std::move(acc);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }
    Poly out;
    for (Poly& part : partial) out += part;
    return out;
}

// Partitions of n in reverse lexicographic order, parts weakly decreasing.
inline std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

inline std::string partition_to_string(const std::vector<int>& lambda) {
    std::string out = "(";
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(lambda[i]);
    }
    return out + ")";
}

}  // namespace qeuler
