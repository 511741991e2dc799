#pragma once

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qeuler/poly.hpp"

namespace qeuler {

/*
 * Truncated formal power series in z with Poly coefficients.  Coefficient n
 * is the z^n entry; the truncation order is explicit and binary operations
 * truncate to the smaller order of the two operands.
 *
 * Two coefficient conventions coexist.  Ordinary series store the plain z^n
 * coefficients and multiply by Cauchy convolution.  Normalized exponential
 * series store the numerator a_n of a_n z^n / [n]_q! (all arithmetic stays in
 * integer polynomials); their product is the weighted convolution
 *     c_n = sum_k w(n,k) a_k b_{n-k}
 * with w the q-binomial (or plain binomial after q -> 1).  Weight functions
 * live in qanalog.hpp.
 */
class ZSeries {
public:
    explicit ZSeries(int order) {
        if (order < 0) throw std::invalid_argument("ZSeries: negative order");
        coeffs_.resize(order + 1);
    }

    static ZSeries from_coeffs(std::vector<Poly> coeffs) {
        if (coeffs.empty()) throw std::invalid_argument("ZSeries: no coefficients");
        ZSeries s(static_cast<int>(coeffs.size()) - 1);
        s.coeffs_ = std::move(coeffs);
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Poly& operator[](int n) const {
        check_index(n);
        return coeffs_[n];
    }

    void set(int n, Poly p) {
        check_index(n);
        coeffs_[n] = std::move(p);
    }

    friend bool operator==(const ZSeries& a, const ZSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    void check_index(int n) const {
        if (n < 0 || n > order()) throw std::out_of_range("ZSeries: index out of range");
    }

    std::vector<Poly> coeffs_;
};

using ConvWeight = std::function<Poly(int n, int k)>;

inline ZSeries series_add(const ZSeries& a, const ZSeries& b) {
    ZSeries out(std::min(a.order(), b.order()));
    for (int n = 0; n <= out.order(); ++n) out.set(n, a[n] + b[n]);
    return out;
}

inline ZSeries series_sub(const ZSeries& a, const ZSeries& b) {
    ZSeries out(std::min(a.order(), b.order()));
    for (int n = 0; n <= out.order(); ++n) out.set(n, a[n] - b[n]);
    return out;
}

// Cauchy product of ordinary series.
inline ZSeries series_mul(const ZSeries& a, const ZSeries& b) {
    ZSeries out(std::min(a.order(), b.order()));
    for (int n = 0; n <= out.order(); ++n) {
        Poly c;
        for (int k = 0; k <= n; ++k) c += a[k] * b[n - k];
        out.set(n, c);
    }
    return out;
}

// Product of normalized exponential series (numerator representation).
inline ZSeries series_mul_weighted(const ZSeries& a, const ZSeries& b, const ConvWeight& w) {
    ZSeries out(std::min(a.order(), b.order()));
    for (int n = 0; n <= out.order(); ++n) {
        Poly c;
        for (int k = 0; k <= n; ++k) {
            if (a[k].is_zero() || b[n - k].is_zero()) continue;
            c += w(n, k) * a[k] * b[n - k];
        }
        out.set(n, c);
    }
    return out;
}

// z -> s*z: multiplies the n-th coefficient by s^n (valid in both conventions).
inline ZSeries series_scale_z(const ZSeries& a, const Poly& s) {
    ZSeries out(a.order());
    Poly power = Poly::one();
    for (int n = 0; n <= a.order(); ++n) {
        out.set(n, a[n] * power);
        if (n < a.order()) power *= s;
    }
    return out;
}

inline bool series_equal(const ZSeries& a, const ZSeries& b, int upto) {
    if (upto < 0 || upto > a.order() || upto > b.order())
        throw std::out_of_range("series_equal: comparison order exceeds truncation");
    for (int n = 0; n <= upto; ++n)
        if (!(a[n] == b[n])) return false;
    return true;
}

// First coefficient index in 0..upto where the two series differ, or -1.
inline int series_first_difference(const ZSeries& a, const ZSeries& b, int upto) {
    if (upto < 0 || upto > a.order() || upto > b.order())
        throw std::out_of_range("series_first_difference: order exceeds truncation");
    for (int n = 0; n <= upto; ++n)
        if (!(a[n] == b[n])) return n;
    return -1;
}

}  // namespace qeuler
