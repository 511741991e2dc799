#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qeuler/qanalog.hpp"
#include "qeuler/series.hpp"

using namespace qeuler;

namespace {

ZSeries random_series(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> expo(0, 2);
    ZSeries s(order);
    for (int n = 0; n <= order; ++n) {
        Poly p;
        p.add_term(Monomial::var(Var::q(), expo(rng)), coeff(rng));
        p.add_term(Monomial(), coeff(rng));
        s.set(n, p);
    }
    return s;
}

}  // namespace

TEST_CASE("ordinary series product") {
    // (1 + z)(1 - z) = 1 - z^2
    ZSeries a = ZSeries::from_coeffs({Poly::one(), Poly::one(), Poly::zero()});
    ZSeries b = ZSeries::from_coeffs({Poly::one(), -Poly::one(), Poly::zero()});
    ZSeries prod = series_mul(a, b);
    REQUIRE(prod[0] == Poly::one());
    REQUIRE(prod[1].is_zero());
    REQUIRE(prod[2] == -Poly::one());

    // multiplying by 1 is the identity
    ZSeries one(2);
    one.set(0, Poly::one());
    REQUIRE(series_mul(a, one) == a);
}

TEST_CASE("series truncate to the smaller order") {
    ZSeries a(5), b(3);
    REQUIRE(series_mul(a, b).order() == 3);
    REQUIRE(series_add(a, b).order() == 3);
}

TEST_CASE("normalized exponential product via q-binomial convolution") {
    // z^2 numerator of exp_q(z)^2 is [2,0]_q + [2,1]_q + [2,2]_q = 3 + q
    // (the q-Vandermonde sum of a full row of Gaussian binomials).
    ZSeries e = q_exp_series(4);
    ZSeries sq = series_mul_weighted(e, e, qbinom_weights());
    Poly expected;
    for (int k = 0; k <= 2; ++k) expected += q_binomial(2, k);
    REQUIRE(sq[2] == expected);
    REQUIRE(sq[2] == Poly::parse("3 + q"));
    // row sums of Gaussian binomials for higher coefficients
    for (int n = 0; n <= 4; ++n) {
        Poly row;
        for (int k = 0; k <= n; ++k) row += q_binomial(n, k);
        REQUIRE(sq[n] == row);
    }
}

TEST_CASE("scaling z") {
    Poly t = Poly::variable(Var::t());
    Poly tq = t * Poly::variable(Var::q());
    ZSeries h = ZSeries::from_coeffs({Poly::one(), Poly::parse("2 + q"), Poly::parse("r")});
    ZSeries ht = series_scale_z(h, t);
    for (int n = 0; n <= 2; ++n) REQUIRE(ht[n] == h[n] * t.pow(n));

    REQUIRE(series_scale_z(h, Poly::one()) == h);

    ZSeries s = ZSeries::from_coeffs({Poly::one(), Poly::one(), Poly::one()});
    ZSeries scaled = series_scale_z(s, tq);
    REQUIRE(scaled[0] == Poly::one());
    REQUIRE(scaled[1] == tq);
    REQUIRE(scaled[2] == tq * tq);
}

TEST_CASE("series equality and bounds") {
    ZSeries a = ZSeries::from_coeffs({Poly::one(), Poly::one()});
    ZSeries b = ZSeries::from_coeffs({Poly::one(), Poly(2)});
    REQUIRE(series_equal(a, a, 1));
    REQUIRE_FALSE(series_equal(a, b, 1));
    REQUIRE(series_equal(a, b, 0));
    REQUIRE(series_first_difference(a, b, 1) == 1);
    REQUIRE_THROWS_AS(series_equal(a, b, 2), std::out_of_range);
}

TEST_CASE("series products are associative and commutative") {
    std::mt19937 rng(24680);
    for (int i = 0; i < 50; ++i) {
        ZSeries a = random_series(rng, 4), b = random_series(rng, 4), c = random_series(rng, 4);
        REQUIRE(series_mul(a, b) == series_mul(b, a));
        REQUIRE(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
        ConvWeight w = qbinom_weights();
        REQUIRE(series_mul_weighted(a, b, w) == series_mul_weighted(b, a, w));
        REQUIRE(series_mul_weighted(series_mul_weighted(a, b, w), c, w) ==
                series_mul_weighted(a, series_mul_weighted(b, c, w), w));
    }
}
