#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "qeuler/eulerian.hpp"

using namespace qeuler;

TEST_CASE("maj-exc polynomials at small n") {
    REQUIRE(maj_exc_poly(0) == Poly::one());
    REQUIRE(maj_exc_poly(1) == Poly::one());
    REQUIRE(maj_exc_poly(2) == Poly::parse("1 + q*t"));
    REQUIRE(maj_exc_poly(3) == Poly::parse("1 + 2*q*t + q^2*t + q^2*t^2 + q^3*t"));
}

TEST_CASE("fix-refined polynomials at small n") {
    REQUIRE(fix_refined_poly(2) == Poly::parse("r^2 + q*t"));
    REQUIRE(fix_refined_poly(3) ==
            Poly::parse("r^3 + q*t*r + q^2*t*r + q^3*t*r + q*t + q^2*t^2"));
    // r -> 1 marginalizes to the (maj, exc) polynomial
    for (int n = 0; n <= 6; ++n)
        REQUIRE(fix_refined_poly(n).substitute(Var::r(), Poly::one()) == maj_exc_poly(n));
}

TEST_CASE("exponential generating function identity") {
    Report rep = verify_maj_exc_egf(6);
    for (const Instance& inst : rep.instances) {
        INFO(inst.params);
        CHECK(inst.pass);
    }
    REQUIRE(rep.pass);

    // hand-expanded n=2 coefficient of D * LHS:
    // D0*A2 + [2]_q D1*A1 + D2*A0 = (1-tq)(1+qt) + 0 + ((tq)^2 - tq) = 1 - tq
    Poly tq = Poly::parse("q*t");
    Poly coeff = (Poly::one() - tq) * (Poly::one() + tq) + (tq * tq - tq);
    REQUIRE(coeff == Poly::one() - tq);
}

TEST_CASE("fixed-point refinement formula") {
    Report rep = verify_fix_refinement(6);
    REQUIRE(rep.pass);

    // n=2 right-hand side by hand: r^2 (m=0) plus tq (m=1, tuple (0,2))
    REQUIRE(fix_refinement_rhs(2) == Poly::parse("r^2 + q*t"));

    // q = t = r = 1 collapses to n!
    for (int n = 0; n <= 8; ++n) {
        std::map<Var, Poly> ones{{Var::q(), Poly::one()},
                                 {Var::t(), Poly::one()},
                                 {Var::r(), Poly::one()}};
        REQUIRE(fix_refinement_rhs(n).substitute(ones).as_integer() == factorial(n));
    }
}

namespace {

// The same sum with the tuples (k_1..k_m) read as multisets instead of
// ordered lists; distinguishes the two readings at n = 5.
Poly fix_refinement_rhs_unordered(int n) {
    Poly tq = Poly::parse("q*t");
    Poly out;
    std::vector<int> parts;
    std::function<void(int, int, Poly)> rec = [&](int rest, int minpart, Poly inner) {
        if (rest == 0) {
            int m = static_cast<int>(parts.size()) - 1;
            out += tq.pow(m) * q_multinomial(n, parts) *
                   Poly::monomial(Monomial::var(Var::r(), parts[0]), 1) * inner;
        }
        for (int k = std::max(2, minpart); k <= rest; ++k) {
            parts.push_back(k);
            rec(rest - k, k, inner * q_int(k - 1, tq));
            parts.pop_back();
        }
    };
    for (int k0 = 0; k0 <= n; ++k0) {
        parts.assign(1, k0);
        rec(n - k0, 2, Poly::one());
    }
    return out;
}

}  // namespace

TEST_CASE("ordered tuples are the right reading") {
    std::map<Var, Poly> ones{{Var::q(), Poly::one()},
                             {Var::t(), Poly::one()},
                             {Var::r(), Poly::one()}};
    REQUIRE(fix_refinement_rhs(5).substitute(ones).as_integer() == 120);
    // the multiset reading undercounts: 1 + 49 + 50 = 100
    REQUIRE(fix_refinement_rhs_unordered(5).substitute(ones).as_integer() == 100);
    // at n = 4 the two readings happen to agree
    REQUIRE(fix_refinement_rhs_unordered(4).substitute(ones).as_integer() == 24);
}

TEST_CASE("aid-des equals maj-exc") {
    REQUIRE(aid_des_poly(1) == maj_exc_poly(1));
    REQUIRE(aid_des_poly(3) == Poly::parse("1 + 2*q*t + q^2*t + q^2*t^2 + q^3*t"));
    Report rep = verify_aid_des_equidistribution(6);
    REQUIRE(rep.pass);

    // aid alone is Mahonian
    for (int n = 1; n <= 8; ++n)
        REQUIRE(aid_des_poly(n).substitute(Var::t(), Poly::one()) == q_factorial(n));
}

TEST_CASE("classical reductions") {
    Report rep = verify_reductions(6);
    REQUIRE(rep.pass);
    REQUIRE(maj_exc_poly(4).substitute(Var::t(), Poly::one()) == q_factorial(4));
    REQUIRE(maj_exc_poly(4).substitute(Var::q(), Poly::one()) ==
            Poly::parse("1 + 11*t + 11*t^2 + t^3"));
}

TEST_CASE("table caching") {
    QEulerianTable table;
    REQUIRE(table.get(3) == maj_exc_poly(3));
    REQUIRE(table.get(3) == table.get(3));
}

TEST_CASE("report carries the first mismatch") {
    Report rep;
    rep.theorem = "demo";
    rep.add("n=0", 0, true);
    rep.add("n=1", 1, false, "a", "b");
    rep.add("n=2", 2, false, "c", "d");
    REQUIRE_FALSE(rep.pass);
    REQUIRE(rep.first_mismatch.has_value());
    REQUIRE(rep.first_mismatch->n == 1);
    REQUIRE(rep.first_mismatch->lhs == "a");
}
