#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <vector>

#include "qeuler/perm.hpp"
#include "qeuler/qanalog.hpp"

using namespace qeuler;

TEST_CASE("parsing and validation") {
    Perm p = Perm::parse("32541");
    REQUIRE(p.size() == 5);
    REQUIRE(p(1) == 3);
    REQUIRE(p.to_string() == "32541");

    Perm wide = Perm::parse("10,3,1,2,4,5,6,7,8,9");
    REQUIRE(wide.size() == 10);
    REQUIRE(wide(1) == 10);
    REQUIRE(wide.to_string() == "10,3,1,2,4,5,6,7,8,9");

    REQUIRE_THROWS_AS(Perm::parse("321a"), std::invalid_argument);
    REQUIRE_THROWS_AS(Perm(std::vector<int>{1, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(Perm(std::vector<int>{2, 3}), std::invalid_argument);
}

TEST_CASE("statistics of 32541") {
    StatRecord s = compute_stats(Perm::parse("32541"));
    REQUIRE(s.des_set == std::vector<int>{1, 3, 4});
    REQUIRE(s.exc_set == std::vector<int>{1, 3});
    REQUIRE(s.des == 3);
    REQUIRE(s.exc == 2);
    REQUIRE(s.maj == 8);
}

TEST_CASE("excedance-descent set of 531462") {
    StatRecord s = compute_stats(Perm::parse("531462"));
    REQUIRE(s.exd_set == std::vector<int>{1, 4});
    REQUIRE(s.maj == 8);
    REQUIRE(s.exc == 3);
    // sum of Exd = maj - exc
    REQUIRE(1 + 4 == s.maj - s.exc);
}

TEST_CASE("admissible inversions of 24153") {
    StatRecord s = compute_stats(Perm::parse("24153"));
    REQUIRE(s.ai == 3);
    REQUIRE(s.des == 2);
    REQUIRE(s.aid == 5);
}

TEST_CASE("identity permutation") {
    StatRecord s = compute_stats(Perm::identity(6));
    REQUIRE(s.des == 0);
    REQUIRE(s.exc == 0);
    REQUIRE(s.maj == 0);
    REQUIRE(s.inv == 0);
    REQUIRE(s.ai == 0);
    REQUIRE(s.fix == 6);
    REQUIRE(s.cycle_type == std::vector<int>(6, 1));
}

TEST_CASE("filtered iteration") {
    std::vector<std::string> all3;
    for_each_perm(3, [&](const Perm& p, const StatRecord&) { all3.push_back(p.to_string()); });
    REQUIRE(all3 == std::vector<std::string>{"123", "132", "213", "231", "312", "321"});

    std::vector<std::string> der3;
    for_each_perm(3, PermFilter::derangements(),
                  [&](const Perm& p, const StatRecord&) { der3.push_back(p.to_string()); });
    REQUIRE(der3 == std::vector<std::string>{"231", "312"});

    int count22 = 0;
    for_each_perm(4, PermFilter::with_cycle_type({2, 2}),
                  [&](const Perm&, const StatRecord&) { ++count22; });
    REQUIRE(count22 == 3);

    std::vector<std::string> exc1;
    for_each_perm(3, PermFilter::with_exc(1),
                  [&](const Perm& p, const StatRecord&) { exc1.push_back(p.to_string()); });
    REQUIRE(exc1 == std::vector<std::string>{"132", "213", "312", "321"});

    int des2 = 0;
    for_each_perm(3, PermFilter::with_des(2),
                  [&](const Perm&, const StatRecord&) { ++des2; });
    REQUIRE(des2 == 1);  // only 321

    REQUIRE_THROWS_AS(
        for_each_perm(4, PermFilter::with_cycle_type({3}), [](const Perm&, const StatRecord&) {}),
        std::invalid_argument);
    REQUIRE_THROWS_AS(PermFilter::with_cycle_type({1, 2}), std::invalid_argument);
}

TEST_CASE("descents and excedances are equidistributed") {
    for (int n = 1; n <= 8; ++n) {
        std::map<int, int> des_hist, exc_hist;
        for_each_perm(
            n,
            [&](const Perm&, const StatRecord& s) {
                ++des_hist[s.des];
                ++exc_hist[s.exc];
            },
            StatDepth::light);
        REQUIRE(des_hist == exc_hist);
    }
}

TEST_CASE("maj and inv are Mahonian") {
    for (int n = 1; n <= 8; ++n) {
        Poly maj_gf = sum_over_perms(
            n, PermFilter::all(),
            [](const Perm&, const StatRecord& s) {
                return Poly::monomial(Monomial::var(Var::q(), s.maj), 1);
            });
        Poly inv_gf = sum_over_perms(
            n, PermFilter::all(),
            [](const Perm&, const StatRecord& s) {
                return Poly::monomial(Monomial::var(Var::q(), s.inv), 1);
            });
        REQUIRE(maj_gf == q_factorial(n));
        REQUIRE(inv_gf == q_factorial(n));
    }
}

TEST_CASE("Exd properties hold across S_n") {
    for (int n = 1; n <= 8; ++n) {
        for_each_perm(
            n,
            [&](const Perm&, const StatRecord& s) {
                int total = 0;
                for (int i : s.exd_set) {
                    REQUIRE(i >= 1);
                    REQUIRE(i <= n - 1);
                    total += i;
                }
                REQUIRE(total == s.maj - s.exc);
            },
            StatDepth::light);
    }
}

TEST_CASE("scans are thread-count independent") {
    auto term = [](const Perm&, const StatRecord& s) {
        return Poly::monomial(Monomial::var(Var::q(), s.maj) * Monomial::var(Var::t(), s.exc), 1);
    };
    Poly serial = sum_over_perms(6, PermFilter::all(), term, 1, StatDepth::light);
    for (int threads : {2, 3, 7}) {
        Poly parallel = sum_over_perms(6, PermFilter::all(), term, threads, StatDepth::light);
        REQUIRE(parallel == serial);
    }
}

TEST_CASE("unranking agrees with iteration order") {
    int64_t rank = 0;
    for_each_perm(4, [&](const Perm& p, const StatRecord&) {
        REQUIRE(detail::unrank_perm(4, rank) == p.image());
        ++rank;
    });
    REQUIRE(rank == 24);
}
