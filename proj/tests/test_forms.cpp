#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tg/forms.hpp"
#include "oracles.hpp"

#include <random>

using namespace tg;
using namespace tg::forms;

namespace {

FormSystem make(const std::vector<std::pair<long, long>>& fs) {
    FormSystem sys;
    for (auto [a, b] : fs) sys.forms.push_back({Natural(a), Integer(b)});
    return sys;
}

}  // namespace

TEST_CASE("is_admissible: consecutive integers blocked by 2") {
    auto rep = is_admissible(make({{1, 0}, {1, 1}}));
    CHECK_FALSE(rep.admissible);
    REQUIRE(rep.obstruction.has_value());
    CHECK(*rep.obstruction == 2);
}

TEST_CASE("is_admissible: five-form system with witness 11 mod 30") {
    auto sys = make({{1, 0}, {1, 2}, {2, 1}, {4, -1}, {4, 3}});
    auto rep = is_admissible(sys);
    CHECK(rep.admissible);
    for (unsigned long p : {2, 3, 5}) CHECK(witness_holds(sys, p, 11));
    // every checked prime carries a recorded witness
    for (const auto& p : rep.checked_primes) {
        REQUIRE(rep.witnesses.count(p) == 1);
        CHECK(witness_holds(sys, p, rep.witnesses.at(p)));
    }
}

TEST_CASE("is_admissible: constant-zero form (p | gcd(a,b)) is an obstruction") {
    auto rep = is_admissible(make({{6, 9}, {1, 1}}));
    CHECK_FALSE(rep.admissible);
    REQUIRE(rep.obstruction.has_value());
    CHECK(*rep.obstruction == 3);
}

TEST_CASE("is_admissible: oracle equivalence on random small systems") {
    std::mt19937_64 rng(987654321);
    for (int trial = 0; trial < 500; ++trial) {
        unsigned k = 1 + rng() % 6;
        std::vector<std::pair<long, long>> fs;
        for (unsigned i = 0; i < k; ++i) {
            long a = 1 + static_cast<long>(rng() % 12);
            long b = static_cast<long>(rng() % 81) - 40;
            fs.push_back({a, b});
        }
        bool expect = oracle::admissible_by_scan(fs, 50);
        auto rep = is_admissible(make(fs));
        if (rep.admissible != expect) {
            CAPTURE(trial);
            REQUIRE(rep.admissible == expect);
        }
        if (rep.admissible)
            for (const auto& [p, x] : rep.witnesses)
                CHECK(witness_holds(make(fs), p, x));
    }
}

TEST_CASE("shifted_monic_system") {
    auto sys = shifted_monic_system({1, 2, 3}, 2);
    REQUIRE(sys.size() == 3);
    CHECK(sys.forms[0] == LinearForm{1, 2});
    CHECK(sys.forms[1] == LinearForm{1, 4});
    CHECK(sys.forms[2] == LinearForm{1, 6});
    // offsets 2, 4, 6 cover every residue mod 3, so this one is NOT
    // admissible (the brute scan agrees)
    CHECK_FALSE(oracle::admissible_by_scan({{1, 2}, {1, 4}, {1, 6}}, 5));
    auto rep = is_admissible(sys);
    CHECK_FALSE(rep.admissible);
    REQUIRE(rep.obstruction.has_value());
    CHECK(*rep.obstruction == 3);

    // a shifted tuple that is admissible: {n+2, n+6, n+8}
    auto good = shifted_monic_system({1, 3, 4}, 2);
    CHECK(oracle::admissible_by_scan({{1, 2}, {1, 6}, {1, 8}}, 5));
    CHECK(is_admissible(good).admissible);

    auto single = shifted_monic_system({0}, 1);
    REQUIRE(single.size() == 1);
    CHECK(single.forms[0] == LinearForm{1, 0});

    CHECK_THROWS_AS(shifted_monic_system({1, 1}, 2), Error);
}

TEST_CASE("shifted_monic_system: 50 offsets at scale a0*k stay admissible") {
    Natural a0 = arith::primorial(47);
    std::vector<Natural> offsets;
    for (unsigned long i = 1; i <= 50; ++i) offsets.emplace_back(i);
    for (unsigned long k : {1, 2, 3}) {
        auto sys = shifted_monic_system(offsets, a0 * k);
        CHECK(is_admissible(sys).admissible);
    }
}

TEST_CASE("narrowest_admissible_width: a_2..a_6") {
    CHECK(narrowest_admissible_width(2, 50) == 2);
    CHECK(narrowest_admissible_width(3, 50) == 6);
    CHECK(narrowest_admissible_width(4, 50) == 8);
    CHECK(narrowest_admissible_width(5, 50) == 12);
    CHECK(narrowest_admissible_width(6, 50) == 16);
}

TEST_CASE("narrowest_admissible_width: errors") {
    CHECK_THROWS_AS(narrowest_admissible_width(9, 100), Error);
    CHECK_THROWS_AS(narrowest_admissible_width(1, 100), Error);
    // bound below the true width reports failure instead of a wrong answer
    CHECK_THROWS_AS(narrowest_admissible_width(3, 5), Error);
}

TEST_CASE("{m*n - 1} systems are admissible for any m-set of integers > 1") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 100; ++trial) {
        unsigned k = 2 + rng() % 5;
        std::vector<std::pair<long, long>> fs;
        for (unsigned i = 0; i < k; ++i)
            fs.push_back({2 + static_cast<long>(rng() % 500), -1});
        auto rep = is_admissible(make(fs));
        CHECK(rep.admissible);  // x = 0 makes every form -1
    }
}
