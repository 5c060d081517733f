#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tg/arith.hpp"
#include "oracles.hpp"

#include <random>

using namespace tg;
using namespace tg::arith;

TEST_CASE("is_prime: fixed values") {
    CHECK(is_prime(0).verdict == Verdict::composite);
    CHECK(is_prime(1).verdict == Verdict::composite);
    CHECK(is_prime(1).certainty == Certainty::deterministic);
    CHECK(is_prime(2).prime());
    CHECK(is_prime(3).prime());
    CHECK(is_prime(4).verdict == Verdict::composite);

    // 120193919 = 41 * 113 * 25943 (trial-division oracle)
    CHECK(oracle::trial_division_is_prime(120193919) == false);
    auto r = is_prime(120193919);
    CHECK(r.verdict == Verdict::composite);
    CHECK(r.certainty == Certainty::deterministic);
}

TEST_CASE("is_prime: Mersenne 2^89-1 is a probable prime above 2^64") {
    REQUIRE(oracle::lucas_lehmer(89));
    Natural m = (Natural(1) << 89) - 1;
    auto r = is_prime(m);
    CHECK(r.prime());
    CHECK(r.certainty == Certainty::probable);

    // a composite of the same size gets a certain verdict
    auto c = is_prime(m - 2);
    CHECK(c.verdict == Verdict::composite);
    CHECK(c.certainty == Certainty::deterministic);
}

TEST_CASE("is_prime agrees with the sieve up to 10^6") {
    auto table = oracle::prime_table(1'000'000);
    for (std::uint64_t n = 0; n <= 1'000'000; ++n) {
        auto r = is_prime(Natural(static_cast<unsigned long>(n)));
        if (r.prime() != table[n]) {
            CAPTURE(n);
            REQUIRE(r.prime() == table[n]);
        }
        REQUIRE(r.certainty == Certainty::deterministic);
    }
}

TEST_CASE("factorize: fixed values") {
    CHECK(factorize(1).factors.empty());

    auto f28 = factorize(28);
    REQUIRE(f28.factors.size() == 2);
    CHECK(f28.factors[0] == Factor{2, 2});
    CHECK(f28.factors[1] == Factor{7, 1});

    // 120193920 via the trial-division oracle
    auto expect = oracle::trial_division_factor(120193920);
    auto got = factorize(120193920);
    REQUIRE(got.factors.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) {
        CHECK(got.factors[i].prime == Natural(static_cast<unsigned long>(expect[i].first)));
        CHECK(got.factors[i].exponent == expect[i].second);
    }
    CHECK(got.value() == 120193920);
}

TEST_CASE("factorize: product reconstructs and primes are prime, n <= 10^6 sample") {
    auto table = oracle::prime_table(1'000'000);
    // dense sweep over a window plus random probes over the full range
    for (std::uint64_t n = 1; n <= 20'000; ++n) {
        auto f = factorize(n);
        REQUIRE(f.value() == Natural(static_cast<unsigned long>(n)));
        Natural prev = 1;
        for (const auto& fac : f.factors) {
            REQUIRE(fac.prime > prev);
            prev = fac.prime;
            REQUIRE(table[mpz_get_ui(fac.prime.get_mpz_t())]);
        }
    }
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 3000; ++i) {
        std::uint64_t n = rng() % 1'000'000 + 1;
        auto f = factorize(n);
        REQUIRE(f.value() == Natural(static_cast<unsigned long>(n)));
        for (const auto& fac : f.factors)
            REQUIRE(table[mpz_get_ui(fac.prime.get_mpz_t())]);
    }
}

TEST_CASE("factorize: large smooth and semiprime inputs") {
    // 2^98 * 7^49
    Natural m = pow_nat(2, 98) * pow_nat(7, 49);
    auto f = factorize(m);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == Factor{2, 98});
    CHECK(f.factors[1] == Factor{7, 49});

    // a 64-bit semiprime that needs rho
    Natural sp = Natural("1000000007") * Natural("1000000009");
    auto g = factorize(sp);
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0].prime == Natural("1000000007"));
    CHECK(g.factors[1].prime == Natural("1000000009"));
}

TEST_CASE("factorize: budget exhaustion fails loudly") {
    // square of an 89-bit prime: rho cannot split it in 16 iterations
    Natural p = (Natural(1) << 89) - 1;
    CHECK_THROWS_AS(factorize(p * p, /*rho_budget=*/16), Error);
}

TEST_CASE("primes_up_to / primorial / lcm_range") {
    CHECK(primes_up_to(1).empty());
    auto p10 = primes_up_to(10);
    REQUIRE(p10.size() == 4);
    CHECK(p10[0] == 2);
    CHECK(p10[3] == 7);

    auto p47 = primes_up_to(47);
    REQUIRE(p47.size() == 15);
    CHECK(p47[13] == 43);
    CHECK(p47[14] == 47);

    CHECK(primorial(1) == 1);
    CHECK(primorial(10) == 210);
    CHECK(primorial(47) == Natural("614889782588491410"));

    CHECK(lcm_range(1) == 1);
    CHECK(lcm_range(10) == 2520);
    CHECK(lcm_range(49) == oracle::fold_lcm(49));
    CHECK(lcm_range(49) == Natural("3099044504245996706400"));
}

TEST_CASE("primorial equals product over primes_up_to; lcm_range divisibility") {
    for (unsigned b : {2u, 3u, 20u, 47u, 100u}) {
        Natural prod = 1;
        for (const auto& p : primes_up_to(b)) prod *= p;
        CHECK(primorial(b) == prod);
    }
    for (unsigned n : {2u, 10u, 30u, 49u}) {
        Natural l = lcm_range(n);
        for (unsigned k = 1; k <= n; ++k)
            CHECK(mpz_divisible_ui_p(l.get_mpz_t(), k));
        // no prime above n divides it
        auto f = factorize(l);
        CHECK(f.factors.back().prime <= n);
    }
}

TEST_CASE("crt: fixed values") {
    auto triv = crt({{0, 1}});
    CHECK(triv.residue == 0);
    CHECK(triv.modulus == 1);

    auto s = crt({{1, 3}, {2, 4}});
    CHECK(s.residue == 10);
    CHECK(s.modulus == 12);

    // brute-force oracle over 0..359
    auto expect = oracle::brute_crt({{3, 8}, {2, 9}, {4, 5}});
    REQUIRE(expect == 299);
    auto t = crt({{3, 8}, {2, 9}, {4, 5}});
    CHECK(t.residue == expect);
    CHECK(t.modulus == 360);
}

TEST_CASE("crt: negative residues normalize; non-coprime moduli throw") {
    auto s = crt({{-1, 5}, {-3, 7}});
    CHECK(s.residue == mod_norm(-1, 5) + 5 * ((s.residue - 4) / 5));
    CHECK(s.residue % 5 == 4);
    CHECK(s.residue % 7 == 4);
    CHECK(s.residue < 35);

    CHECK_THROWS_AS(crt({{1, 4}, {2, 6}}), NonCoprimeModuli);
    try {
        crt({{1, 4}, {2, 6}});
    } catch (const NonCoprimeModuli& e) {
        CHECK(e.first == 4);
        CHECK(e.second == 6);
    }
}

TEST_CASE("crt: random property, solution satisfies every congruence") {
    std::mt19937_64 rng(777);
    const std::uint64_t mods[] = {3, 4, 5, 7, 11, 13};
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Congruence> sys;
        std::vector<std::pair<long, unsigned long>> osys;
        for (std::uint64_t m : mods) {
            long r = static_cast<long>(rng() % (2 * m)) - static_cast<long>(m);
            sys.push_back({r, m});
            osys.push_back({r, m});
        }
        auto s = crt(sys);
        for (const auto& c : sys)
            CHECK(mod_norm(s.residue, c.modulus) == mod_norm(c.residue, c.modulus));
        CHECK(s.residue < s.modulus);
    }
}

TEST_CASE("mod_norm and pow_nat") {
    CHECK(mod_norm(-3, 8) == 5);
    CHECK(mod_norm(8, 8) == 0);
    CHECK(pow_nat(2, 10) == 1024);
    CHECK(pow_nat(28, 49) ==
          Natural("81422331814338578443094572348365901791639019487418361547332031566839808"));
}
