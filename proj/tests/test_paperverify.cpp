#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tg/paperverify.hpp"
#include "tg/json_io.hpp"
#include "tg/totient.hpp"

using namespace tg;
using namespace tg::paperverify;

TEST_CASE("verify_theorem1: all stated maxima and witnesses") {
    auto rep = verify_theorem1();
    CHECK(rep.passed);
    CHECK(rep.probabilistic_steps == 0);
    CHECK(rep.values.at("form_count") == 50);
    CHECK(rep.values.at("s1_width") == 30);
    CHECK(rep.values.at("s2_width") == 80);
    CHECK(rep.values.at("s4_width") == 144);
    CHECK(rep.values.at("s1_s2_max") == 82);
    CHECK(rep.values.at("s2_s4_max") == 154);
    CHECK(rep.values.at("s1_s4_max") == 154);
    CHECK(rep.values.at("overall_bound") == 154);
    CHECK(rep.values.at("witness_p41") == 1);
    CHECK(rep.values.at("witness_p43") == 3);
    CHECK(rep.values.at("witness_p47") == 8);
}

TEST_CASE("verify_theorem2_scaffold") {
    auto rep = verify_theorem2_scaffold();
    CHECK(rep.passed);
    CHECK(rep.values.at("a0") == Natural("614889782588491410"));
    CHECK(rep.values.at("b0") == Natural("3099044504245996706400"));
    CHECK(rep.values.at("a0_b0") == rep.values.at("a0") * rep.values.at("b0"));
}

TEST_CASE("verify_dhl3: small h range") {
    auto rep = verify_dhl3(5);
    CHECK(rep.passed);
    // h = 1 instances exist and the differences equal 2h
    CHECK(rep.values.at("h01_case1_diff") == 2);
    CHECK(rep.values.at("h01_case2_diff") == 2);
    CHECK(rep.values.at("h01_case3_diff") == 2);
    CHECK(rep.values.at("h05_case1_diff") == 10);
    // spot-check one instance by hand: n = 2, h = 1 gives primes 3 and 5
    CHECK(totient::phi(5) - totient::phi(3) == 2);
}

TEST_CASE("verify_dhl4: d = 4 and the two congruence classes") {
    auto rep = verify_dhl4(4);
    CHECK(rep.passed);
    CHECK(rep.values.at("offset_a") == 1);
    // quotient table spot checks: pair (6,8) gives 6 and 8
    CHECK(rep.values.count("pair_6_8_q6_preimage") == 1);
    CHECK(rep.values.count("pair_6_8_q8_preimage") == 1);
    CHECK(totient::phi(Natural(rep.values.at("pair_6_8_q6_preimage"))) == 6);
    CHECK(totient::phi(Natural(rep.values.at("pair_6_8_q8_preimage"))) == 8);

    auto rep20 = verify_dhl4(20);  // 20 ≡ 8 (mod 12): b-branch with b = 11
    CHECK(rep20.passed);
    CHECK(rep20.values.at("offset_b") == 11);

    auto rep12 = verify_dhl4(12);  // 12 ≡ 0 (mod 12): a-branch with a = 5
    CHECK(rep12.passed);
    CHECK(rep12.values.at("offset_a") == 5);

    CHECK_THROWS_AS(verify_dhl4(6), Error);
}

TEST_CASE("verify_dhl5: pair table") {
    auto rep = verify_dhl5();
    CHECK(rep.passed);
    CHECK(rep.values.at("max_pair_value") == 6);
    CHECK(rep.values.at("witness_mod_30") == 11);
    // (n, n+2) -> 2 and (n, 4n+3) -> 6
    CHECK(rep.values.at("pair_1_2_value") == 2);
    CHECK(rep.values.at("pair_1_5_value") == 6);
    // ten pair entries present
    int pairs = 0;
    for (const auto& [k, v] : rep.values)
        if (k.rfind("pair_", 0) == 0) ++pairs;
    CHECK(pairs == 10);
}

TEST_CASE("verify_dhl6: 30 memberships with re-verified preimages") {
    auto rep = verify_dhl6();
    CHECK(rep.passed);
    CHECK(rep.values.at("memberships_verified") == 30);
    CHECK(rep.values.at("h") == 120193920);
    // difference 1 pair (h-64, h-63): quotients are 4(h-64) and 4(h-63)
    CHECK(rep.values.at("pair_3_4_lo_q") == 4 * (120193920 - 64));
    CHECK(rep.values.at("pair_3_4_hi_q") == 4 * (120193920 - 63));
    // difference 72 pair (h-72, h): high quotient is h/18
    CHECK(rep.values.at("pair_1_6_hi_q") == 120193920 / 18);
    // every preimage re-verifies through the public phi
    for (const auto& [k, v] : rep.values) {
        if (k.size() > 9 && k.rfind("_preimage") == k.size() - 9) {
            std::string qk = k.substr(0, k.size() - 9) + "_q";
            CHECK(totient::phi(Natural(v)) == rep.values.at(qk));
        }
    }
}

TEST_CASE("verify_remark28: first few exponents (full run in acceptance)") {
    auto rep = verify_remark28();
    CHECK(rep.passed);
    CHECK(rep.values.at("preimage_j01") == 29);  // phi(29) = 28
    CHECK(rep.values.count("preimage_j49") == 1);
    // preimages re-verify through phi on their recorded values is done
    // inside; spot-check j = 2 by hand
    Natural x2 = Natural(rep.values.at("preimage_j02"));
    CHECK(totient::phi(x2) == 784);
}

TEST_CASE("verify_ap_instance: d = 4, a = 4 finds a concrete instance") {
    auto rep = verify_ap_instance(4, 4, 1000);
    CHECK(rep.passed);
    CHECK_FALSE(rep.inconclusive);
    CHECK(rep.values.at("D") == 8);
    CHECK(rep.values.at("v1") == 3);
    CHECK(rep.values.at("v2") == 3);
    CHECK(rep.values.at("v") == 5);
    CHECK(rep.values.at("l") == 16);
    // first instance: x = 6, p1 = 43, p2 = 379, q = 3
    CHECK(rep.values.at("x") == 6);
    CHECK(rep.values.at("p1") == 43);
    CHECK(rep.values.at("p2") == 379);
    CHECK(rep.values.at("q") == 3);
    CHECK(rep.values.at("eq1_lhs") == rep.values.at("eq1_rhs"));
    CHECK(rep.values.at("eq2_lhs") == rep.values.at("eq2_rhs"));
    CHECK(rep.values.at("value") == 84);
    CHECK(rep.values.at("value_abs") % 4 == 0);  // ≡ a ≡ 0 (mod 4)
}

TEST_CASE("verify_ap_instance: hopeless bound is inconclusive, not failed") {
    // x_bound too small for any x to give both p1 and p2 prime
    auto rep = verify_ap_instance(4, 4, 2);
    CHECK(rep.passed);
    CHECK(rep.inconclusive);
    // pipeline values are still present
    CHECK(rep.values.count("D") == 1);
    CHECK(rep.values.count("v") == 1);
    CHECK(rep.values.count("x") == 0);
}

TEST_CASE("verify_ap_instance: plus-branch run (d = 12, a = 8)") {
    auto rep = verify_ap_instance(12, 8, 100000);
    CHECK(rep.passed);
    if (!rep.inconclusive) {
        CHECK(rep.values.at("branch_plus") == 1);
        CHECK(rep.values.at("value") < 0);
        CHECK(rep.values.at("value_abs") % 12 == 8);
    }
}

TEST_CASE("reports serialize to canonical JSON that round-trips") {
    auto rep = verify_dhl5();
    auto j = json_io::to_json(rep);
    std::string s = j.dump(2);
    auto parsed = nlohmann::json::parse(s);
    CHECK(parsed.dump(2) == s);
    CHECK(parsed["claim_id"] == "dhl5");
    CHECK(parsed["passed"] == true);
    CHECK(parsed["values"]["max_pair_value"] == "6");
}

TEST_CASE("reports are deterministic across runs") {
    auto a = verify_dhl5();
    auto b = verify_dhl5();
    CHECK(json_io::to_json(a).dump() == json_io::to_json(b).dump());

    auto c = verify_ap_instance(4, 4, 1000);
    auto d = verify_ap_instance(4, 4, 1000);
    CHECK(json_io::to_json(c).dump() == json_io::to_json(d).dump());
}
