#include "tg/paperverify.hpp"

#include "tg/constructions.hpp"
#include "tg/forms.hpp"
#include "tg/totient.hpp"

#include <algorithm>
#include <cstdio>

namespace tg::paperverify {

using constructions::ApWitness;
using forms::FormSystem;
using forms::LinearForm;

namespace {

std::string two_digits(unsigned j) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%02u", j);
    return buf;
}

// Re-verifies one claimed preimage independently of the search that found
// it: the factorization must describe x, every listed prime must pass
// is_prime, and the phi formula must give back m. Returns the number of
// probable-prime verdicts relied on.
std::uint64_t recheck_preimage(VerificationReport& rep, const Natural& x,
                               const arith::Factorization& f, const Natural& m,
                               int prp_rounds, const std::string& what) {
    std::uint64_t prp = 0;
    bool ok = f.value() == x;
    Natural prev = 1;
    for (const auto& fac : f.factors) {
        ok = ok && fac.prime > prev && fac.exponent >= 1;
        prev = fac.prime;
        auto r = arith::is_prime(fac.prime, prp_rounds);
        if (r.probable()) ++prp;
        ok = ok && r.prime();
    }
    ok = ok && totient::phi_from_factorization(f) == m;
    rep.check(ok, what + ": preimage " + x.get_str() + " fails exact phi re-verification");
    return prp;
}

}  // namespace

// ---------------------------------------------------------------------------
// 50-form system
// ---------------------------------------------------------------------------

VerificationReport verify_theorem1() {
    VerificationReport rep;
    rep.claim_id = "thm1";

    const std::vector<unsigned long> s1 = {41, 43, 47, 53, 67, 71};
    const std::vector<unsigned long> s2 = {59, 61, 67,  71,  73,  83,  89,  101,
                                           103, 107, 109, 113, 127, 131, 137, 139};
    std::vector<unsigned long> s4;  // primes in [127, 271]
    for (const auto& p : arith::primes_up_to(271))
        if (p >= 127) s4.push_back(mpz_get_ui(p.get_mpz_t()));

    for (auto a : s1) rep.check(arith::is_prime(a).prime(), "S1 entry not prime");
    for (auto a : s2) rep.check(arith::is_prime(a).prime(), "S2 entry not prime");
    rep.check(s1.size() == 6, "S1 size");
    rep.check(s2.size() == 16, "S2 size");
    rep.check(s4.size() == 28, "S4 size");
    rep.record("s1_size", 6);
    rep.record("s2_size", 16);
    rep.record("s4_size", 28);

    FormSystem sys;
    for (auto a : s1) sys.forms.push_back({1, Integer(a)});
    for (auto a : s2) sys.forms.push_back({2, Integer(a)});
    for (auto a : s4) sys.forms.push_back({4, Integer(a)});
    rep.check(sys.size() == 50, "system must have exactly 50 forms");
    rep.record("form_count", Integer(static_cast<unsigned long>(sys.size())));

    auto adm = forms::is_admissible(sys);
    rep.check(adm.admissible, "50-form system admissible");

    // n = 0 clears every prime below 41; n = 1, 3, 8 clear 41, 43, 47
    for (const auto& p : arith::primes_up_to(37))
        rep.check(forms::witness_holds(sys, p, 0),
                  "witness n=0 at p=" + p.get_str());
    const std::pair<unsigned long, unsigned long> stated[] = {{41, 1}, {43, 3}, {47, 8}};
    for (auto [p, n] : stated) {
        rep.check(forms::witness_holds(sys, p, n),
                  "stated witness at p=" + std::to_string(p));
        rep.check(adm.witnesses.at(p) == n,
                  "smallest witness at p=" + std::to_string(p) + " equals stated value");
        rep.record("witness_p" + std::to_string(p), Integer(n));
    }

    auto width = [](const std::vector<unsigned long>& s) {
        long mx = 0;
        for (auto a : s)
            for (auto b : s) mx = std::max(mx, static_cast<long>(b) - static_cast<long>(a));
        return mx;
    };
    long w1 = width(s1), w2 = width(s2), w4 = width(s4);
    rep.record("s1_width", w1);
    rep.record("s2_width", w2);
    rep.record("s4_width", w4);
    rep.check(w1 == 30, "S1 width 71-41 = 30");
    rep.check(w2 == 80, "S2 width 139-59 = 80");
    rep.check(w4 == 144, "S4 width 271-127 = 144");

    // pairs across sets: n+a & 2n+b prime give |b-2a+1|, n+a & 4n+b give
    // |b-4a+3|, 2n+a & 4n+b give |b-2a+1|
    long max12 = 0, max24 = 0, max14 = 0;
    bool zero12 = false, zero24 = false, zero14 = false;
    for (auto a : s1)
        for (auto b : s2) {
            long v = static_cast<long>(b) - 2 * static_cast<long>(a) + 1;
            if (v == 0) zero12 = true;
            max12 = std::max(max12, std::abs(v));
        }
    for (auto a : s2)
        for (auto b : s4) {
            long v = static_cast<long>(b) - 2 * static_cast<long>(a) + 1;
            if (v == 0) zero24 = true;
            max24 = std::max(max24, std::abs(v));
        }
    for (auto a : s1)
        for (auto b : s4) {
            long v = static_cast<long>(b) - 4 * static_cast<long>(a) + 3;
            if (v == 0) zero14 = true;
            max14 = std::max(max14, std::abs(v));
        }
    rep.record("s1_s2_max", max12);
    rep.record("s2_s4_max", max24);
    rep.record("s1_s4_max", max14);
    rep.check(max12 == 82, "max |b-2a+1| over S1 x S2 is 82");
    rep.check(!zero12, "b-2a+1 never vanishes on S1 x S2");
    rep.check(max24 == 154, "max |b-2a+1| over S2 x S4 is 154");
    rep.check(!zero24, "b-2a+1 never vanishes on S2 x S4");
    rep.check(max14 == 154, "max |b-4a+3| over S1 x S4 is 154");
    rep.check(!zero14, "b-4a+3 never vanishes on S1 x S4");

    long overall = std::max({w1, w2, w4, max12, max24, max14});
    rep.record("overall_bound", overall);
    rep.check(overall == 154, "overall bound 154");
    return rep;
}

// ---------------------------------------------------------------------------
// primorial / lcm scaffold
// ---------------------------------------------------------------------------

VerificationReport verify_theorem2_scaffold() {
    VerificationReport rep;
    rep.claim_id = "thm2";
    rep.note("the statement writes b = lcm[1..49] but the construction uses b0; "
             "this report follows the construction's a0, b0");

    Natural a0 = arith::primorial(47);
    Natural b0 = arith::lcm_range(49);
    rep.record("a0", a0);
    rep.record("b0", b0);
    rep.check(a0 == Natural("614889782588491410"), "a0 = primorial(47)");

    Natural n = a0 * b0;
    Natural phi_n = totient::phi(n);
    rep.record("a0_b0", n);
    rep.record("phi_a0_b0", phi_n);

    for (unsigned long j = 1; j <= 49; ++j) {
        Natural jn(j);
        bool div = mpz_divisible_ui_p(b0.get_mpz_t(), j);
        rep.check(div, "j | b0 for j=" + std::to_string(j));
        if (!div) continue;
        Natural q = n / jn;
        rep.check(mpz_divisible_p(q.get_mpz_t(), a0.get_mpz_t()),
                  "a0 | a0*b0/j for j=" + std::to_string(j));
        rep.check(totient::verify_scaled_totient(n, jn),
                  "phi(a0*b0/j)*j = phi(a0*b0) for j=" + std::to_string(j));
    }

    std::vector<Natural> offsets;
    for (unsigned long i = 1; i <= 50; ++i) offsets.emplace_back(i);
    for (unsigned long k = 1; k <= 3; ++k) {
        auto sys = forms::shifted_monic_system(offsets, a0 * k);
        rep.check(forms::is_admissible(sys).admissible,
                  "shifted system admissible for k=" + std::to_string(k));
    }
    rep.note("scaling identity verified for all j in 1..49");
    return rep;
}

// ---------------------------------------------------------------------------
// triples {n+1, n+2h+1, 2n+2h+1}
// ---------------------------------------------------------------------------

VerificationReport verify_dhl3(unsigned h_max) {
    VerificationReport rep;
    rep.claim_id = "dhl3";
    if (h_max < 1) throw Error("verify_dhl3: h_max must be >= 1");

    auto prime = [](const Natural& v) { return arith::is_prime(v).prime(); };
    constexpr unsigned long kSearchLimit = 2'000'000;

    for (unsigned long h = 1; h <= h_max; ++h) {
        FormSystem sys;
        sys.forms.push_back({1, 1});
        sys.forms.push_back({1, Integer(2 * h + 1)});
        sys.forms.push_back({2, Integer(2 * h + 1)});
        auto adm = forms::is_admissible(sys);
        rep.check(adm.admissible, "triple admissible for h=" + std::to_string(h));
        if (adm.admissible) {
            rep.check(adm.witnesses.at(3) <= 1,
                      "witness n in {0,1} mod 3 for h=" + std::to_string(h));
            rep.check(forms::witness_holds(sys, 2, 0),
                      "all forms odd at n=0 for h=" + std::to_string(h));
        }

        if (h > std::min<unsigned long>(h_max, 20)) continue;
        std::string hk = "h" + two_digits(static_cast<unsigned>(h));

        // case (i): n+1 and n+2h+1 prime, difference of two primes
        bool found = false;
        for (unsigned long n = 1; n <= kSearchLimit; ++n) {
            if (prime(n + 1) && prime(n + 2 * h + 1)) {
                Natural diff = totient::phi(n + 2 * h + 1) - totient::phi(n + 1);
                rep.check(diff == 2 * h, "case (i) identity at h=" + std::to_string(h));
                rep.record(hk + "_case1_n", Integer(n));
                rep.record(hk + "_case1_diff", diff);
                found = true;
                break;
            }
        }
        rep.check(found, "case (i) instance found for h=" + std::to_string(h));

        // case (ii): n+1 and 2n+2h+1 prime; phi(2n+2h+1) - phi(4(n+1)) = 2h
        found = false;
        for (unsigned long n = 2; n <= kSearchLimit; ++n) {
            if (prime(n + 1) && prime(2 * n + 2 * h + 1)) {
                Natural diff = totient::phi(2 * n + 2 * h + 1) - totient::phi(4 * (n + 1));
                rep.check(diff == 2 * h, "case (ii) identity at h=" + std::to_string(h));
                rep.record(hk + "_case2_n", Integer(n));
                rep.record(hk + "_case2_diff", diff);
                found = true;
                break;
            }
        }
        rep.check(found, "case (ii) instance found for h=" + std::to_string(h));

        // case (iii): n+2h+1 and 2n+2h+1 prime; phi(4(n+2h+1)) - phi(2n+2h+1) = 2h
        found = false;
        for (unsigned long n = 2; n <= kSearchLimit; ++n) {
            if (prime(n + 2 * h + 1) && prime(2 * n + 2 * h + 1)) {
                Natural diff = totient::phi(4 * (n + 2 * h + 1)) - totient::phi(2 * n + 2 * h + 1);
                rep.check(diff == 2 * h, "case (iii) identity at h=" + std::to_string(h));
                rep.record(hk + "_case3_n", Integer(n));
                rep.record(hk + "_case3_diff", diff);
                found = true;
                break;
            }
        }
        rep.check(found, "case (iii) instance found for h=" + std::to_string(h));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// {6, 8, 9, 12} quotients and residue-class systems
// ---------------------------------------------------------------------------

VerificationReport verify_dhl4(const Natural& d) {
    VerificationReport rep;
    rep.claim_id = "dhl4";
    if (!mpz_divisible_ui_p(d.get_mpz_t(), 4)) throw Error("verify_dhl4: 4 must divide d");
    rep.record("d", d);

    const unsigned long ms[] = {6, 8, 9, 12};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            unsigned long diff = ms[j] - ms[i];
            rep.check(2 * ms[i] % diff == 0 && 2 * ms[j] % diff == 0,
                      "quotients integral for pair");
            for (unsigned long q : {2 * ms[i] / diff, 2 * ms[j] / diff}) {
                auto inv = totient::inverse_phi(Natural(q), Natural(1));
                std::string key = "pair_" + std::to_string(ms[i]) + "_" + std::to_string(ms[j]) +
                                  "_q" + std::to_string(q);
                bool member = !inv.empty();
                rep.check(member, "quotient " + std::to_string(q) + " is a totient");
                if (member) {
                    rep.record(key + "_preimage", inv.preimages.front());
                    rep.probabilistic_steps +=
                        recheck_preimage(rep, inv.preimages.front(), inv.factorizations.front(),
                                         Natural(q), arith::kDefaultPrpRounds, key);
                }
            }
        }

    // residue-class systems: d ≡ 0, 4 (mod 12) uses m_i n - a with
    // d = 2(a+1); d ≡ 8 (mod 12) uses m_i n + b with d = 2(b-1)
    Natural r = arith::mod_norm(d, 12);
    FormSystem sys;
    if (r == 0 || r == 4) {
        Natural a = d / 2 - 1;
        rep.record("offset_a", a);
        rep.check(arith::gcd(a, 6) == 1, "(a, 6) = 1");
        rep.check(d == 2 * (a + 1), "d = 2(a+1)");
        for (unsigned long m : ms) sys.forms.push_back({m, -Integer(a)});
    } else {
        Natural b = d / 2 + 1;
        rep.record("offset_b", b);
        rep.check(arith::gcd(b, 6) == 1, "(b, 6) = 1");
        rep.check(d == 2 * (b - 1), "d = 2(b-1)");
        for (unsigned long m : ms) sys.forms.push_back({m, Integer(b)});
    }
    rep.check(forms::is_admissible(sys).admissible, "residue-class form system admissible");
    return rep;
}

// ---------------------------------------------------------------------------
// five forms {n, n+2, 2n+1, 4n-1, 4n+3}
// ---------------------------------------------------------------------------

VerificationReport verify_dhl5() {
    VerificationReport rep;
    rep.claim_id = "dhl5";

    const std::vector<std::pair<long, long>> fs = {{1, 0}, {1, 2}, {2, 1}, {4, -1}, {4, 3}};
    FormSystem sys;
    for (auto [a, b] : fs) sys.forms.push_back({Natural(a), Integer(b)});

    auto adm = forms::is_admissible(sys);
    rep.check(adm.admissible, "five-form system admissible");
    for (unsigned long p : {2, 3, 5})
        rep.check(forms::witness_holds(sys, p, 11), "witness 11 at p=" + std::to_string(p));
    // the per-prime smallest witnesses assemble to 11 mod 30
    auto combined = arith::crt({{Integer(adm.witnesses.at(2)), 2},
                                {Integer(adm.witnesses.at(3)), 3},
                                {Integer(adm.witnesses.at(5)), 5}});
    rep.record("witness_mod_30", combined.residue);
    rep.check(combined.residue == 11, "combined witness is 11 mod 30");

    long maxval = 0;
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
            auto [a, b] = fs[i];
            auto [c, dd] = fs[j];
            if (c < a) { std::swap(a, c); std::swap(b, dd); }
            rep.check(c % a == 0, "coefficient ratio integral");
            long ratio = c / a;
            rep.check(ratio == 1 || ratio == 2 || ratio == 4, "ratio in {1,2,4}");
            long v = std::abs(ratio * (b - 1) - (dd - 1));
            rep.record("pair_" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + "_value",
                       v);
            rep.check(v <= 6, "pair value <= 6");
            maxval = std::max(maxval, v);
        }
    rep.record("max_pair_value", maxval);
    rep.check(maxval == 6, "maximum over the 10 pairs is exactly 6");
    return rep;
}

// ---------------------------------------------------------------------------
// sextuple at h = 120193920
// ---------------------------------------------------------------------------

VerificationReport verify_dhl6() {
    VerificationReport rep;
    rep.claim_id = "dhl6";

    const unsigned long h = 120193920;
    const long offs[] = {-72, -66, -64, -63, -60, 0};
    std::vector<Natural> set;
    for (long o : offs) set.emplace_back(static_cast<unsigned long>(h + o));
    rep.record("h", Integer(h));

    // Theorem 1.4 scaffolding: the forms m_i n - 1 are admissible
    FormSystem sys;
    for (const auto& m : set) sys.forms.push_back({m, -1});
    rep.check(forms::is_admissible(sys).admissible, "forms m_i n - 1 admissible");

    unsigned membership = 0;
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            Natural diff = set[j] - set[i];
            std::string pk = "pair_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
            Natural lo = 4 * set[i], hi = 4 * set[j];
            bool div = mpz_divisible_p(lo.get_mpz_t(), diff.get_mpz_t()) &&
                       mpz_divisible_p(hi.get_mpz_t(), diff.get_mpz_t());
            rep.check(div, pk + ": 4n_i and 4n_j divisible by the difference");
            if (!div) continue;
            const std::pair<const char*, Natural> quotients[] = {{"_lo", Natural(lo / diff)},
                                                                 {"_hi", Natural(hi / diff)}};
            for (const auto& [tag, q] : quotients) {
                auto inv = totient::inverse_phi(q, Natural(1));
                rep.check(!inv.empty(), pk + tag + ": quotient " + q.get_str() + " is a totient");
                if (!inv.empty()) {
                    ++membership;
                    rep.record(pk + tag + "_q", q);
                    rep.record(pk + tag + "_preimage", inv.preimages.front());
                    rep.probabilistic_steps +=
                        recheck_preimage(rep, inv.preimages.front(), inv.factorizations.front(),
                                         q, arith::kDefaultPrpRounds, pk + tag);
                }
                rep.probabilistic_steps += inv.probable_prime_checks;
            }
        }
    rep.record("memberships_verified", Integer(membership));
    rep.check(membership == 30, "all 30 quotient memberships certified");

    // cross-check through the pair-matrix predicate with constant ell = 4
    std::vector<std::vector<Natural>> ell(6, std::vector<Natural>(6, 4));
    rep.check(constructions::dhlk_verify_matrix(set, ell), "matrix predicate agrees");
    return rep;
}

// ---------------------------------------------------------------------------
// 28^j totients
// ---------------------------------------------------------------------------

VerificationReport verify_remark28(int prp_rounds) {
    VerificationReport rep;
    rep.claim_id = "remark28";

    totient::InversePhiOptions opts;
    opts.prp_rounds = prp_rounds;

    for (unsigned j = 1; j <= 49; ++j) {
        Natural m = arith::pow_nat(28, j);
        auto inv = totient::inverse_phi(m, Natural(1), opts);
        rep.probabilistic_steps += inv.probable_prime_checks;
        rep.check(!inv.empty(), "28^" + std::to_string(j) + " is a totient");
        if (inv.empty()) continue;
        rep.record("preimage_j" + two_digits(j), inv.preimages.front());
        rep.probabilistic_steps +=
            recheck_preimage(rep, inv.preimages.front(), inv.factorizations.front(), m,
                             prp_rounds, "28^" + std::to_string(j));
    }
    rep.record("probable_prime_verdicts", Integer(rep.probabilistic_steps));
    rep.note("verdicts above 2^64 are strong-probable-prime results (" +
             std::to_string(prp_rounds) + " rounds each)");
    return rep;
}

// ---------------------------------------------------------------------------
// progression pipeline instance
// ---------------------------------------------------------------------------

VerificationReport verify_ap_instance(const Natural& d, const Natural& a,
                                      const Natural& x_bound, int prp_rounds) {
    VerificationReport rep;
    rep.claim_id = "ap-instance";
    if (!mpz_divisible_ui_p(a.get_mpz_t(), 4)) throw Error("verify_ap_instance: 4 must divide a");
    if (!mpz_divisible_ui_p(d.get_mpz_t(), 4)) throw Error("verify_ap_instance: 4 must divide d");
    if (a < 1 || d < 4) throw Error("verify_ap_instance: a and d must be positive");
    rep.record("d", d);
    rep.record("a", a);

    auto modulus = constructions::ap_modulus_build(d);
    const Natural& D = modulus.D;
    rep.record("D", D);
    rep.record("gamma", Integer(static_cast<unsigned long>(modulus.gamma)));

    auto witness = constructions::ap_lemma_solve(D, a);
    rep.record("v1", witness.v1);
    rep.record("v2", witness.v2);
    bool plus = witness.branch == ApWitness::Branch::plus;
    rep.record("branch_plus", Integer(plus ? 1 : 0));
    rep.check(witness.congruence_holds(), "CRT witness satisfies its congruence");

    Integer v = constructions::ap_choose_v(D, a, witness);
    rep.record("v", v);
    rep.check(plus ? v < -1 : v > 0, "sign constraint on v");

    const unsigned j1 = 1, j2 = 2, j = j2 - j1;
    rep.record("j1", Integer(static_cast<unsigned long>(j1)));
    rep.record("j2", Integer(static_cast<unsigned long>(j2)));
    const Natural l = modulus.preimage_table.at(j);
    const Natural dj = arith::pow_nat(D, j);
    rep.record("l", l);
    rep.check(totient::phi(l) == dj, "phi(l) = D^j");

    // the difference identity is algebra in x; pin it down before any search
    bool algebra_ok = true;
    for (unsigned long x0 : {1ul, 2ul, 12345ul}) {
        Integer p1s = arith::pow_nat(D, j1) * x0 - v;
        Integer p2s = arith::pow_nat(D, j2) * x0 - v;
        algebra_ok = algebra_ok && (p2s - 1) - (p1s - 1) * dj == (v + 1) * (dj - 1);
    }
    rep.check(algebra_ok, "difference identity holds as exact algebra");

    std::uint64_t prp = 0;
    auto checked_prime = [&](const Natural& n) {
        if (n < 2) return false;
        auto r = arith::is_prime(n, prp_rounds);
        if (r.prime() && r.probable()) ++prp;
        return r.prime();
    };

    bool found = false;
    Natural base1 = arith::pow_nat(D, j1), base2 = arith::pow_nat(D, j2);
    for (Natural x = 1; x <= x_bound && !found; ++x) {
        Integer p1i = base1 * x - v;
        Integer p2i = base2 * x - v;
        if (p1i < 2 || p2i < 2) continue;
        Natural p1(p1i), p2(p2i);
        if (!checked_prime(p1) || !checked_prime(p2)) continue;
        if (arith::gcd(p1, l) != 1 || arith::gcd(p2, l) != 1) continue;

        // prime q ≡ v2 (mod D), coprime to l, below p1
        Natural q = arith::mod_norm(witness.v2, D);
        if (q == 0) q = D;
        bool q_found = false;
        for (; q < p1; q += D) {
            if (q < 2) continue;
            if (arith::gcd(q, l) != 1) continue;
            if (checked_prime(q)) { q_found = true; break; }
        }
        if (!q_found) continue;

        found = true;
        rep.record("x", x);
        rep.record("p1", p1);
        rep.record("p2", p2);
        rep.record("q", q);

        Integer eq1_lhs = Integer(totient::phi(p2)) - Integer(totient::phi(p1 * l));
        Integer eq1_mid = (Integer(p2) - 1) - (Integer(p1) - 1) * dj;
        Integer eq1_rhs = (v + 1) * (dj - 1);
        rep.record("eq1_lhs", eq1_lhs);
        rep.record("eq1_rhs", eq1_rhs);
        rep.check(eq1_lhs == eq1_mid, "phi evaluation matches (p2-1) - (p1-1)D^j");
        rep.check(eq1_lhs == eq1_rhs, "first identity exact");

        Integer eq2_lhs = Integer(totient::phi(p2 * q)) - Integer(totient::phi(p1 * l * q));
        Integer eq2_rhs = (Integer(q) - 1) * (v + 1) * (dj - 1);
        rep.record("eq2_lhs", eq2_lhs);
        rep.record("eq2_rhs", eq2_rhs);
        rep.check(eq2_lhs == eq2_rhs, "second identity exact");

        rep.record("value", eq2_rhs);
        rep.check(plus ? eq2_rhs < 0 : eq2_rhs > 0, "value sign matches the sign of v");
        Integer magnitude = abs(eq2_rhs);
        rep.record("value_abs", magnitude);
        rep.check(arith::mod_norm(magnitude, D) == arith::mod_norm(a, D),
                  "|value| ≡ a (mod D)");
        rep.check(arith::mod_norm(magnitude, d) == arith::mod_norm(a, d),
                  "|value| ≡ a (mod d)");
    }
    rep.probabilistic_steps += prp;

    if (!found) {
        rep.inconclusive = true;
        rep.note("no prime pair p1 = D x - v, p2 = D^2 x - v with x <= " + x_bound.get_str() +
                 "; instance search inconclusive (identities verified on synthetic values only)");
    }
    return rep;
}

}  // namespace tg::paperverify
