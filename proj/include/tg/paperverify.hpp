#pragma once

// One verification routine per claim with computational content. Every
// routine re-derives its constants, runs the stated checks exactly, and
// returns a report carrying all intermediate numbers for audit. Reports are
// fully deterministic.

#include "tg/arith.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tg::paperverify {

struct VerificationReport {
    std::string claim_id;
    bool passed = true;
    // instance searches that ran out of room end here instead of failing;
    // nothing a finite search can refute
    bool inconclusive = false;
    std::map<std::string, Integer> values;
    std::uint64_t probabilistic_steps = 0;
    std::vector<std::string> notes;

    void record(const std::string& name, const Integer& v) { values[name] = v; }
    bool check(bool cond, const std::string& what) {
        if (!cond) {
            passed = false;
            notes.push_back("FAILED: " + what);
        }
        return cond;
    }
    void note(const std::string& s) { notes.push_back(s); }
};

// 50-form system (6 of n+a, 16 of 2n+a, 28 of 4n+a): admissibility with the
// stated witnesses, within-set widths 30/80/144, cross maxima 82 and 154,
// the no-zero check, and the overall bound 154.
VerificationReport verify_theorem1();

// a0 = primorial(47), b0 = lcm[1..49]: for every j in 1..49, j | b0,
// a0 | a0*b0/j and the scaling identity phi(a0*b0/j)*j = phi(a0*b0); plus
// admissibility of the shifted systems {n + i*k*a0 : i = 1..50}.
VerificationReport verify_theorem2_scaffold();

// Triples {n+1, n+2h+1, 2n+2h+1}: admissibility for every h <= h_max, and
// the three case identities phi(..) - phi(..) = 2h evaluated at concrete
// prime instances for h <= min(h_max, 20).
VerificationReport verify_dhl3(unsigned h_max = 20);

// {6, 8, 9, 12} with ell = 2: all 12 quotient memberships with explicit
// preimages, then the residue-class form systems for the given d (4 | d):
// m_i*n - a with a = d/2 - 1 for d ≡ 0, 4 (mod 12), m_i*n + b with
// b = d/2 + 1 for d ≡ 8 (mod 12).
VerificationReport verify_dhl4(const Natural& d = 4);

// {n, n+2, 2n+1, 4n-1, 4n+3}: admissibility (witness 11 mod 30) and the
// 10-pair table |(c/a)(b-1) - (d-1)| with maximum exactly 6.
VerificationReport verify_dhl5();

// Sextuple {h-72, h-66, h-64, h-63, h-60, h}, h = 120193920: all 30
// quotient memberships 4n_i/(n_j-n_i), 4n_j/(n_j-n_i) with re-verified
// preimages.
VerificationReport verify_dhl6();

// 28^j is a totient for every j = 1..49, preimages re-verified by exact phi
// evaluation; probabilistic primality verdicts are counted.
VerificationReport verify_remark28(int prp_rounds = arith::kDefaultPrpRounds);

// Full progression pipeline for (d, a): modulus D, CRT witness (v1, v2),
// shift v, then a concrete prime pair p1 = D^j1*x - v, p2 = D^j2*x - v with
// x <= x_bound and a prime q ≡ v2 (mod D), checking both difference
// identities exactly and the final congruence mod d. A fruitless search is
// inconclusive, not failed.
VerificationReport verify_ap_instance(const Natural& d = 4, const Natural& a = 4,
                                      const Natural& x_bound = 1'000'000,
                                      int prp_rounds = arith::kDefaultPrpRounds);

}  // namespace tg::paperverify
