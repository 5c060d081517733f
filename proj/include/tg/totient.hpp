#pragma once

// Euler's phi, totient sieves, and a complete inverse-totient solver.
// inverse_phi decides membership in the image of phi: an empty, untruncated
// result is a certificate of nontotience.

#include "tg/arith.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tg::totient {

// phi(n) = n * prod_{p|n} (1 - 1/p), computed exactly via factorize.
Natural phi(const Natural& n,
            std::uint64_t rho_budget = arith::kDefaultRhoBudget,
            int prp_rounds = arith::kDefaultPrpRounds);

// prod p^{e-1}(p-1) over the given factorization. Exact whenever the
// factorization is genuine; callers that obtained the factors elsewhere can
// revalidate them first (see Factorization::value / is_prime).
Natural phi_from_factorization(const arith::Factorization& f);

// Totient table indexed 1..bound (entry 0 unused). Bounded by memory:
// bounds above 2^28 are refused.
std::vector<std::uint32_t> phi_sieve(std::uint64_t bound);

struct InversePhiOptions {
    int prp_rounds = arith::kDefaultPrpRounds;
    std::uint64_t rho_budget = arith::kDefaultRhoBudget;
    // recursion-step budget; only adversarial targets get anywhere near it
    std::uint64_t node_budget = 50'000'000;
};

struct TotientPreimages {
    Natural target;
    // ascending; the COMPLETE solution set of phi(x) = target unless
    // truncated is set (cap reached)
    std::vector<Natural> preimages;
    // prime-power decomposition of each preimage, aligned with `preimages`
    std::vector<arith::Factorization> factorizations;
    bool truncated = false;
    std::optional<Natural> cap;
    // strong-probable-prime verdicts this result relies on (0 = fully
    // deterministic)
    std::uint64_t probable_prime_checks = 0;

    bool empty() const { return preimages.empty(); }
};

// Complete solution set of phi(x) = m: recursive enumeration over the
// divisors d | m with d+1 prime, assembling x from prime powers p^e with
// phi(p^e) | m, primes taken in decreasing order. With a cap the search
// stops after `cap` solutions and marks the result truncated.
TotientPreimages inverse_phi(const Natural& m,
                             std::optional<Natural> cap = std::nullopt,
                             const InversePhiOptions& opts = {});

bool is_totient(const Natural& m, const InversePhiOptions& opts = {});

// The scaling identity behind phi(a0*b0*l/j) = phi(a0*b0*l)/j: true iff
// every prime of j divides n/j and phi(n/j)*j = phi(n). Both conditions are
// evaluated independently even though the first implies the second.
// Requires j | n.
bool verify_scaled_totient(const Natural& n, const Natural& j,
                           std::uint64_t rho_budget = arith::kDefaultRhoBudget);

// Given D = prod p^alpha(p) and beta with prod_{p|D}(p-1) = prod p^beta(p),
// returns x = prod p^{j*alpha(p) - beta(p) + 1}, which satisfies
// phi(x) = D^j; the identity is asserted exactly before returning.
// Throws (naming the offending prime) if some prime of prod(p-1) lies
// outside D, or if an exponent would drop below 1.
Natural totient_power_witness(const arith::Factorization& d_fact, unsigned j,
                              const arith::Factorization& beta_fact);

}  // namespace tg::totient
