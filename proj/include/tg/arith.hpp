#pragma once

// Exact arbitrary-precision integer arithmetic: primality, factorization,
// sieves, primorials, lcm ranges and CRT. Everything else in the toolkit
// builds on this layer. Values are GMP integers (mpz_class); all functions
// here are pure and deterministic.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tg {

// Arbitrary-precision integer. Natural is used where values are
// non-negative by contract, Integer where signs can appear (form offsets,
// CRT residues, the v of the progression construction).
using Natural = mpz_class;
using Integer = mpz_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace arith {

constexpr int kDefaultPrpRounds = 64;
constexpr std::uint64_t kDefaultRhoBudget = 10'000'000;

enum class Verdict { prime, composite };
enum class Certainty { deterministic, probable };

struct PrimalityResult {
    Verdict verdict = Verdict::composite;
    Certainty certainty = Certainty::deterministic;

    bool prime() const { return verdict == Verdict::prime; }
    bool probable() const { return certainty == Certainty::probable; }
};

// Primality test. Below 2^64 the verdict is deterministic (fixed
// Miller-Rabin base set that is proven exact in that range). Above 2^64 a
// "prime" verdict is a strong-probable-prime result over `prp_rounds`
// bases; "composite" verdicts are always certain.
PrimalityResult is_prime(const Natural& n, int prp_rounds = kDefaultPrpRounds);

struct Factor {
    Natural prime;
    unsigned exponent = 0;

    friend bool operator==(const Factor&, const Factor&) = default;
};

// Multiset of (prime, exponent) pairs, primes strictly increasing.
struct Factorization {
    std::vector<Factor> factors;

    Natural value() const;                      // product of p^e
    Natural radical() const;                    // product of distinct primes
    unsigned exponent_of(const Natural& p) const;
    bool contains(const Natural& p) const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Complete factorization of n >= 1. Small factors come off by trial
// division, the rest by Brent's rho with `rho_budget` iterations per
// cofactor; exceeding the budget throws rather than returning a partial
// answer. Every emitted prime is re-verified with is_prime.
Factorization factorize(const Natural& n,
                        std::uint64_t rho_budget = kDefaultRhoBudget,
                        int prp_rounds = kDefaultPrpRounds);

// Primes <= bound, ascending (empty for bound < 2).
std::vector<Natural> primes_up_to(const Natural& bound);

// Product of all primes <= bound (empty product = 1).
Natural primorial(const Natural& bound);

// lcm(1, 2, ..., n) for n >= 1, via the prime-power formula
// lcm[1..n] = prod_{p <= n} p^floor(log_p n).
Natural lcm_range(const Natural& n);

struct Congruence {
    Integer residue;   // may be negative; normalized internally
    Natural modulus;   // >= 1
};

struct CrtSolution {
    Natural residue;   // in [0, modulus)
    Natural modulus;   // product of input moduli
};

struct NonCoprimeModuli : Error {
    Natural first, second;
    NonCoprimeModuli(const Natural& a, const Natural& b);
};

// Chinese Remainder Theorem for pairwise coprime moduli. The empty system
// yields (0, 1). Non-coprime inputs throw NonCoprimeModuli naming the
// offending pair.
CrtSolution crt(const std::vector<Congruence>& system);

// --- small helpers shared across modules ---

// Least non-negative residue of x modulo m >= 1.
Natural mod_norm(const Integer& x, const Natural& m);

// base^exp for machine-word exponents.
Natural pow_nat(const Natural& base, unsigned long exp);

Natural gcd(const Natural& a, const Natural& b);
Natural lcm(const Natural& a, const Natural& b);

// Primes <= bound as machine words (bound must fit in memory; used for
// trial division tables and sieving).
std::vector<std::uint64_t> small_primes_up_to(std::uint64_t bound);

}  // namespace arith
}  // namespace tg
