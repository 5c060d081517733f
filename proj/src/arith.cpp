#include "tg/arith.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>

namespace tg::arith {

namespace {

// ---------------------------------------------------------------------------
// 64-bit fast path: mulmod/powmod via __int128, Miller-Rabin, Brent rho.
// Inputs below 2^64 dominate the verification workload, so keeping them off
// the mpz allocator matters for the sieve-scale checks.
// ---------------------------------------------------------------------------

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>((u128)a * b % m);
}

u64 powmod_u64(u64 base, u64 exp, u64 m) {
    u64 r = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Strong probable prime test to base a; a "false" here proves compositeness.
bool mr_witness_u64(u64 n, u64 a) {
    a %= n;
    if (a == 0) return true;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// The first 12 primes are an exact Miller-Rabin base set for n < 3.3e24
// (Sorenson & Webster), which covers all of u64.
constexpr u64 kDeterministicBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (u64 a : kDeterministicBases)
        if (!mr_witness_u64(n, a)) return false;
    return true;
}

// Brent's cycle-finding rho. Returns a nontrivial factor of composite odd n,
// or 0 if the iteration budget runs out. Deterministic: the increment c
// steps through 1, 2, 3, ... on failure.
u64 rho_brent_u64(u64 n, std::uint64_t budget) {
    if (n % 2 == 0) return 2;
    std::uint64_t spent = 0;
    for (u64 c = 1; spent < budget; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 power = 1, lam = 0, saved_y = 2;
        while (d == 1 && spent < budget) {
            if (lam == power) {
                x = y;
                power *= 2;
                lam = 0;
            }
            // batch 128 steps per gcd
            u64 q = 1;
            u64 steps = std::min<u64>(128, power - lam);
            saved_y = y;
            for (u64 i = 0; i < steps; ++i) {
                y = mulmod_u64(y, y, n);
                y = (y + c) % n;
                u64 diff = x > y ? x - y : y - x;
                q = mulmod_u64(q, diff ? diff : 1, n);
            }
            lam += steps;
            spent += steps;
            d = std::gcd(q, n);
        }
        if (d != n && d != 1) return d;
        if (d == n) {
            // backtrack one by one
            u64 y2 = saved_y;
            do {
                y2 = mulmod_u64(y2, y2, n);
                y2 = (y2 + c) % n;
                u64 diff = x > y2 ? x - y2 : y2 - x;
                d = std::gcd(diff ? diff : n, n);
            } while (d == 1);
            if (d != n) return d;
        }
        // else: retry with next c
    }
    return 0;
}

// ---------------------------------------------------------------------------
// mpz path
// ---------------------------------------------------------------------------

bool fits_u64(const Natural& n) {
    return mpz_sizeinbase(n.get_mpz_t(), 2) <= 64 && mpz_sgn(n.get_mpz_t()) >= 0;
}

u64 to_u64(const Natural& n) {
    u64 lo = mpz_get_ui(n.get_mpz_t());
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 8 * sizeof(unsigned long)) {
        Natural hi = n >> 32;
        lo = (static_cast<u64>(mpz_get_ui(hi.get_mpz_t())) << 32) | (lo & 0xffffffffull);
    }
    return lo;
}

bool mr_witness_mpz(const Natural& n, const Natural& a, const Natural& d, unsigned long s) {
    Natural x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

const std::vector<u64>& prp_base_table() {
    // first 10000 primes; plenty for any sane round count
    static const std::vector<u64> primes = small_primes_up_to(104730);
    return primes;
}

Natural rho_brent_mpz(const Natural& n, std::uint64_t budget) {
    std::uint64_t spent = 0;
    for (unsigned long c = 1; spent < budget; ++c) {
        Natural x = 2, y = 2, d = 1, saved_y = 2;
        u64 power = 1, lam = 0;
        while (d == 1 && spent < budget) {
            if (lam == power) {
                x = y;
                power *= 2;
                lam = 0;
            }
            Natural q = 1;
            u64 steps = std::min<u64>(128, power - lam);
            saved_y = y;
            for (u64 i = 0; i < steps; ++i) {
                y = (y * y + c) % n;
                Natural diff = x > y ? x - y : y - x;
                if (diff != 0) q = (q * diff) % n;
            }
            lam += steps;
            spent += steps;
            d = gcd(q, n);
        }
        if (d != 1 && d != n) return d;
        if (d == n) {
            Natural y2 = saved_y;
            do {
                y2 = (y2 * y2 + c) % n;
                Natural diff = x > y2 ? x - y2 : y2 - x;
                d = gcd(diff == 0 ? n : diff, n);
            } while (d == 1);
            if (d != n) return d;
        }
    }
    return 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// public surface
// ---------------------------------------------------------------------------

Natural mod_norm(const Integer& x, const Natural& m) {
    if (m < 1) throw Error("mod_norm: modulus must be >= 1");
    Natural r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

Natural pow_nat(const Natural& base, unsigned long exp) {
    Natural r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Natural gcd(const Natural& a, const Natural& b) {
    Natural r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Natural lcm(const Natural& a, const Natural& b) {
    Natural r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

std::vector<std::uint64_t> small_primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> primes;
    if (bound < 2) return primes;
    if (bound > (1ull << 32))
        throw Error("small_primes_up_to: bound exceeds sieve memory budget");
    std::vector<bool> composite(bound + 1, false);
    for (u64 i = 2; i * i <= bound; ++i)
        if (!composite[i])
            for (u64 j = i * i; j <= bound; j += i) composite[j] = true;
    for (u64 i = 2; i <= bound; ++i)
        if (!composite[i]) primes.push_back(i);
    return primes;
}

PrimalityResult is_prime(const Natural& n, int prp_rounds) {
    if (prp_rounds < 1) throw Error("is_prime: prp_rounds must be >= 1");
    if (mpz_sgn(n.get_mpz_t()) < 0) throw Error("is_prime: negative input");

    if (fits_u64(n)) {
        bool p = is_prime_u64(to_u64(n));
        return {p ? Verdict::prime : Verdict::composite, Certainty::deterministic};
    }

    // n >= 2^64: quick small-prime screen, then strong-probable-prime rounds.
    for (u64 p : kDeterministicBases)
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return {Verdict::composite, Certainty::deterministic};

    Natural d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;

    const auto& bases = prp_base_table();
    if (static_cast<std::size_t>(prp_rounds) > bases.size())
        throw Error("is_prime: prp_rounds larger than the base table");
    for (int i = 0; i < prp_rounds; ++i) {
        if (!mr_witness_mpz(n, Natural(static_cast<unsigned long>(bases[i])), d, s))
            return {Verdict::composite, Certainty::deterministic};
    }
    return {Verdict::prime, Certainty::probable};
}

Natural Factorization::value() const {
    Natural v = 1;
    for (const auto& f : factors) v *= pow_nat(f.prime, f.exponent);
    return v;
}

Natural Factorization::radical() const {
    Natural v = 1;
    for (const auto& f : factors) v *= f.prime;
    return v;
}

unsigned Factorization::exponent_of(const Natural& p) const {
    for (const auto& f : factors)
        if (f.prime == p) return f.exponent;
    return 0;
}

bool Factorization::contains(const Natural& p) const { return exponent_of(p) > 0; }

Factorization factorize(const Natural& n, std::uint64_t rho_budget, int prp_rounds) {
    if (n < 1) throw Error("factorize: input must be >= 1");

    static const std::vector<u64> trial_primes = small_primes_up_to(10'000);

    std::vector<Factor> out;
    Natural rest = n;

    for (u64 p : trial_primes) {
        if (rest == 1) break;
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            unsigned e = 0;
            do {
                mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
                ++e;
            } while (mpz_divisible_ui_p(rest.get_mpz_t(), p));
            out.push_back({Natural(static_cast<unsigned long>(p)), e});
        }
        // trial division up to 1e4 proves primality of any survivor < 1e8
        if (p * p > rest && rest > 1) {
            out.push_back({rest, 1});
            rest = 1;
            break;
        }
    }

    // split remaining cofactors with rho
    std::vector<Natural> pending;
    if (rest > 1) pending.push_back(rest);
    std::vector<Factor> big;
    while (!pending.empty()) {
        Natural c = pending.back();
        pending.pop_back();
        if (is_prime(c, prp_rounds).prime()) {
            bool merged = false;
            for (auto& f : big)
                if (f.prime == c) { ++f.exponent; merged = true; break; }
            if (!merged) big.push_back({c, 1});
            continue;
        }
        Natural d;
        if (fits_u64(c)) {
            u64 dd = rho_brent_u64(to_u64(c), rho_budget);
            d = dd ? Natural(static_cast<unsigned long>(dd)) : Natural(0);
        } else {
            d = rho_brent_mpz(c, rho_budget);
        }
        if (d == 0)
            throw Error("factorize: rho budget exhausted on cofactor " + c.get_str());
        pending.push_back(d);
        pending.push_back(c / d);
    }
    out.insert(out.end(), big.begin(), big.end());

    std::sort(out.begin(), out.end(),
              [](const Factor& a, const Factor& b) { return a.prime < b.prime; });
    // merge any duplicate primes from the rho splits
    std::vector<Factor> merged;
    for (const auto& f : out) {
        if (!merged.empty() && merged.back().prime == f.prime)
            merged.back().exponent += f.exponent;
        else
            merged.push_back(f);
    }

    Factorization result{std::move(merged)};
    Natural check = 1;
    for (const auto& f : result.factors) {
        if (!is_prime(f.prime, prp_rounds).prime())
            throw Error("factorize: internal error, non-prime factor " + f.prime.get_str());
        check *= pow_nat(f.prime, f.exponent);
    }
    if (check != n) throw Error("factorize: internal error, product mismatch");
    return result;
}

std::vector<Natural> primes_up_to(const Natural& bound) {
    if (bound < 2) return {};
    if (!fits_u64(bound) || to_u64(bound) > (1ull << 32))
        throw Error("primes_up_to: bound exceeds sieve memory budget");
    std::vector<Natural> out;
    for (u64 p : small_primes_up_to(to_u64(bound)))
        out.emplace_back(static_cast<unsigned long>(p));
    return out;
}

Natural primorial(const Natural& bound) {
    Natural v = 1;
    for (const auto& p : primes_up_to(bound)) v *= p;
    return v;
}

Natural lcm_range(const Natural& n) {
    if (n < 1) throw Error("lcm_range: input must be >= 1");
    if (!fits_u64(n)) throw Error("lcm_range: input out of range");
    u64 nn = to_u64(n);
    Natural v = 1;
    for (u64 p : small_primes_up_to(nn)) {
        // largest power of p not exceeding n
        Natural pk(static_cast<unsigned long>(p));
        while (pk * static_cast<unsigned long>(p) <= nn) pk *= static_cast<unsigned long>(p);
        v *= pk;
    }
    return v;
}

NonCoprimeModuli::NonCoprimeModuli(const Natural& a, const Natural& b)
    : Error("crt: moduli not coprime: " + a.get_str() + " and " + b.get_str()),
      first(a),
      second(b) {}

CrtSolution crt(const std::vector<Congruence>& system) {
    Natural r = 0, m = 1;
    for (const auto& c : system) {
        if (c.modulus < 1) throw Error("crt: modulus must be >= 1");
        Natural g = gcd(m, c.modulus);
        if (g != 1) throw NonCoprimeModuli(m, c.modulus);

        // merge x ≡ r (mod m) with x ≡ c.residue (mod c.modulus):
        // x = r + m * t,  t ≡ (residue - r) / m  (mod c.modulus)
        Natural target = mod_norm(c.residue - r, c.modulus);
        Natural minv;
        if (c.modulus > 1) {
            if (mpz_invert(minv.get_mpz_t(), m.get_mpz_t(), c.modulus.get_mpz_t()) == 0)
                throw NonCoprimeModuli(m, c.modulus);
            Natural t = (target * minv) % c.modulus;
            r += m * t;
        }
        m *= c.modulus;
    }
    return {mod_norm(r, m), m};
}

}  // namespace tg::arith
