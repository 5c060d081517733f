#include "tg/totient.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <utility>

namespace tg::totient {

using arith::Factor;
using arith::Factorization;

Natural phi_from_factorization(const Factorization& f) {
    Natural v = 1;
    for (const auto& fac : f.factors)
        v *= arith::pow_nat(fac.prime, fac.exponent - 1) * (fac.prime - 1);
    return v;
}

Natural phi(const Natural& n, std::uint64_t rho_budget, int prp_rounds) {
    if (n < 1) throw Error("phi: input must be >= 1");
    return phi_from_factorization(arith::factorize(n, rho_budget, prp_rounds));
}

std::vector<std::uint32_t> phi_sieve(std::uint64_t bound) {
    if (bound < 1) throw Error("phi_sieve: bound must be >= 1");
    if (bound > (1ull << 28)) throw Error("phi_sieve: bound exceeds memory budget");
    std::vector<std::uint32_t> ph(bound + 1);
    for (std::uint64_t i = 0; i <= bound; ++i) ph[i] = static_cast<std::uint32_t>(i);
    for (std::uint64_t p = 2; p <= bound; ++p) {
        if (ph[p] == p) {  // untouched so far => prime
            for (std::uint64_t m = p; m <= bound; m += p) ph[m] -= ph[m] / p;
        }
    }
    return ph;
}

namespace {

// All divisors of the factored m. Refuses absurd divisor counts instead of
// exhausting memory.
std::vector<Natural> divisors_of(const Factorization& f) {
    std::uint64_t count = 1;
    for (const auto& fac : f.factors) {
        count *= fac.exponent + 1;
        if (count > 2'000'000) throw Error("inverse_phi: divisor count exceeds work budget");
    }
    std::vector<Natural> divs{1};
    for (const auto& fac : f.factors) {
        std::size_t n = divs.size();
        Natural pe = 1;
        for (unsigned e = 1; e <= fac.exponent; ++e) {
            pe *= fac.prime;
            for (std::size_t i = 0; i < n; ++i) divs.push_back(divs[i] * pe);
        }
    }
    return divs;
}

struct Candidate {
    Natural p;     // prime with (p-1) | m
    Natural pm1;   // p - 1
};

struct InvPhiSearch {
    const std::vector<Candidate>& cand;
    const InversePhiOptions& opts;
    std::optional<std::uint64_t> cap;
    std::uint64_t nodes = 0;

    // chosen prime powers along the current DFS path, largest prime first
    std::vector<Factor> path;
    std::vector<std::pair<Natural, Factorization>> found;
    // (quotient, candidate-index) pairs known to admit no completion
    std::set<std::pair<Natural, std::size_t>> dead;
    bool stopped = false;

    void emit() {
        Factorization f;
        f.factors.assign(path.rbegin(), path.rend());
        Natural x = f.value();
        found.emplace_back(std::move(x), std::move(f));
        if (cap && found.size() >= *cap) stopped = true;
    }

    // Enumerate all x with phi(x) = m using candidate primes of index < idx.
    // Returns true if at least one solution was emitted beneath this node.
    bool solve(const Natural& m, std::size_t idx) {
        if (++nodes > opts.node_budget)
            throw Error("inverse_phi: work budget exhausted (adversarial target?)");
        bool any = false;
        if (m == 1) {
            // the bare path is a solution; smaller primes p with
            // phi(p^e) = 1 (that is, p = 2, e = 1) may still extend it,
            // which the loop below picks up via pm1 = 1
            emit();
            if (stopped) return true;
            any = true;
        }
        auto key = std::make_pair(m, idx);
        if (dead.count(key)) return false;
        for (std::size_t i = idx; i-- > 0;) {
            if (stopped) return any;
            if (!mpz_divisible_p(m.get_mpz_t(), cand[i].pm1.get_mpz_t())) continue;
            Natural q = m / cand[i].pm1;
            unsigned e = 1;
            while (true) {
                path.push_back({cand[i].p, e});
                if (solve(q, i)) any = true;
                path.pop_back();
                if (stopped) return any;
                if (mpz_divisible_p(q.get_mpz_t(), cand[i].p.get_mpz_t())) {
                    q /= cand[i].p;
                    ++e;
                } else {
                    break;
                }
            }
        }
        if (!any && !stopped) dead.insert(std::move(key));
        return any;
    }
};

}  // namespace

TotientPreimages inverse_phi(const Natural& m, std::optional<Natural> cap,
                             const InversePhiOptions& opts) {
    if (m < 1) throw Error("inverse_phi: target must be >= 1");
    if (cap && *cap < 1) throw Error("inverse_phi: cap must be >= 1");

    TotientPreimages result;
    result.target = m;
    result.cap = cap;

    std::uint64_t prp_checks = 0;
    auto checked_is_prime = [&](const Natural& n) {
        auto r = arith::is_prime(n, opts.prp_rounds);
        if (r.probable()) ++prp_checks;
        return r.prime();
    };

    // candidate primes: d+1 for divisors d of m
    Factorization mf = arith::factorize(m, opts.rho_budget, opts.prp_rounds);
    std::vector<Natural> divs = divisors_of(mf);
    std::sort(divs.begin(), divs.end());
    std::vector<Candidate> cand;
    for (const auto& d : divs)
        if (checked_is_prime(d + 1)) cand.push_back({d + 1, d});

    std::optional<std::uint64_t> cap_u64;
    if (cap)
        cap_u64 = cap->fits_ulong_p() ? mpz_get_ui(cap->get_mpz_t())
                                      : std::numeric_limits<std::uint64_t>::max();
    InvPhiSearch search{cand, opts, cap_u64};
    search.solve(m, cand.size());

    std::sort(search.found.begin(), search.found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [x, f] : search.found) {
        // soundness: re-evaluate phi from the assembled factorization
        if (phi_from_factorization(f) != m)
            throw Error("inverse_phi: internal error, emitted non-solution");
        result.preimages.push_back(std::move(x));
        result.factorizations.push_back(std::move(f));
    }
    result.truncated = search.stopped;
    result.probable_prime_checks = prp_checks;
    return result;
}

bool is_totient(const Natural& m, const InversePhiOptions& opts) {
    return !inverse_phi(m, Natural(1), opts).empty();
}

bool verify_scaled_totient(const Natural& n, const Natural& j, std::uint64_t rho_budget) {
    if (n < 1 || j < 1) throw Error("verify_scaled_totient: inputs must be >= 1");
    if (!mpz_divisible_p(n.get_mpz_t(), j.get_mpz_t()))
        throw Error("verify_scaled_totient: j does not divide n");
    Natural quotient = n / j;

    bool primes_divide = true;
    for (const auto& fac : arith::factorize(j, rho_budget).factors)
        if (!mpz_divisible_p(quotient.get_mpz_t(), fac.prime.get_mpz_t())) {
            primes_divide = false;
            break;
        }

    bool phi_scales = phi(quotient, rho_budget) * j == phi(n, rho_budget);

    // rad(j) | n/j forces the phi identity; the two checks can only
    // disagree in one direction
    if (primes_divide && !phi_scales)
        throw Error("verify_scaled_totient: internal inconsistency");
    return primes_divide && phi_scales;
}

Natural totient_power_witness(const Factorization& d_fact, unsigned j,
                              const Factorization& beta_fact) {
    if (j < 1) throw Error("totient_power_witness: j must be >= 1");
    if (d_fact.factors.empty())
        throw Error("totient_power_witness: D must have at least one prime");

    Natural prod_pm1 = 1;
    for (const auto& fac : d_fact.factors) prod_pm1 *= fac.prime - 1;
    if (beta_fact.value() != prod_pm1)
        throw Error("totient_power_witness: beta factorization does not match prod(p-1) = " +
                    prod_pm1.get_str());

    for (const auto& bf : beta_fact.factors)
        if (!d_fact.contains(bf.prime))
            throw Error("totient_power_witness: prime " + bf.prime.get_str() +
                        " of prod(p-1) lies outside D");

    Natural x = 1, phi_x = 1;
    for (const auto& fac : d_fact.factors) {
        long e = static_cast<long>(j) * fac.exponent -
                 static_cast<long>(beta_fact.exponent_of(fac.prime)) + 1;
        if (e < 1)
            throw Error("totient_power_witness: exponent for prime " + fac.prime.get_str() +
                        " drops below 1");
        x *= arith::pow_nat(fac.prime, static_cast<unsigned long>(e));
        phi_x *= arith::pow_nat(fac.prime, static_cast<unsigned long>(e - 1)) * (fac.prime - 1);
    }

    Natural dj = 1;
    for (const auto& fac : d_fact.factors) dj *= arith::pow_nat(fac.prime, fac.exponent);
    dj = arith::pow_nat(dj, j);
    if (phi_x != dj)
        throw Error("totient_power_witness: phi(x) != D^j (defect)");
    return x;
}

}  // namespace tg::totient
