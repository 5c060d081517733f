#include "tg/constructions.hpp"

#include <algorithm>

namespace tg::constructions {

using arith::Factorization;

bool divisibility_property_holds(const std::vector<Natural>& set, const Natural& b) {
    for (std::size_t j = 1; j < set.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) {
            Natural d = set[j] - set[i];
            if (d <= 0) return false;
            if (!mpz_divisible_p(set[j].get_mpz_t(), d.get_mpz_t())) return false;
            Natural q = set[j] / d;
            if (!mpz_divisible_p(q.get_mpz_t(), b.get_mpz_t())) return false;
        }
    return true;
}

Lemma31Witness lemma31_construct(const Natural& b, unsigned k) {
    if (b < 1) throw Error("lemma31_construct: b must be >= 1");
    if (k < 2) throw Error("lemma31_construct: k must be >= 2");

    Lemma31Witness w;
    w.b = b;
    w.stages.push_back({2 * b - 1, 2 * b});

    while (w.stages.back().size() < k) {
        const auto& cur = w.stages.back();
        const Natural& n_max = cur.back();

        Natural diff_lcm = 1;
        for (std::size_t j = 1; j < cur.size(); ++j)
            for (std::size_t i = 0; i < j; ++i)
                diff_lcm = arith::lcm(diff_lcm, cur[j] - cur[i]);

        // least multiple M' of the difference lcm with b*M' > n_k; keeps
        // every bM' - n_i positive so the new set is increasing
        Natural mprime = diff_lcm * (n_max / (b * diff_lcm) + 1);
        while (b * mprime <= n_max) mprime += diff_lcm;

        Natural K = mprime;
        for (const auto& n : cur) K = arith::lcm(K, b * mprime - n);

        std::vector<Natural> next;
        for (const auto& n : cur) next.push_back(K * b - b * mprime + n);
        next.push_back(K * b);

        for (std::size_t i = 1; i < next.size(); ++i)
            if (next[i - 1] >= next[i] || next[0] <= 0)
                throw Error("lemma31_construct: internal error, set not increasing");
        if (!divisibility_property_holds(next, b))
            throw Error("lemma31_construct: internal error, divisibility lost");

        w.M_values.push_back(mprime);
        w.K_values.push_back(K);
        w.stages.push_back(std::move(next));
    }

    if (!divisibility_property_holds(w.final_set(), b))
        throw Error("lemma31_construct: internal error, final set invalid");
    return w;
}

forms::FormSystem heuristic_forms(const std::vector<Natural>& n_set, const Natural& ell,
                                  std::optional<Natural> b) {
    if (ell < 1) throw Error("heuristic_forms: ell must be >= 1");
    if (n_set.size() < 2) throw Error("heuristic_forms: need at least 2 elements");
    for (std::size_t i = 1; i < n_set.size(); ++i)
        if (n_set[i - 1] >= n_set[i])
            throw Error("heuristic_forms: set must be strictly increasing");

    const std::size_t k = n_set.size();
    Natural diff_lcm = 1;
    Natural quotient_gcd = 0;
    for (std::size_t j = 1; j < k; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            Natural d = n_set[j] - n_set[i];
            if (!mpz_divisible_p(n_set[j].get_mpz_t(), d.get_mpz_t()))
                throw Error("heuristic_forms: " + d.get_str() + " does not divide " +
                            n_set[j].get_str() + " (pair " + n_set[i].get_str() + ", " +
                            n_set[j].get_str() + ")");
            Natural q = n_set[j] / d;
            if (b && !mpz_divisible_p(q.get_mpz_t(), b->get_mpz_t()))
                throw Error("heuristic_forms: b does not divide " + n_set[j].get_str() + "/(" +
                            n_set[j].get_str() + "-" + n_set[i].get_str() + ")");
            quotient_gcd = arith::gcd(quotient_gcd, q);
            diff_lcm = arith::lcm(diff_lcm, d);
        }

    Natural bb = b ? *b : quotient_gcd;
    if (bb < 1) throw Error("heuristic_forms: derived b is zero");

    Natural bM = bb * diff_lcm;
    forms::FormSystem sys;
    for (std::size_t j = 1; j < k; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            Natural d = n_set[j] - n_set[i];
            Natural coeff = ell * bM / d;
            sys.forms.push_back({coeff, ell * n_set[i] / d + 1});
            sys.forms.push_back({coeff, ell * n_set[j] / d + 1});
        }
    return sys;
}

namespace {

struct TotientCache {
    std::map<Natural, bool> known;
    bool query(const Natural& m) {
        auto it = known.find(m);
        if (it != known.end()) return it->second;
        bool r = totient::is_totient(m);
        known.emplace(m, r);
        return r;
    }
};

// both ell*m_i/d and ell*m_j/d must be integers in the totient image
bool pair_ok(const Natural& mi, const Natural& mj, const Natural& ell, TotientCache& cache) {
    Natural d = mj - mi;
    Natural a = ell * mi, b = ell * mj;
    if (!mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) return false;
    if (!mpz_divisible_p(b.get_mpz_t(), d.get_mpz_t())) return false;
    return cache.query(a / d) && cache.query(b / d);
}

void search_extend(std::vector<Natural>& cur, unsigned k, const Natural& ell,
                   const Natural& bound, TotientCache& cache,
                   std::vector<std::vector<Natural>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (Natural m = cur.empty() ? Natural(2) : cur.back() + 1; m <= bound; ++m) {
        bool ok = true;
        for (const auto& prev : cur)
            if (!pair_ok(prev, m, ell, cache)) { ok = false; break; }
        if (!ok) continue;
        cur.push_back(m);
        search_extend(cur, k, ell, bound, cache, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<Natural>> dhlk_set_search(unsigned k, const Natural& ell,
                                                  const Natural& bound) {
    if (k < 2) throw Error("dhlk_set_search: k must be >= 2");
    if (ell < 1) throw Error("dhlk_set_search: ell must be >= 1");
    std::vector<std::vector<Natural>> out;
    std::vector<Natural> cur;
    TotientCache cache;
    search_extend(cur, k, ell, bound, cache, out);
    return out;
}

bool dhlk_verify_matrix(const std::vector<Natural>& m_set,
                        const std::vector<std::vector<Natural>>& ell_matrix) {
    const std::size_t k = m_set.size();
    if (k < 2) throw Error("dhlk_verify_matrix: need at least 2 elements");
    if (ell_matrix.size() != k) throw Error("dhlk_verify_matrix: matrix size mismatch");
    TotientCache cache;
    for (std::size_t i = 0; i < k; ++i) {
        if (ell_matrix[i].size() != k) throw Error("dhlk_verify_matrix: matrix size mismatch");
        for (std::size_t j = i + 1; j < k; ++j)
            if (!pair_ok(m_set[i], m_set[j], ell_matrix[i][j], cache)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// CRT witness solver
// ---------------------------------------------------------------------------

bool ApWitness::congruence_holds() const {
    if (arith::gcd(v1, D) != 1 || arith::gcd(v2, D) != 1) return false;
    Integer lhs = branch == Branch::minus ? Integer((v1 - 1) * (v2 - 1))
                                          : Integer((v1 + 1) * (v2 - 1));
    return arith::mod_norm(lhs, D) == arith::mod_norm(a, D);
}

namespace {

struct LocalPair {
    Natural v1, v2;  // residues mod q = p^alpha
};

// Minus-branch solution of (v1-1)(v2-1) ≡ t (mod p^alpha) with both values
// coprime to p. Requires 4 | t; for p = 3 additionally t ≡ 0, 1 (mod 3).
LocalPair solve_minus(const Natural& p, unsigned alpha, const Integer& t) {
    Natural q = arith::pow_nat(p, alpha);
    if (p == 2) {
        // v1 = 3, v2 = t/2 + 1: (3-1)(v2-1) = 2*(t/2) = t, and t/2 is even
        // because 4 | t, so v2 is odd
        return {arith::mod_norm(3, q), arith::mod_norm(t / 2 + 1, q)};
    }
    if (p == 3) {
        Natural tm3 = arith::mod_norm(t, 3);
        if (tm3 == 2) throw Error("solve_minus: t ≡ -1 (mod 3) has no minus-branch solution");
        return {arith::mod_norm(2, q), arith::mod_norm(t + 1, q)};
    }
    // p > 3: pick v2 with v2 mod p outside {0, 1, 1-t}, smallest >= 2, then
    // v1 = t/(v2-1) + 1
    Natural excluded = arith::mod_norm(1 - t, p);
    Natural v2 = 2;
    while (arith::mod_norm(v2, p) == 0 || arith::mod_norm(v2, p) == 1 ||
           arith::mod_norm(v2, p) == excluded)
        ++v2;
    Natural inv;
    Natural v2m1 = v2 - 1;
    if (mpz_invert(inv.get_mpz_t(), v2m1.get_mpz_t(), q.get_mpz_t()) == 0)
        throw Error("solve_minus: internal error, v2-1 not invertible");
    Natural v1 = arith::mod_norm(arith::mod_norm(t, q) * inv + 1, q);
    if (arith::gcd(v1, p) != 1)
        throw Error("solve_minus: internal error, v1 divisible by p");
    return {v1, v2};
}

}  // namespace

ApWitness ap_lemma_solve(const Natural& D, const Natural& a) {
    if (D < 1) throw Error("ap_lemma_solve: D must be >= 1");
    if (!mpz_divisible_ui_p(a.get_mpz_t(), 4)) throw Error("ap_lemma_solve: 4 must divide a");

    ApWitness w;
    w.D = D;
    w.a = a;

    if (D == 1) {
        w.v1 = w.v2 = 0;
        w.branch = ApWitness::Branch::minus;
        return w;
    }

    Factorization df = arith::factorize(D);

    // p = 3 admits only one branch, fixed by a mod 3; every other prime
    // power solves the minus branch for either a or -a, and a final
    // v1 -> -v1 flips the result onto the plus branch
    bool has3 = df.contains(3);
    bool plus = has3 && arith::mod_norm(a, 3) == 2;
    w.branch = plus ? ApWitness::Branch::plus : ApWitness::Branch::minus;
    Integer t = plus ? Integer(-a) : Integer(a);

    std::vector<arith::Congruence> c1, c2;
    for (const auto& fac : df.factors) {
        LocalPair local = solve_minus(fac.prime, fac.exponent, t);
        Natural q = arith::pow_nat(fac.prime, fac.exponent);
        c1.push_back({Integer(local.v1), q});
        c2.push_back({Integer(local.v2), q});
    }
    Natural v1 = arith::crt(c1).residue;
    w.v2 = arith::crt(c2).residue;
    w.v1 = plus ? arith::mod_norm(-Integer(v1), D) : v1;

    if (!w.congruence_holds())
        throw Error("ap_lemma_solve: internal error, witness fails its congruence");
    return w;
}

Integer ap_choose_v(const Natural& D, const Natural& a, const ApWitness& witness) {
    if (witness.D != D || arith::mod_norm(witness.a - a, D) != 0)
        throw Error("ap_choose_v: witness does not match (D, a)");
    Integer v;
    if (witness.branch == ApWitness::Branch::minus) {
        // v ≡ -v1 (mod D), smallest positive
        Natural r = arith::mod_norm(-Integer(witness.v1), D);
        v = (r == 0) ? Integer(D) : Integer(r);
    } else {
        // v ≡ v1 (mod D), largest value < -1
        Natural r = arith::mod_norm(witness.v1, D);
        v = Integer(r) - D;
        if (v >= -1) v -= D;
    }
    if (arith::gcd(arith::mod_norm(v, D), D) != 1 && D != 1)
        throw Error("ap_choose_v: internal error, v not coprime to D");
    return v;
}

ApModulus ap_modulus_build(const Natural& d) {
    if (d < 2) throw Error("ap_modulus_build: d must be >= 2");

    ApModulus m;
    m.d = d;

    Factorization dfact = arith::factorize(d);
    const Natural& P = dfact.factors.back().prime;

    // beta: prod_{p <= P} (p - 1) = prod p^beta(p)
    Natural prod_pm1 = 1;
    for (const auto& p : arith::primes_up_to(P)) prod_pm1 *= p - 1;
    Factorization beta = arith::factorize(prod_pm1);

    unsigned gamma = 1;  // floor of 1 so D gains every prime <= P
    for (const auto& f : beta.factors) gamma = std::max(gamma, f.exponent);
    m.gamma = gamma;

    Natural D = d;
    for (const auto& p : arith::primes_up_to(P)) D *= arith::pow_nat(p, gamma);
    m.D = D;
    m.D_factorization = arith::factorize(D);

    // beta over the primes of D: D's prime set is exactly {p <= P}, so the
    // product prod_{p|D}(p-1) coincides with prod_pm1
    m.beta_factorization = beta;

    if (!mpz_divisible_p(D.get_mpz_t(), d.get_mpz_t()))
        throw Error("ap_modulus_build: internal error, d does not divide D");

    for (unsigned j = 1; j <= kApTableDepth; ++j)
        m.preimage_table[j] = totient::totient_power_witness(m.D_factorization, j, beta);
    return m;
}

}  // namespace tg::constructions
