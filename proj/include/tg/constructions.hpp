#pragma once

// Constructive machinery: recursive divisibility sets (b | n_j/(n_j - n_i)),
// the derived admissible form collections, searches for witness sets whose
// scaled quotients are all totients, and the CRT witness solver / modulus
// builder behind the progression result.

#include "tg/arith.hpp"
#include "tg/forms.hpp"
#include "tg/totient.hpp"

#include <map>
#include <optional>
#include <vector>

namespace tg::constructions {

struct Lemma31Witness {
    Natural b;
    // one set per induction stage, sizes 2..k, each strictly increasing
    std::vector<std::vector<Natural>> stages;
    // per inductive step: M' (least multiple of lcm{n_j - n_i} with
    // b*M' > n_k) and K = lcm(M', bM' - n_1, ..., bM' - n_k)
    std::vector<Natural> M_values;
    std::vector<Natural> K_values;

    const std::vector<Natural>& final_set() const { return stages.back(); }
};

// Builds {n_1 < ... < n_k} with b | n_j/(n_j - n_i) for all i < j.
// Base {2b-1, 2b}; each step maps the set to {Kb - bM' + n_1, ...,
// Kb - bM' + n_k, Kb}. Divisibility is asserted at every stage.
Lemma31Witness lemma31_construct(const Natural& b, unsigned k);

// Checks b | n_j/(n_j - n_i) for all pairs (exact division first).
bool divisibility_property_holds(const std::vector<Natural>& set, const Natural& b);

// The derived form collection in the auxiliary variable h: for each pair
// i < j, with M = lcm of all differences and d = n_j - n_i, the two forms
//   ell*(n_i + h*b*M)/d + 1   and   ell*(n_j + h*b*M)/d + 1.
// k(k-1) forms for a k-set (kept as a collection; arithmetic-progression
// inputs can repeat a form). If b is omitted it defaults to the gcd of all
// quotients n_j/d, the largest value satisfying the divisibility property.
forms::FormSystem heuristic_forms(const std::vector<Natural>& n_set, const Natural& ell,
                                  std::optional<Natural> b = std::nullopt);

// All sets 1 < m_1 < ... < m_k <= bound such that for every pair i < j both
// ell*m_i/(m_j - m_i) and ell*m_j/(m_j - m_i) are integers in the totient
// image. Lexicographic order.
std::vector<std::vector<Natural>> dhlk_set_search(unsigned k, const Natural& ell,
                                                  const Natural& bound);

// Pair-dependent variant: verifies the quotient memberships for a given
// matrix ell[i][j] (upper triangle used). Verification only, no search.
bool dhlk_verify_matrix(const std::vector<Natural>& m_set,
                        const std::vector<std::vector<Natural>>& ell_matrix);

struct ApWitness {
    Natural D;
    Natural a;        // target residue, 4 | a
    Natural v1, v2;   // residues mod D, both coprime to D
    enum class Branch { minus, plus } branch = Branch::minus;

    // minus: (v1-1)(v2-1) ≡ a (mod D); plus: (v1+1)(v2-1) ≡ a (mod D)
    bool congruence_holds() const;
};

// Solves (v1∓1)(v2-1) ≡ a (mod D) with v1, v2 coprime to D, prime power by
// prime power, reconciling branches through v1 -> -v1 and combining by CRT.
// Requires 4 | a. Output invariants are asserted before returning.
ApWitness ap_lemma_solve(const Natural& D, const Natural& a);

// v ≡ -v1 (mod D), v > 0 on the minus branch; v ≡ v1 (mod D), v < -1 on the
// plus branch; minimal |v| under the sign constraint.
Integer ap_choose_v(const Natural& D, const Natural& a, const ApWitness& witness);

struct ApModulus {
    Natural d;
    Natural D;        // = d * prod_{p <= P} p^gamma, P = largest prime of d
    unsigned gamma = 0;
    // j -> x with phi(x) = D^j, each entry verified exactly, j = 1..49
    std::map<unsigned, Natural> preimage_table;

    arith::Factorization D_factorization;
    arith::Factorization beta_factorization;  // prod_{p|D}(p-1) = prod p^beta(p)
};

constexpr unsigned kApTableDepth = 49;

// Builds D = d * prod_{p <= P} p^gamma with gamma = max(1, max beta(p)), so
// that d | D and D^j has an explicit phi-preimage for every j = 1..49.
ApModulus ap_modulus_build(const Natural& d);

}  // namespace tg::constructions
