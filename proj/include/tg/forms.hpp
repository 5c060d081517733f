#pragma once

// Affine-linear form systems a*x + b and the admissibility decision
// procedure. A system is admissible when no prime covers every residue
// class; the report carries per-prime witness residues so the verdict can
// be audited without re-running the search.

#include "tg/arith.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tg::forms {

struct LinearForm {
    Natural a;   // coefficient, >= 1
    Integer b;   // offset, any sign

    Integer eval(const Integer& x) const { return a * x + b; }
    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

struct FormSystem {
    std::vector<LinearForm> forms;

    std::size_t size() const { return forms.size(); }
};

FormSystem monic_system(const std::vector<Natural>& offsets);

// The system {n + o*scale : o in offsets}; offsets must be distinct.
FormSystem shifted_monic_system(const std::vector<Natural>& offsets, const Natural& scale);

struct AdmissibilityReport {
    bool admissible = false;
    // prime -> witness residue x with p not dividing prod(a_i x + b_i)
    std::map<Natural, Natural> witnesses;
    std::optional<Natural> obstruction;   // smallest prime covering all residues
    std::vector<Natural> checked_primes;  // = {p <= k} U {p | gcd(a_i, b_i)}
    std::string reduction_note;           // why no other prime needs checking
};

// Decides admissibility. Only primes p <= k and primes dividing some
// gcd(a_i, b_i) can obstruct: any other p leaves at most k < p residues
// excluded and never kills a constant form. Those finitely many primes are
// settled by brute residue scan.
AdmissibilityReport is_admissible(const FormSystem& system);

// Verifies a single witness residue: no form vanishes mod p at x.
bool witness_holds(const FormSystem& system, const Natural& p, const Natural& x);

// Minimal h_k - h_1 over admissible monic tuples {n+h_1, ..., n+h_k} with
// offsets in [0, search_bound]. Exhaustive (pruned DFS over residue
// classes); k is limited to 2..8. Throws if nothing admissible fits in the
// bound.
Natural narrowest_admissible_width(unsigned k, const Natural& search_bound);

}  // namespace tg::forms
