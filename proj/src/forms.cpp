#include "tg/forms.hpp"

#include <algorithm>
#include <set>

namespace tg::forms {

FormSystem monic_system(const std::vector<Natural>& offsets) {
    return shifted_monic_system(offsets, 1);
}

FormSystem shifted_monic_system(const std::vector<Natural>& offsets, const Natural& scale) {
    if (scale < 1) throw Error("shifted_monic_system: scale must be >= 1");
    std::set<Natural> seen(offsets.begin(), offsets.end());
    if (seen.size() != offsets.size())
        throw Error("shifted_monic_system: offsets must be distinct");
    FormSystem sys;
    for (const auto& o : offsets) sys.forms.push_back({1, o * scale});
    return sys;
}

bool witness_holds(const FormSystem& system, const Natural& p, const Natural& x) {
    for (const auto& f : system.forms)
        if (arith::mod_norm(f.eval(x), p) == 0) return false;
    return true;
}

AdmissibilityReport is_admissible(const FormSystem& system) {
    if (system.forms.empty()) throw Error("is_admissible: empty system");
    for (const auto& f : system.forms)
        if (f.a < 1) throw Error("is_admissible: coefficient must be >= 1");

    AdmissibilityReport report;
    const std::size_t k = system.size();

    // primes to check: p <= k plus any prime dividing some gcd(a_i, b_i)
    std::set<Natural> to_check;
    for (const auto& p : arith::primes_up_to(Natural(static_cast<unsigned long>(k))))
        to_check.insert(p);
    for (const auto& f : system.forms) {
        Natural g = arith::gcd(f.a, Natural(abs(f.b)));  // gcd(a, 0) = a
        if (g > 1)
            for (const auto& fac : arith::factorize(g).factors) to_check.insert(fac.prime);
    }
    report.checked_primes.assign(to_check.begin(), to_check.end());
    report.reduction_note =
        "primes p > " + std::to_string(k) +
        " dividing no gcd(a_i,b_i) exclude at most k < p residues and keep "
        "every constant form nonzero, so only the listed primes can obstruct";

    report.admissible = true;
    for (const auto& p : report.checked_primes) {
        // p | gcd(a_i, b_i) makes form i vanish at every residue; record the
        // obstruction without a scan (p can be arbitrarily large here)
        bool constant_zero = false;
        for (const auto& f : system.forms)
            if (mpz_divisible_p(f.a.get_mpz_t(), p.get_mpz_t()) &&
                mpz_divisible_p(f.b.get_mpz_t(), p.get_mpz_t())) {
                constant_zero = true;
                break;
            }
        if (constant_zero) {
            report.admissible = false;
            if (!report.obstruction) report.obstruction = p;
            continue;
        }

        bool found = false;
        for (Natural x = 0; x < p; ++x) {
            if (witness_holds(system, p, x)) {
                report.witnesses[p] = x;
                found = true;
                break;
            }
        }
        if (!found) {
            report.admissible = false;
            if (!report.obstruction) report.obstruction = p;
        }
    }
    return report;
}

namespace {

// DFS for an admissible monic tuple 0 = h_1 < ... < h_k = width. Tracks,
// for each prime p <= k, which residues the chosen offsets already cover;
// covering all p residues dooms every extension.
struct WidthSearch {
    unsigned k;
    unsigned width;
    std::vector<unsigned> small_primes;          // primes <= k
    std::vector<std::vector<unsigned>> counts;   // per prime: residue -> count
    std::vector<unsigned> offsets;

    bool add(unsigned h) {
        for (std::size_t i = 0; i < small_primes.size(); ++i) {
            unsigned p = small_primes[i];
            auto& cnt = counts[i];
            if (++cnt[h % p] == 1) {
                unsigned covered = 0;
                for (unsigned r = 0; r < p; ++r) covered += cnt[r] > 0;
                if (covered == p) {
                    // roll back before reporting failure
                    --cnt[h % p];
                    for (std::size_t j = 0; j < i; ++j) --counts[j][h % small_primes[j]];
                    return false;
                }
            }
        }
        offsets.push_back(h);
        return true;
    }

    void remove(unsigned h) {
        offsets.pop_back();
        for (std::size_t i = 0; i < small_primes.size(); ++i)
            --counts[i][h % small_primes[i]];
    }

    bool extend(unsigned chosen) {
        if (chosen == k) return true;
        unsigned remaining = k - chosen;
        unsigned last = offsets.back();
        // the final offset is pinned to `width`
        unsigned hi = (remaining == 1) ? width : width - (remaining - 1);
        unsigned lo = (remaining == 1) ? width : last + 1;
        for (unsigned h = lo; h <= hi; ++h) {
            if (!add(h)) continue;
            if (extend(chosen + 1)) return true;
            remove(h);
        }
        return false;
    }

    bool run() {
        offsets.clear();
        counts.assign(small_primes.size(), {});
        for (std::size_t i = 0; i < small_primes.size(); ++i)
            counts[i].assign(small_primes[i], 0);
        if (!add(0)) return false;
        return extend(1);
    }
};

}  // namespace

Natural narrowest_admissible_width(unsigned k, const Natural& search_bound) {
    if (k < 2 || k > 8)
        throw Error("narrowest_admissible_width: k must be in 2..8 (exhaustive search scale)");
    if (search_bound < 1 || !search_bound.fits_ulong_p())
        throw Error("narrowest_admissible_width: bad search bound");
    unsigned long bound = mpz_get_ui(search_bound.get_mpz_t());
    if (bound > 1'000'000) throw Error("narrowest_admissible_width: bound too large");

    WidthSearch s;
    s.k = k;
    for (auto p : arith::small_primes_up_to(k)) s.small_primes.push_back(static_cast<unsigned>(p));

    for (unsigned w = k - 1; w <= bound; ++w) {
        s.width = w;
        if (s.run()) {
            // defense in depth: the found tuple must pass the full checker
            std::vector<Natural> hs;
            for (unsigned h : s.offsets) hs.emplace_back(static_cast<unsigned long>(h));
            if (!is_admissible(monic_system(hs)).admissible)
                throw Error("narrowest_admissible_width: internal error, tuple fails recheck");
            return Natural(static_cast<unsigned long>(w));
        }
    }
    throw Error("narrowest_admissible_width: no admissible " + std::to_string(k) +
                "-tuple with width <= " + std::to_string(bound) +
                " (bound too small)");
}

}  // namespace tg::forms
