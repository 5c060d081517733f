#include "tg/cli.hpp"

#include "tg/arith.hpp"
#include "tg/constructions.hpp"
#include "tg/forms.hpp"
#include "tg/json_io.hpp"
#include "tg/paperverify.hpp"
#include "tg/totient.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <sstream>

namespace tg::cli {

namespace {

using json_io::json;
using paperverify::VerificationReport;

Natural parse_natural(const std::string& s) {
    try {
        Natural n(s);
        if (n < 0) throw Error("value must be non-negative: " + s);
        return n;
    } catch (const std::invalid_argument&) {
        throw Error("not a valid integer: " + s);
    }
}

Integer parse_integer(const std::string& s) {
    try {
        return Integer(s);
    } catch (const std::invalid_argument&) {
        throw Error("not a valid integer: " + s);
    }
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

void print_report_human(std::ostream& out, const VerificationReport& r) {
    out << (r.passed ? (r.inconclusive ? "[INCONCLUSIVE] " : "[PASS] ") : "[FAIL] ")
        << r.claim_id << " (probabilistic steps: " << r.probabilistic_steps << ")\n";
    for (const auto& n : r.notes) out << "    note: " << n << "\n";
    for (const auto& [k, v] : r.values) out << "    " << k << " = " << v.get_str() << "\n";
}

int report_exit_code(const VerificationReport& r) {
    if (!r.passed) return kExitVerificationFailed;
    if (r.inconclusive) return kExitInconclusive;
    return kExitOk;
}

struct ClaimRunner {
    const CliConfig& cfg;

    VerificationReport run_claim(const std::string& id) const {
        if (id == "thm1") return paperverify::verify_theorem1();
        if (id == "thm2") return paperverify::verify_theorem2_scaffold();
        if (id == "dhl3") return paperverify::verify_dhl3();
        if (id == "dhl4") return paperverify::verify_dhl4();
        if (id == "dhl5") return paperverify::verify_dhl5();
        if (id == "dhl6") return paperverify::verify_dhl6();
        if (id == "remark28") return paperverify::verify_remark28(cfg.prp_rounds);
        if (id == "ap-instance") return paperverify::verify_ap_instance();
        throw Error("unknown claim id: " + id +
                    " (expected thm1, thm2, dhl3, dhl4, dhl5, dhl6, remark28, ap-instance, all)");
    }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"totgaps: totient image membership, admissible form systems, divisibility "
                 "constructions and claim-by-claim verification"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string format = "human";
    app.add_option("--format", format, "output format: human or json")
        ->check(CLI::IsMember({"human", "json"}))
        ->capture_default_str();
    app.add_option("--prp-rounds", cfg.prp_rounds,
                   "strong-probable-prime rounds above 2^64")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    unsigned long long budget = cfg.work_budget;
    app.add_option("--budget", budget, "factorization work budget (rho iterations per cofactor)")
        ->capture_default_str();
    unsigned long long seed = 0;
    auto* seed_opt =
        app.add_option("--seed", seed, "seed for randomized property subcommands");

    std::function<int()> action;

    // ---- phi N ----
    auto* c_phi = app.add_subcommand("phi", "Euler's totient of N");
    static std::string phi_n;
    c_phi->add_option("N", phi_n, "argument")->required();
    c_phi->callback([&] {
        action = [&]() {
            Natural n = parse_natural(phi_n);
            Natural v = totient::phi(n, cfg.work_budget, cfg.prp_rounds);
            if (cfg.output_format == Format::json) {
                json j;
                j["n"] = json_io::dec(n);
                j["phi"] = json_io::dec(v);
                print_json(out, j);
            } else {
                out << v.get_str() << "\n";
            }
            return kExitOk;
        };
    });

    // ---- inv-phi M [--cap C] ----
    auto* c_inv = app.add_subcommand("inv-phi", "complete solution set of phi(x) = M");
    static std::string inv_m, inv_cap;
    c_inv->add_option("M", inv_m, "target")->required();
    c_inv->add_option("--cap", inv_cap, "stop after this many solutions");
    c_inv->callback([&] {
        action = [&]() {
            Natural m = parse_natural(inv_m);
            std::optional<Natural> cap;
            if (!inv_cap.empty()) cap = parse_natural(inv_cap);
            totient::InversePhiOptions opts;
            opts.prp_rounds = cfg.prp_rounds;
            opts.rho_budget = cfg.work_budget;
            auto r = totient::inverse_phi(m, cap, opts);
            if (cfg.output_format == Format::json) {
                print_json(out, json_io::to_json(r));
            } else {
                out << (r.truncated ? "truncated solution list" : "complete solution set")
                    << " for phi(x) = " << m.get_str() << " (" << r.preimages.size()
                    << " solutions)\n";
                for (const auto& x : r.preimages) out << x.get_str() << "\n";
                if (r.preimages.empty() && !r.truncated)
                    out << "(none: " << m.get_str() << " is a nontotient)\n";
            }
            return kExitOk;
        };
    });

    // ---- is-totient M ----
    auto* c_ist = app.add_subcommand("is-totient", "does phi(x) = M have a solution?");
    static std::string ist_m;
    c_ist->add_option("M", ist_m, "target")->required();
    c_ist->callback([&] {
        action = [&]() {
            Natural m = parse_natural(ist_m);
            totient::InversePhiOptions opts;
            opts.prp_rounds = cfg.prp_rounds;
            opts.rho_budget = cfg.work_budget;
            auto r = totient::inverse_phi(m, Natural(1), opts);
            if (cfg.output_format == Format::json) {
                json j;
                j["m"] = json_io::dec(m);
                j["is_totient"] = !r.empty();
                if (!r.empty()) j["preimage"] = json_io::dec(r.preimages.front());
                j["probable_prime_checks"] = r.probable_prime_checks;
                print_json(out, j);
            } else {
                if (r.empty())
                    out << "false\n";
                else
                    out << "true (preimage " << r.preimages.front().get_str() << ")\n";
            }
            return kExitOk;
        };
    });

    // ---- admissible FORMS ----
    auto* c_adm = app.add_subcommand("admissible", "admissibility of a form system");
    static std::string adm_forms;
    c_adm->add_option("FORMS", adm_forms, "JSON array of [a, b] pairs, e.g. '[[1,0],[1,2]]'")
        ->required();
    c_adm->callback([&] {
        action = [&]() {
            json parsed;
            try {
                parsed = json::parse(adm_forms);
            } catch (const json::parse_error& e) {
                throw Error(std::string("bad form JSON: ") + e.what());
            }
            auto sys = json_io::form_system_from_json(parsed);
            auto rep = forms::is_admissible(sys);
            if (cfg.output_format == Format::json) {
                print_json(out, json_io::to_json(rep));
            } else {
                out << (rep.admissible ? "admissible" : "inadmissible") << "\n";
                if (rep.obstruction)
                    out << "obstruction prime: " << rep.obstruction->get_str() << "\n";
                for (const auto& [p, x] : rep.witnesses)
                    out << "  p=" << p.get_str() << ": witness n=" << x.get_str() << "\n";
            }
            return kExitOk;
        };
    });

    // ---- narrowest K [--bound B] ----
    auto* c_nar = app.add_subcommand("narrowest", "minimal width of an admissible monic K-tuple");
    static unsigned nar_k = 2;
    static std::string nar_bound = "100";
    c_nar->add_option("K", nar_k, "tuple size (2..8)")->required();
    c_nar->add_option("--bound", nar_bound, "offset search bound")->capture_default_str();
    c_nar->callback([&] {
        action = [&]() {
            Natural w = forms::narrowest_admissible_width(nar_k, parse_natural(nar_bound));
            if (cfg.output_format == Format::json) {
                json j;
                j["k"] = nar_k;
                j["width"] = json_io::dec(w);
                print_json(out, j);
            } else {
                out << w.get_str() << "\n";
            }
            return kExitOk;
        };
    });

    // ---- lemma31 B K ----
    auto* c_l31 = app.add_subcommand("lemma31",
                                     "set {n_1 < ... < n_K} with B | n_j/(n_j - n_i)");
    static std::string l31_b;
    static unsigned l31_k = 2;
    c_l31->add_option("B", l31_b, "divisor")->required();
    c_l31->add_option("K", l31_k, "set size")->required();
    c_l31->callback([&] {
        action = [&]() {
            auto w = constructions::lemma31_construct(parse_natural(l31_b), l31_k);
            if (cfg.output_format == Format::json) {
                print_json(out, json_io::to_json(w));
            } else {
                out << "final set:";
                for (const auto& n : w.final_set()) out << " " << n.get_str();
                out << "\n";
                for (std::size_t s = 0; s + 1 < w.stages.size(); ++s)
                    out << "stage " << s + 2 << " -> " << s + 3
                        << ": M' = " << w.M_values[s].get_str()
                        << ", K = " << w.K_values[s].get_str() << "\n";
            }
            return kExitOk;
        };
    });

    // ---- dhlk-search K L BOUND ----
    auto* c_dhlk = app.add_subcommand(
        "dhlk-search", "sets 1 < m_1 < ... < m_K <= BOUND with L*m/(m_j - m_i) all totients");
    static unsigned dk_k = 2;
    static std::string dk_l, dk_bound;
    c_dhlk->add_option("K", dk_k, "set size")->required();
    c_dhlk->add_option("L", dk_l, "scale")->required();
    c_dhlk->add_option("BOUND", dk_bound, "upper bound for set entries")->required();
    c_dhlk->callback([&] {
        action = [&]() {
            auto sets =
                constructions::dhlk_set_search(dk_k, parse_natural(dk_l), parse_natural(dk_bound));
            if (cfg.output_format == Format::json) {
                json arr = json::array();
                for (const auto& s : sets) {
                    json one = json::array();
                    for (const auto& m : s) one.push_back(json_io::dec(m));
                    arr.push_back(one);
                }
                print_json(out, arr);
            } else {
                for (const auto& s : sets) {
                    out << "{";
                    for (std::size_t i = 0; i < s.size(); ++i)
                        out << (i ? ", " : "") << s[i].get_str();
                    out << "}\n";
                }
                out << sets.size() << " set(s)\n";
            }
            return kExitOk;
        };
    });

    // ---- ap-solve D A ----
    auto* c_aps = app.add_subcommand("ap-solve",
                                     "witness (v1, v2) with (v1∓1)(v2-1) ≡ A (mod D)");
    static std::string aps_d, aps_a;
    c_aps->add_option("D", aps_d, "modulus")->required();
    c_aps->add_option("A", aps_a, "target residue (4 | A)")->required();
    c_aps->callback([&] {
        action = [&]() {
            auto w = constructions::ap_lemma_solve(parse_natural(aps_d), parse_natural(aps_a));
            if (cfg.output_format == Format::json) {
                print_json(out, json_io::to_json(w));
            } else {
                out << "v1 = " << w.v1.get_str() << ", v2 = " << w.v2.get_str() << ", branch = "
                    << (w.branch == constructions::ApWitness::Branch::minus ? "minus" : "plus")
                    << "\n";
            }
            return kExitOk;
        };
    });

    // ---- ap-modulus D ----
    auto* c_apm = app.add_subcommand(
        "ap-modulus", "modulus D with d | D and phi-preimages for D^1..D^49");
    static std::string apm_d;
    c_apm->add_option("D", apm_d, "progression modulus d >= 2")->required();
    c_apm->callback([&] {
        action = [&]() {
            auto m = constructions::ap_modulus_build(parse_natural(apm_d));
            if (cfg.output_format == Format::json) {
                print_json(out, json_io::to_json(m));
            } else {
                out << "D = " << m.D.get_str() << " (gamma = " << m.gamma << ")\n";
                out << "preimage of D^1: " << m.preimage_table.at(1).get_str() << "\n";
                out << "preimage of D^49: " << m.preimage_table.at(49).get_str() << "\n";
            }
            return kExitOk;
        };
    });

    // ---- ap-instance D A XBOUND ----
    auto* c_api = app.add_subcommand("ap-instance",
                                     "concrete prime instance of the progression pipeline");
    static std::string api_d, api_a, api_x;
    c_api->add_option("D", api_d, "progression modulus (4 | D)")->required();
    c_api->add_option("A", api_a, "target residue (4 | A)")->required();
    c_api->add_option("XBOUND", api_x, "search bound for x")->required();
    c_api->callback([&] {
        action = [&]() {
            auto rep = paperverify::verify_ap_instance(
                parse_natural(api_d), parse_natural(api_a), parse_natural(api_x), cfg.prp_rounds);
            if (cfg.output_format == Format::json)
                print_json(out, json_io::to_json(rep));
            else
                print_report_human(out, rep);
            return report_exit_code(rep);
        };
    });

    // ---- verify CLAIM|all ----
    auto* c_ver = app.add_subcommand("verify", "run one claim verification, or all of them");
    static std::string ver_claim;
    c_ver->add_option("CLAIM", ver_claim,
                      "thm1, thm2, dhl3, dhl4, dhl5, dhl6, remark28, ap-instance or all")
        ->required();
    c_ver->callback([&] {
        action = [&]() {
            ClaimRunner runner{cfg};
            if (ver_claim != "all") {
                auto rep = runner.run_claim(ver_claim);
                if (cfg.output_format == Format::json)
                    print_json(out, json_io::to_json(rep));
                else
                    print_report_human(out, rep);
                return report_exit_code(rep);
            }
            // the probabilistic component (remark28) deliberately runs last
            const std::vector<std::string> order = {"thm1", "thm2", "dhl3", "dhl4",
                                                    "dhl5", "dhl6", "ap-instance", "remark28"};
            std::vector<VerificationReport> reports;
            std::uint64_t cumulative = 0;
            bool all_passed = true, any_inconclusive = false;
            for (const auto& id : order) {
                reports.push_back(runner.run_claim(id));
                const auto& r = reports.back();
                cumulative += r.probabilistic_steps;
                all_passed = all_passed && r.passed;
                any_inconclusive = any_inconclusive || r.inconclusive;
                if (cfg.output_format == Format::human) print_report_human(out, r);
            }
            if (cfg.output_format == Format::json) {
                json j;
                json arr = json::array();
                for (const auto& r : reports) arr.push_back(json_io::to_json(r));
                j["reports"] = arr;
                j["all_passed"] = all_passed;
                j["any_inconclusive"] = any_inconclusive;
                j["cumulative_probabilistic_steps"] = std::to_string(cumulative);
                print_json(out, j);
            } else {
                out << (all_passed ? "all claims passed" : "SOME CLAIMS FAILED")
                    << "; cumulative probabilistic steps: " << cumulative << "\n";
            }
            if (!all_passed) return kExitVerificationFailed;
            if (any_inconclusive) return kExitInconclusive;
            return kExitOk;
        };
    });

    // CLI11 wants mutable argc/argv
    std::vector<std::string> argv_store;
    argv_store.push_back("totgaps");
    for (const auto& a : args) argv_store.push_back(a);
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    cfg.output_format = format == "json" ? Format::json : Format::human;
    cfg.work_budget = budget;
    if (*seed_opt) cfg.seed = seed;

    try {
        return action ? action() : kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace tg::cli
