#pragma once

// Command-line front end. Exit codes: 0 = all checks passed, 1 = a
// verification failed, 2 = usage or input error, 3 = inconclusive (instance
// searches only).

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tg::cli {

enum class Format { human, json };

struct CliConfig {
    Format output_format = Format::human;
    int prp_rounds = 64;
    unsigned long long work_budget = 10'000'000;
    std::optional<unsigned long long> seed;  // randomized property subcommands only
};

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tg::cli
