#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace carry {

enum class CheckStatus { Pass, Fail, Skip };

std::string to_string(CheckStatus status);

struct CheckResult {
    std::string name;
    /// Identity tag the check exercises, e.g. "stirling-lagrange".
    std::string anchor;
    /// Parameter description, e.g. "k=4 N=2".
    std::string params;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

struct VerifyOptions {
    int k_max = 5;
    std::vector<int> bases{2, 3};
    long length_max = 7;
    std::uint64_t budget = 10'000'000;
    /// Perturbs the Stirling weights fed to the Stirling–Lagrange check.
    bool corrupt_stirling = false;
    unsigned threads = 0;  // 0: hardware concurrency
};

/// Runs every identity check over the (k, N) grid plus the grid-independent
/// checks. Results are ordered deterministically regardless of threading.
std::vector<CheckResult> run_verify(const VerifyOptions& options);

/// True when no check failed (skips do not count as failures).
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace carry
