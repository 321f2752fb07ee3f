#pragma once

#include "brokenstick/exact.hpp"
#include "brokenstick/monte_carlo.hpp"

#include <cstdint>
#include <vector>

namespace brokenstick {

struct VerifyRow {
    int n = 0;
    Rational exact_final;
    double mc_estimate = 0.0;
    double mc_stderr = 0.0;
    bool symbolic_equals_closed = false;
    bool sum_rule_holds = false;
    bool mc_within_tolerance = false;

    bool all_checks_pass() const {
        return symbolic_equals_closed && sum_rule_holds && mc_within_tolerance;
    }
};

struct VerifyReport {
    int n_min = 0;
    int n_max = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    std::vector<VerifyRow> per_n;
    bool overall_pass = false;
};

/// Cross-validates every n in [n_min, n_max]:
///   - symbolic_equals_closed: both routes agree for every k, exactly;
///   - sum_rule_holds: n! * sum_k symbolic equals 1 - (n+1)/2^n, exactly;
///   - mc_within_tolerance: |estimate - exact| <= 4 * sqrt(p(1-p)/trials)
///     with p the exact probability.
/// Throws std::invalid_argument on an invalid range or Monte Carlo config.
VerifyReport run_verify(int n_min, int n_max, std::uint64_t trials,
                        std::uint64_t seed, unsigned workers);

}  // namespace brokenstick
