#include "brokenstick/verify.hpp"

#include <cmath>
#include <stdexcept>

namespace brokenstick {

VerifyReport run_verify(int n_min, int n_max, std::uint64_t trials,
                        std::uint64_t seed, unsigned workers) {
    if (n_min < 2 || n_min > n_max)
        throw std::invalid_argument("range must satisfy 2 <= n_min <= n_max");

    VerifyReport report;
    report.n_min = n_min;
    report.n_max = n_max;
    report.trials = trials;
    report.seed = seed;
    report.workers = workers;
    report.overall_pass = true;

    for (int n = n_min; n <= n_max; ++n) {
        const ExactTable table = exact_table(n);
        const Rational exact = polygon_probability(n);

        VerifyRow row;
        row.n = n;
        row.exact_final = exact;

        row.symbolic_equals_closed = true;
        for (const auto& entry : table.per_k)
            row.symbolic_equals_closed &= (entry.symbolic == entry.closed_form);

        row.sum_rule_holds = (table.final_probability == exact);

        const McReport mc = run_mc({n, trials, seed, workers});
        row.mc_estimate = mc.estimate;
        row.mc_stderr = mc.standard_error;

        const double p = exact.to_double();
        const double tolerance = 4.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
        row.mc_within_tolerance = std::abs(mc.estimate - p) <= tolerance;

        report.overall_pass &= row.all_checks_pass();
        report.per_n.push_back(std::move(row));
    }
    return report;
}

}  // namespace brokenstick
