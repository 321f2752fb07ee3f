#include "brokenstick/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace brokenstick {

namespace {

struct WorkerTally {
    std::uint64_t feasible = 0;
    std::vector<std::uint64_t> per_k;  // index k-1
    bool range_violation = false;
};

void run_block(int n, std::uint64_t block_trials, std::uint64_t seed, WorkerTally& tally) {
    Rng rng(seed);
    tally.per_k.assign(static_cast<std::size_t>(n - 1), 0);

    std::vector<double> draws(static_cast<std::size_t>(n));
    for (std::uint64_t t = 0; t < block_trials; ++t) {
        for (auto& d : draws) d = next_unit_double(rng);
        std::sort(draws.begin(), draws.end());

        // max piece < 1/2 without materializing the pieces: first point,
        // gaps, and the tail piece 1 - last point.
        double max_piece = draws.front();
        for (std::size_t i = 1; i < draws.size(); ++i)
            max_piece = std::max(max_piece, draws[i] - draws[i - 1]);
        max_piece = std::max(max_piece, 1.0 - draws.back());

        if (max_piece < 0.5) {
            ++tally.feasible;
            const auto k = static_cast<std::size_t>(
                std::lower_bound(draws.begin(), draws.end(), 0.5) - draws.begin());
            if (k < 1 || k >= static_cast<std::size_t>(n)) {
                tally.range_violation = true;
                return;
            }
            ++tally.per_k[k - 1];
        }
    }
}

}  // namespace

std::uint64_t worker_seed(std::uint64_t seed, unsigned worker) {
    std::uint64_t z = seed + (static_cast<std::uint64_t>(worker) + 1) * 0x9E3779B97F4A7C15ULL;
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

double next_unit_double(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

BreakSample make_break_sample(std::vector<double> draws) {
    std::sort(draws.begin(), draws.end());

    BreakSample sample;
    sample.piece_lengths.reserve(draws.size() + 1);
    sample.piece_lengths.push_back(draws.front());
    for (std::size_t i = 1; i < draws.size(); ++i)
        sample.piece_lengths.push_back(draws[i] - draws[i - 1]);
    sample.piece_lengths.push_back(1.0 - draws.back());
    sample.sorted_points = std::move(draws);
    return sample;
}

BreakSample sample_breaks(int n, Rng& rng) {
    if (n < 2) throw std::invalid_argument("n must satisfy n >= 2");
    std::vector<double> draws(static_cast<std::size_t>(n));
    for (auto& d : draws) d = next_unit_double(rng);
    return make_break_sample(std::move(draws));
}

bool polygon_feasible(std::span<const double> piece_lengths) {
    double max_piece = 0.0;
    for (double piece : piece_lengths) max_piece = std::max(max_piece, piece);
    return max_piece < 0.5;
}

int count_below_half(std::span<const double> sorted_points) {
    const auto it = std::lower_bound(sorted_points.begin(), sorted_points.end(), 0.5);
    return static_cast<int>(it - sorted_points.begin());
}

bool ordered_constraints_feasible(std::span<const double> sorted_points) {
    if (sorted_points.empty()) return false;
    if (!(sorted_points.front() < 0.5)) return false;
    for (std::size_t i = 1; i < sorted_points.size(); ++i)
        if (!(sorted_points[i] - sorted_points[i - 1] < 0.5)) return false;
    return sorted_points.back() > 0.5;
}

McReport run_mc(const McConfig& config) {
    if (config.n < 2) throw std::invalid_argument("n must satisfy n >= 2");
    if (config.trials < 1) throw std::invalid_argument("trials must satisfy trials >= 1");
    if (config.workers < 1) throw std::invalid_argument("workers must satisfy workers >= 1");
    if (config.workers > config.trials)
        throw std::invalid_argument("workers must satisfy workers <= trials");

    const unsigned workers = config.workers;
    std::vector<WorkerTally> tallies(workers);

    // Contiguous blocks: the first trials % workers blocks take one extra.
    const std::uint64_t base = config.trials / workers;
    const std::uint64_t extra = config.trials % workers;

    auto block_size = [&](unsigned w) { return base + (w < extra ? 1 : 0); };

    if (workers == 1) {
        run_block(config.n, config.trials, worker_seed(config.seed, 0), tallies[0]);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back(run_block, config.n, block_size(w),
                                 worker_seed(config.seed, w), std::ref(tallies[w]));
        }
        for (auto& t : threads) t.join();
    }

    McReport report;
    report.config = config;
    report.per_k_counts.assign(static_cast<std::size_t>(config.n - 1), 0);
    for (const auto& tally : tallies) {
        if (tally.range_violation)
            throw std::logic_error("feasible trial with k outside 1 <= k < n");
        report.feasible_count += tally.feasible;
        for (std::size_t i = 0; i < tally.per_k.size(); ++i)
            report.per_k_counts[i] += tally.per_k[i];
    }

    const double p = static_cast<double>(report.feasible_count) /
                     static_cast<double>(config.trials);
    report.estimate = p;
    report.standard_error = std::sqrt(p * (1.0 - p) / static_cast<double>(config.trials));
    return report;
}

}  // namespace brokenstick
