#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace brokenstick {

/// Seed used by the CLI when none is given. Changing it invalidates every
/// recorded tolerance check, so treat it as part of the output contract.
inline constexpr std::uint64_t kDefaultSeed = 42;

/// The trial stream is pinned for reproducibility:
///   - generator: std::mt19937_64 (Mersenne Twister, 64-bit, as specified by
///     the C++ standard),
///   - unit doubles: top 53 bits of each output word, scaled by 2^-53,
///   - worker substreams: worker w is seeded with
///     splitmix64(seed + (w+1) * 0x9E3779B97F4A7C15).
/// Reports are byte-reproducible for a fixed (n, trials, seed, workers).
using Rng = std::mt19937_64;

struct McConfig {
    int n = 2;
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = kDefaultSeed;
    unsigned workers = 1;
};

/// One trial: the sorted break points and the n+1 piece lengths they induce,
/// [0,X_1], [X_1,X_2], ..., [X_n,1].
struct BreakSample {
    std::vector<double> sorted_points;
    std::vector<double> piece_lengths;
};

struct McReport {
    McConfig config;
    std::uint64_t feasible_count = 0;
    /// per_k_counts[k-1] = feasible trials with exactly k points below 1/2,
    /// k = 1 .. n-1.
    std::vector<std::uint64_t> per_k_counts;
    double estimate = 0.0;
    double standard_error = 0.0;
};

/// splitmix64 mix of (seed, worker); documented above.
std::uint64_t worker_seed(std::uint64_t seed, unsigned worker);

/// Next double in [0, 1) from the pinned 53-bit mapping.
double next_unit_double(Rng& rng);

/// Sorts the draws and derives the piece lengths.
BreakSample make_break_sample(std::vector<double> draws);

/// n independent uniform draws from rng, sorted, with piece lengths.
BreakSample sample_breaks(int n, Rng& rng);

/// True iff every piece is strictly shorter than the sum of the others.
/// With total length 1 this is max(piece) < 1/2; order-independent.
bool polygon_feasible(std::span<const double> piece_lengths);

/// Number of points strictly below 1/2. Points must be sorted ascending.
int count_below_half(std::span<const double> sorted_points);

/// The same feasibility event stated on the sorted points instead of the
/// pieces: X_1 < 1/2, every gap X_i - X_{i-1} < 1/2, and X_n > 1/2.
bool ordered_constraints_feasible(std::span<const double> sorted_points);

/// Runs config.trials trials split into contiguous blocks, one per worker,
/// each on its own substream; merges per-worker tallies in worker order.
/// The result depends only on (n, trials, seed, workers), not on scheduling.
/// Throws std::invalid_argument on invalid config before any trial runs and
/// std::logic_error if a feasible trial ever falls outside 1 <= k < n.
McReport run_mc(const McConfig& config);

}  // namespace brokenstick
