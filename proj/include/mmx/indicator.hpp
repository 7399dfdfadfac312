#pragma once

#include <cstddef>
#include <vector>

#include "mmx/series.hpp"

namespace mmx {

/// Execution policy for the batch kernels. Auto parallelizes with OpenMP
/// once the work is large enough; Serial and Parallel force one path.
/// All three produce bitwise identical results.
enum class Exec { Auto, Serial, Parallel };

/// Directional neighbor sums at one sample: q_next looks toward newer
/// samples, q_prev toward older ones. Edge sums may be empty (0).
struct TunnelingWeights {
    double q_next = 0.0;
    double q_prev = 0.0;
};

/// q_next/q_prev normalized into a complementary probability pair.
struct TransitionProbabilities {
    double p_next = 0.0;
    double p_prev = 0.0;
};

/// Unnormalized weights in log domain; log_weights[0] is always 0.
struct LogWeightSeries {
    std::vector<double> log_weights;
};

/// Normalized weight profile over a series: strictly positive entries
/// summing to 1, concentrated near local maxima (Up) or minima (Down).
struct MiniMaxSeries {
    std::vector<double> weights;
    Direction direction = Direction::Up;
    int m = 1;

    std::size_t size() const noexcept { return weights.size(); }
};

/**
 * 2(a-b)/(a+b): the scale-free difference fed to the neighbor sums.
 * Lies strictly inside (-2, 2) for positive finite inputs; throws
 * std::domain_error for anything else.
 */
double relative_difference(double a, double b);

/// Neighbor sums at 0-based sample `index`. Throws std::out_of_range for a
/// bad index, plus the usual series/params validation errors.
TunnelingWeights tunneling_weights(const PriceSeries& s, std::size_t index, const IndicatorParams& params);

/// Normalizes a TunnelingWeights pair; requires q_next + q_prev > 0.
TransitionProbabilities transition_probabilities(const TunnelingWeights& w);

/**
 * Accumulates the weight recurrence in log domain:
 *   log_weights[0] = 0
 *   log_weights[i] = log_weights[i-1] + ln p_next(i-1) - ln p_prev(i)
 * Keeping the chain in logs sidesteps overflow when the raw products span
 * hundreds of orders of magnitude.
 */
LogWeightSeries accumulate_log_weights(const PriceSeries& s, const IndicatorParams& params,
                                       Exec exec = Exec::Auto);

/**
 * The moving mini-max: exp-normalized log weights. Weights are strictly
 * positive, sum to 1, and are invariant under rescaling every price by a
 * common positive factor. Direction::Down on s equals Direction::Up on the
 * elementwise reciprocal of s.
 */
MiniMaxSeries minimax(const PriceSeries& s, const IndicatorParams& params, Exec exec = Exec::Auto);

}  // namespace mmx
