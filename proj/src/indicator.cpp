#include "mmx/indicator.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "mmx/detail.hpp"

namespace mmx {
namespace {

// Work threshold (samples times neighbor reach) below which threading
// overhead beats the kernel itself.
constexpr std::size_t kParallelGrain = std::size_t{1} << 15;

bool pick_parallel(std::size_t n, int m, Exec exec) {
    switch (exec) {
        case Exec::Serial:
            return false;
        case Exec::Parallel:
            return true;
        case Exec::Auto:
        default:
            return n * static_cast<std::size_t>(2 * m) >= kParallelGrain;
    }
}

// Fills the directional neighbor sums for every sample. Each index is
// independent, and each sum runs in fixed k order, so the serial and
// parallel paths produce identical bits.
void compute_q(const std::vector<double>& values, int m, double sigma, bool par,
               std::vector<double>& qn, std::vector<double>& qp) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(values.size());
    (void)par;
#pragma omp parallel for schedule(static) if (par)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const std::size_t u = static_cast<std::size_t>(i);
        qn[u] = detail::q_side(values, values.size(), u, m, sigma, true);
        qp[u] = detail::q_side(values, values.size(), u, m, sigma, false);
    }
}

std::vector<double> log_weights_impl(const std::vector<double>& values, const IndicatorParams& p,
                                     Exec exec) {
    const std::size_t n = values.size();
    const double sigma = detail::direction_sign(p.direction == Direction::Up);
    std::vector<double> qn(n), qp(n);
    compute_q(values, p.m, sigma, pick_parallel(n, p.m, exec), qn, qp);

    std::vector<double> lw(n);
    lw[0] = 0.0;
    for (std::size_t i = 1; i < n; ++i)
        lw[i] = lw[i - 1] + detail::log_weight_step(qn[i - 1], qp[i - 1], qn[i], qp[i]);
    return lw;
}

}  // namespace

namespace detail {

std::vector<double> logsumexp_normalize(const std::vector<double>& log_weights) {
    const double peak = *std::max_element(log_weights.begin(), log_weights.end());
    std::vector<double> w(log_weights.size());
    double total = 0.0;
    for (std::size_t i = 0; i < log_weights.size(); ++i) {
        w[i] = std::exp(log_weights[i] - peak);
        total += w[i];
    }
    for (double& x : w) x /= total;
    return w;
}

}  // namespace detail

double relative_difference(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
        throw std::domain_error("relative difference needs positive finite inputs");
    return 2.0 * (a - b) / (a + b);
}

TunnelingWeights tunneling_weights(const PriceSeries& s, std::size_t index,
                                   const IndicatorParams& params) {
    validate(s);
    validate(params);
    if (index >= s.values.size())
        throw std::out_of_range("sample index " + std::to_string(index) +
                                " outside series of length " + std::to_string(s.values.size()));
    const double sigma = detail::direction_sign(params.direction == Direction::Up);
    return TunnelingWeights{
        detail::q_side(s.values, s.values.size(), index, params.m, sigma, true),
        detail::q_side(s.values, s.values.size(), index, params.m, sigma, false)};
}

TransitionProbabilities transition_probabilities(const TunnelingWeights& w) {
    const double total = w.q_next + w.q_prev;
    if (!(total > 0.0))
        throw std::invalid_argument("tunneling weights are degenerate: q_next + q_prev must be > 0");
    return TransitionProbabilities{w.q_next / total, w.q_prev / total};
}

LogWeightSeries accumulate_log_weights(const PriceSeries& s, const IndicatorParams& params,
                                       Exec exec) {
    validate(s);
    validate(params);
    return LogWeightSeries{log_weights_impl(s.values, params, exec)};
}

MiniMaxSeries minimax(const PriceSeries& s, const IndicatorParams& params, Exec exec) {
    validate(s);
    validate(params);
    const std::vector<double> lw = log_weights_impl(s.values, params, exec);
    return MiniMaxSeries{detail::logsumexp_normalize(lw), params.direction, params.m};
}

}  // namespace mmx
