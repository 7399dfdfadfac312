#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>

#include "mmx/indicator.hpp"
#include "mmx/series.hpp"

namespace mmx {

/**
 * Incremental evaluator over a sliding window of the most recent prices.
 *
 * Per push only the cache entries whose neighborhoods actually changed are
 * recomputed: the q_prev sums within m of the evicted edge, the q_next sums
 * within m of the appended edge, and the log-weight steps touching either.
 * That caps the recomputed tunneling-weight entries at 2m + 2 per push
 * (a growing, not-yet-full buffer touches at most m + 2). Each entry is
 * recomputed as a fresh sum rather than patched, so query() reproduces the
 * batch minimax() of the buffered window bit for bit with no drift.
 *
 * query() renormalizes over the whole window, which is O(window) per call.
 */
class MiniMaxStream {
  public:
    MiniMaxStream(std::size_t window, IndicatorParams params);

    /// Accepts the next price. Throws std::domain_error unless it is a
    /// positive finite number.
    void push(double price);

    /// True once window() prices have been pushed.
    bool ready() const noexcept { return prices_.size() == window_; }

    /// Prices currently buffered (== window() once warmed up).
    std::size_t size() const noexcept { return prices_.size(); }

    std::size_t window() const noexcept { return window_; }
    const IndicatorParams& params() const noexcept { return params_; }

    /// Weight profile of the buffered window. Throws std::logic_error
    /// before warm-up completes.
    MiniMaxSeries query() const;

    /// Tunneling-weight entries recomputed by the most recent push.
    std::size_t last_push_q_recomputes() const noexcept { return last_recomputes_; }

    /// Running total over all pushes.
    std::uint64_t total_q_recomputes() const noexcept { return total_recomputes_; }

  private:
    void refresh_qn(std::size_t j);
    void refresh_qp(std::size_t j);
    void refresh_step(std::size_t i);

    std::size_t window_;
    IndicatorParams params_;
    double sigma_;
    std::deque<double> prices_;
    std::deque<double> qn_;
    std::deque<double> qp_;
    std::deque<double> steps_;  // steps_[i] joins samples i and i+1
    std::size_t last_recomputes_ = 0;
    std::uint64_t total_recomputes_ = 0;
};

}  // namespace mmx
