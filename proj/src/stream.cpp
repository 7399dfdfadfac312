#include "mmx/stream.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "mmx/detail.hpp"

namespace mmx {

MiniMaxStream::MiniMaxStream(std::size_t window, IndicatorParams params)
    : window_(window),
      params_(params),
      sigma_(detail::direction_sign(params.direction == Direction::Up)) {
    validate(params_);
    if (window_ < 2)
        throw std::invalid_argument("stream window must cover at least 2 samples, got " +
                                    std::to_string(window_));
}

void MiniMaxStream::refresh_qn(std::size_t j) {
    qn_[j] = detail::q_side(prices_, prices_.size(), j, params_.m, sigma_, true);
    ++last_recomputes_;
    ++total_recomputes_;
}

void MiniMaxStream::refresh_qp(std::size_t j) {
    qp_[j] = detail::q_side(prices_, prices_.size(), j, params_.m, sigma_, false);
    ++last_recomputes_;
    ++total_recomputes_;
}

void MiniMaxStream::refresh_step(std::size_t i) {
    steps_[i] = detail::log_weight_step(qn_[i], qp_[i], qn_[i + 1], qp_[i + 1]);
}

void MiniMaxStream::push(double price) {
    if (!(price > 0.0) || !std::isfinite(price))
        throw std::domain_error("streamed price must be a positive finite number");
    last_recomputes_ = 0;
    const std::size_t m = static_cast<std::size_t>(params_.m);

    if (ready()) {
        prices_.pop_front();
        qn_.pop_front();
        qp_.pop_front();
        steps_.pop_front();
        prices_.push_back(price);
        qn_.push_back(0.0);
        qp_.push_back(0.0);
        steps_.push_back(0.0);
        const std::size_t n = prices_.size();

        // The evicted sample sat one step left of every survivor, so only
        // backward sums within reach of the old edge change; the appended
        // sample only enters forward sums within reach of the new edge.
        const std::size_t qp_hi = std::min(m - 1, n - 2);
        for (std::size_t j = 0; j <= qp_hi; ++j) refresh_qp(j);
        refresh_qp(n - 1);
        const std::size_t qn_lo = n - 1 > m ? n - 1 - m : 0;
        for (std::size_t j = qn_lo; j <= n - 1; ++j) refresh_qn(j);

        const std::size_t left_hi = std::min(m - 1, n - 2);
        const std::size_t right_lo = n - 2 > m ? n - 2 - m : 0;
        if (right_lo <= left_hi + 1) {
            for (std::size_t i = 0; i <= n - 2; ++i) refresh_step(i);
        } else {
            for (std::size_t i = 0; i <= left_hi; ++i) refresh_step(i);
            for (std::size_t i = right_lo; i <= n - 2; ++i) refresh_step(i);
        }
        return;
    }

    prices_.push_back(price);
    qn_.push_back(0.0);
    qp_.push_back(0.0);
    const std::size_t n = prices_.size();

    refresh_qp(n - 1);
    const std::size_t qn_lo = n - 1 > m ? n - 1 - m : 0;
    for (std::size_t j = qn_lo; j <= n - 1; ++j) refresh_qn(j);

    if (n >= 2) {
        steps_.push_back(0.0);
        const std::size_t step_lo = n - 2 > m ? n - 2 - m : 0;
        for (std::size_t i = step_lo; i <= n - 2; ++i) refresh_step(i);
    }
}

MiniMaxSeries MiniMaxStream::query() const {
    if (!ready())
        throw std::logic_error("stream holds " + std::to_string(prices_.size()) + " of " +
                               std::to_string(window_) + " samples; not warmed up yet");
    std::vector<double> lw(prices_.size());
    lw[0] = 0.0;
    for (std::size_t i = 0; i + 1 < prices_.size(); ++i) lw[i + 1] = lw[i] + steps_[i];
    return MiniMaxSeries{detail::logsumexp_normalize(lw), params_.direction, params_.m};
}

}  // namespace mmx
