#include "mmx/signals.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace mmx {
namespace {

int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

void check_pair(const MiniMaxSeries& a, const MiniMaxSeries& b) {
    if (a.weights.empty() || a.weights.size() != b.weights.size())
        throw std::invalid_argument("profile lengths differ: " + std::to_string(a.weights.size()) +
                                    " vs " + std::to_string(b.weights.size()));
}

}  // namespace

PriceSeries simple_moving_average(const PriceSeries& s, std::size_t period) {
    validate(s);
    if (period < 1) throw std::invalid_argument("moving-average period must be >= 1, got 0");
    const std::size_t n = s.values.size();
    if (period > n)
        throw std::invalid_argument("moving-average period " + std::to_string(period) +
                                    " exceeds series length " + std::to_string(n));
    PriceSeries out;
    out.values.resize(n - period + 1);
    // Fresh per-window sums; signal inputs are short enough that the n*p
    // cost is irrelevant and it avoids running-sum cancellation.
    for (std::size_t j = 0; j + period <= n; ++j) {
        double acc = 0.0;
        for (std::size_t k = 0; k < period; ++k) acc += s.values[j + k];
        out.values[j] = acc / static_cast<double>(period);
    }
    if (s.has_timestamps()) {
        out.timestamps.resize(out.values.size());
        for (std::size_t j = 0; j < out.values.size(); ++j)
            out.timestamps[j] = s.timestamps[j + period - 1];
    }
    return out;
}

std::vector<CrossingEvent> detect_crossings(const MiniMaxSeries& a, const MiniMaxSeries& b,
                                            CrossingKind kind) {
    check_pair(a, b);
    const Direction want = kind == CrossingKind::Resistance ? Direction::Up : Direction::Down;
    if (a.direction != want || b.direction != want)
        throw std::invalid_argument(kind == CrossingKind::Resistance
                                        ? "resistance crossings need two Up profiles"
                                        : "support crossings need two Down profiles");

    std::vector<CrossingEvent> events;
    const std::size_t n = a.weights.size();
    std::size_t prev = 0;
    int prev_sign = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a.weights[i] - b.weights[i];
        const int s = sign_of(d);
        if (s == 0) continue;
        if (prev_sign != 0 && s != prev_sign) {
            CrossingEvent e;
            e.kind = kind;
            e.sign = s > 0 ? CrossingSign::UpThrough : CrossingSign::DownThrough;
            if (i == prev + 1) {
                const double dp = a.weights[prev] - b.weights[prev];
                e.position = static_cast<double>(prev + 1) + dp / (dp - d);
            } else {
                // The difference sat exactly on zero in between; pin the
                // event to the first zero sample.
                e.position = static_cast<double>(prev + 2);
            }
            events.push_back(e);
        }
        prev = i;
        prev_sign = s;
    }
    return events;
}

std::vector<ExtremumPoint> extract_extrema(const MiniMaxSeries& mm, double min_prominence) {
    if (!(min_prominence >= 0.0) || !(min_prominence <= 1.0))
        throw std::invalid_argument("minimum prominence must lie in [0, 1]");
    const std::vector<double>& w = mm.weights;
    const std::size_t n = w.size();
    std::vector<ExtremumPoint> out;
    if (n < 3) return out;

    std::vector<std::size_t> maxima;
    for (std::size_t i = 1; i + 1 < n; ++i)
        if (w[i] > w[i - 1] && w[i] > w[i + 1]) maxima.push_back(i);

    const ExtremumKind kind = mm.direction == Direction::Up ? ExtremumKind::Peak
                                                            : ExtremumKind::Trough;
    for (std::size_t pi = 0; pi < maxima.size(); ++pi) {
        const std::size_t p = maxima[pi];
        const std::size_t lo = pi > 0 ? maxima[pi - 1] : 0;
        const std::size_t hi = pi + 1 < maxima.size() ? maxima[pi + 1] : n - 1;
        double left_min = w[p];
        for (std::size_t j = lo; j < p; ++j) left_min = std::min(left_min, w[j]);
        double right_min = w[p];
        for (std::size_t j = p + 1; j <= hi; ++j) right_min = std::min(right_min, w[j]);
        const double prominence = w[p] - std::max(left_min, right_min);
        if (prominence >= min_prominence) out.push_back(ExtremumPoint{p + 1, kind, w[p]});
    }
    return out;
}

SpindleConfig default_spindle_config(int m) {
    if (m < 1) throw std::invalid_argument("smoothing width m must be >= 1, got " + std::to_string(m));
    return SpindleConfig{0.5, 2 * static_cast<std::size_t>(m), 3};
}

std::vector<SpindleInterval> detect_spindle(const MiniMaxSeries& up, const MiniMaxSeries& down,
                                            const SpindleConfig& cfg) {
    check_pair(up, down);
    if (up.direction != Direction::Up || down.direction != Direction::Down)
        throw std::invalid_argument("spindle detection needs an Up profile and a Down profile");
    if (!(cfg.band >= 0.0) || !std::isfinite(cfg.band))
        throw std::invalid_argument("spindle band must be a finite non-negative number");
    if (cfg.min_len < 2) throw std::invalid_argument("spindle min_len must be >= 2");

    const std::size_t n = up.weights.size();
    const double band_abs = cfg.band / static_cast<double>(n);
    std::vector<SpindleInterval> out;

    std::size_t run_start = 0;
    std::size_t run_len = 0;
    std::size_t flips = 0;
    int last_sign = 0;
    auto flush = [&]() {
        if (run_len >= cfg.min_len && flips >= cfg.min_crossings)
            out.push_back(SpindleInterval{run_start + 1, run_start + run_len,
                                          static_cast<double>(flips) /
                                              static_cast<double>(run_len - 1)});
        run_len = 0;
        flips = 0;
        last_sign = 0;
    };
    for (std::size_t i = 0; i < n; ++i) {
        const double d = up.weights[i] - down.weights[i];
        if (std::fabs(d) <= band_abs) {
            if (run_len == 0) run_start = i;
            ++run_len;
            const int s = sign_of(d);
            if (s != 0) {
                if (last_sign != 0 && s != last_sign) ++flips;
                last_sign = s;
            }
        } else if (run_len > 0) {
            flush();
        }
    }
    if (run_len > 0) flush();
    return out;
}

std::vector<CrossingEvent> support_resistance_pipeline(const PriceSeries& s, int m,
                                                       std::size_t ma_period) {
    validate(s);
    const std::size_t n = s.values.size();
    if (ma_period < 1) throw std::invalid_argument("moving-average period must be >= 1, got 0");
    if (ma_period > n || n - ma_period + 1 < 2)
        throw std::invalid_argument("moving-average period " + std::to_string(ma_period) +
                                    " leaves fewer than 2 aligned samples");

    const PriceSeries smoothed = simple_moving_average(s, ma_period);
    const PriceSeries tail = subseries(s, ma_period - 1, n - ma_period + 1);

    std::vector<CrossingEvent> events;
    for (CrossingKind kind : {CrossingKind::Resistance, CrossingKind::Support}) {
        const Direction dir =
            kind == CrossingKind::Resistance ? Direction::Up : Direction::Down;
        const IndicatorParams params{m, dir};
        const MiniMaxSeries raw = minimax(tail, params);
        const MiniMaxSeries ma = minimax(smoothed, params);
        for (CrossingEvent e : detect_crossings(raw, ma, kind)) {
            e.position += static_cast<double>(ma_period - 1);
            events.push_back(e);
        }
    }
    std::stable_sort(events.begin(), events.end(),
                     [](const CrossingEvent& a, const CrossingEvent& b) {
                         return a.position < b.position;
                     });
    return events;
}

}  // namespace mmx
