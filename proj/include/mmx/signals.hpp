#pragma once

#include <cstddef>
#include <vector>

#include "mmx/indicator.hpp"
#include "mmx/series.hpp"

namespace mmx {

// Sample positions in the structs below are 1-based, matching the CLI
// output convention; crossing positions may be fractional.

/// Trailing simple moving average. Output entry j averages s[j..j+period-1],
/// so the result is period-1 samples shorter; timestamps (when present) are
/// taken from the window end.
PriceSeries simple_moving_average(const PriceSeries& s, std::size_t period);

enum class CrossingKind { Resistance, Support };
enum class CrossingSign { UpThrough, DownThrough };

struct CrossingEvent {
    double position = 0.0;
    CrossingKind kind = CrossingKind::Resistance;
    CrossingSign sign = CrossingSign::UpThrough;
};

/**
 * Sign changes of a - b. Adjacent opposite-sign samples place the event at
 * the linear interpolation of the zero; when the difference touches zero
 * exactly, the event sits on the first zero sample. UpThrough means the
 * difference went negative to positive. Resistance events require Up
 * inputs, Support events Down inputs.
 */
std::vector<CrossingEvent> detect_crossings(const MiniMaxSeries& a, const MiniMaxSeries& b,
                                            CrossingKind kind);

enum class ExtremumKind { Peak, Trough };

struct ExtremumPoint {
    std::size_t position = 0;
    ExtremumKind kind = ExtremumKind::Peak;
    double weight = 0.0;
};

/**
 * Strict interior local maxima of the weight profile whose prominence
 * (weight minus the higher of the two flanking minima, scanned out to the
 * neighboring maxima or the series ends) reaches min_prominence. Up inputs
 * yield Peaks, Down inputs Troughs. min_prominence must lie in [0, 1].
 */
std::vector<ExtremumPoint> extract_extrema(const MiniMaxSeries& mm, double min_prominence);

struct SpindleInterval {
    std::size_t start_pos = 0;
    std::size_t end_pos = 0;  // inclusive
    double score = 0.0;       // sign changes / (length - 1), in [0, 1]
};

struct SpindleConfig {
    double band = 0.5;            // allowed |u - d| in units of 1/n
    std::size_t min_len = 2;      // minimum interval length
    std::size_t min_crossings = 3;
};

/// band 0.5, min_len 2m, min_crossings 3.
SpindleConfig default_spindle_config(int m);

/**
 * Maximal runs where |u - d| stays within band/n, kept when they are at
 * least min_len long and u - d changes sign at least min_crossings times
 * inside the run. Returned intervals never overlap; extending one by a
 * sample would leave the band.
 */
std::vector<SpindleInterval> detect_spindle(const MiniMaxSeries& up, const MiniMaxSeries& down,
                                            const SpindleConfig& cfg);

/**
 * Classic support/resistance scan: smooth the series with an SMA, align the
 * raw series to the SMA by dropping its first period-1 samples, then cross
 * the Up profiles of both (Resistance) and the Down profiles (Support).
 * Event positions are mapped back to source-series coordinates and sorted.
 */
std::vector<CrossingEvent> support_resistance_pipeline(const PriceSeries& s, int m,
                                                       std::size_t ma_period);

}  // namespace mmx
