#pragma once

#include "mmx/indicator.hpp"
#include "mmx/series.hpp"

namespace mmx {

/**
 * Naive linear-domain evaluation of the weight recurrence: direct products
 * of probability ratios, summed and divided with no log transform. Kept as
 * an independent check on the production path and for benchmarking; the raw
 * products overflow for long or strongly trending series (usable up to a few
 * hundred samples), in which case this throws std::range_error.
 */
MiniMaxSeries reference_minimax(const PriceSeries& s, const IndicatorParams& params);

}  // namespace mmx
