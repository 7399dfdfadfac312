#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <random>

#include "mmx/series.hpp"

namespace fixtures {

inline mmx::PriceSeries make_series(std::initializer_list<double> values) {
    mmx::PriceSeries s;
    s.values = values;
    return s;
}

inline mmx::PriceSeries constant_series(std::size_t n, double value = 100.0) {
    mmx::PriceSeries s;
    s.values.assign(n, value);
    return s;
}

/// Geometric random walk, always positive.
inline mmx::PriceSeries random_walk(std::uint32_t seed, std::size_t n, double start = 100.0,
                                    double vol = 0.01) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> step(0.0, vol);
    mmx::PriceSeries s;
    s.values.reserve(n);
    double p = start;
    for (std::size_t i = 0; i < n; ++i) {
        s.values.push_back(p);
        p *= std::exp(step(rng));
    }
    return s;
}

/// Independent uniform draws in [lo, hi].
inline mmx::PriceSeries uniform_series(std::uint32_t seed, std::size_t n, double lo = 50.0,
                                       double hi = 150.0) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> value(lo, hi);
    mmx::PriceSeries s;
    s.values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) s.values.push_back(value(rng));
    return s;
}

/// Three sharp bumps on a flat base, buried under deterministic ripple and
/// seeded noise. The bump centers sit at 1-based samples 120, 300, 480.
inline mmx::PriceSeries noisy_peaks(std::size_t n = 600) {
    std::mt19937 rng(908172635u);
    std::normal_distribution<double> noise(0.0, 0.35);
    const double centers[] = {119.0, 299.0, 479.0};
    const double amps[] = {14.0, 18.0, 12.0};
    const double widths[] = {10.0, 12.0, 9.0};
    mmx::PriceSeries s;
    s.values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = static_cast<double>(i);
        double v = 100.0;
        for (int b = 0; b < 3; ++b) {
            const double z = (x - centers[b]) / widths[b];
            v += amps[b] * std::exp(-0.5 * z * z);
        }
        v += 0.55 * std::sin(0.83 * x + 1.3) + 0.45 * std::sin(0.29 * x + 0.7);
        v += noise(rng);
        s.values.push_back(v);
    }
    return s;
}

///// Consolidation between two trending legs. The flanks (samples before 31
/// and after 121, 1-based) swing hard so they soak up most of the extremal
/// weight; the middle churns sideways with a slow oscillation whose
/// amplitude follows three bumps, the middle one tallest, like a head
/// between two shoulders. Up and down weights braid around each other
/// across the churn span 31..121 and separate on the flanks.
inline mmx::PriceSeries head_shoulders(std::size_t n = 150) {
    const double centers[] = {45.0, 75.0, 105.0};
    const double amps[] = {1.5, 2.4, 1.5};
    const double widths[] = {7.0, 9.0, 7.0};
    mmx::PriceSeries s;
    s.values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = static_cast<double>(i);
        double v = 100.0;
        if (i < 30) {
            v += 12.0 * std::sin(2.0 * std::numbers::pi * x / 20.0);
        } else if (i <= 120) {
            double envelope = 0.0;
            for (int b = 0; b < 3; ++b) {
                const double z = (x - centers[b]) / widths[b];
                envelope += amps[b] * std::exp(-0.5 * z * z);
            }
            v += envelope * std::sin(2.0 * std::numbers::pi * x / 16.0);
        } else {
            v += 12.0 * std::sin(2.0 * std::numbers::pi * (x - 120.0) / 20.0);
        }
        s.values.push_back(v);
    }
    return s;
}

/// Strictly increasing control series; no consolidation anywhere.
inline mmx::PriceSeries ramp(std::size_t n = 150) {
    mmx::PriceSeries s;
    s.values.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        s.values.push_back(100.0 + 0.5 * static_cast<double>(i));
    return s;
}

/// Linear climb to a single peak, then a slower slide back down.
inline mmx::PriceSeries ramp_decay(std::size_t n = 60, std::size_t peak = 30) {
    mmx::PriceSeries s;
    s.values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = static_cast<double>(i);
        const double p = static_cast<double>(peak - 1);
        if (i < peak)
            s.values.push_back(100.0 + 30.0 * x / p);
        else
            s.values.push_back(130.0 - 25.0 * (x - p) / (static_cast<double>(n - 1) - p));
    }
    return s;
}

}  // namespace fixtures
