#include "mmx/series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mmx {

void validate(const PriceSeries& s) {
    if (s.values.size() < 2)
        throw std::domain_error("price series needs at least 2 samples, got " +
                                std::to_string(s.values.size()));
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        const double v = s.values[i];
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::domain_error("price at sample " + std::to_string(i + 1) +
                                    " must be a positive finite number");
    }
    if (!s.timestamps.empty()) {
        if (s.timestamps.size() != s.values.size())
            throw std::domain_error("timestamp count does not match value count");
        for (std::size_t i = 0; i < s.timestamps.size(); ++i) {
            if (!std::isfinite(s.timestamps[i]))
                throw std::domain_error("timestamp at sample " + std::to_string(i + 1) +
                                        " is not finite");
            if (i > 0 && s.timestamps[i] < s.timestamps[i - 1])
                throw std::domain_error("timestamps must be non-decreasing (violated at sample " +
                                        std::to_string(i + 1) + ")");
        }
    }
}

void validate(const IndicatorParams& p) {
    if (p.m < 1)
        throw std::invalid_argument("smoothing width m must be >= 1, got " + std::to_string(p.m));
}

PriceSeries subseries(const PriceSeries& s, std::size_t start, std::size_t count) {
    if (start > s.values.size() || count > s.values.size() - start)
        throw std::out_of_range("subseries range exceeds series length");
    PriceSeries out;
    out.values.assign(s.values.begin() + static_cast<std::ptrdiff_t>(start),
                      s.values.begin() + static_cast<std::ptrdiff_t>(start + count));
    if (!s.timestamps.empty())
        out.timestamps.assign(s.timestamps.begin() + static_cast<std::ptrdiff_t>(start),
                              s.timestamps.begin() + static_cast<std::ptrdiff_t>(start + count));
    return out;
}

}  // namespace mmx
