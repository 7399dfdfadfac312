#include "mmx/rolling.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

#include "mmx/indicator.hpp"

namespace mmx {

RollingResult rolling_minimax(const PriceSeries& s, const RollingConfig& cfg, Exec exec) {
    validate(s);
    validate(cfg.params);
    if (cfg.window < 2)
        throw std::invalid_argument("rolling window must cover at least 2 samples, got " +
                                    std::to_string(cfg.window));
    if (cfg.hop < 1) throw std::invalid_argument("rolling hop must be >= 1, got 0");
    const std::size_t n = s.values.size();
    if (n < cfg.window)
        throw std::invalid_argument("series of length " + std::to_string(n) +
                                    " is shorter than rolling window " +
                                    std::to_string(cfg.window));

    const std::size_t count = (n - cfg.window) / cfg.hop + 1;
    RollingResult result{cfg.window, cfg.hop, std::vector<RollingWindow>(count)};

    // Windows are independent, so the outer loop parallelizes; each inner
    // call runs the serial kernel so per-window bits match a standalone
    // minimax() call on the same slice.
    const bool par = exec != Exec::Serial;
    (void)par;
    const std::ptrdiff_t pc = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(static) if (par)
    for (std::ptrdiff_t w = 0; w < pc; ++w) {
        const std::size_t start = static_cast<std::size_t>(w) * cfg.hop;
        PriceSeries slice = subseries(s, start, cfg.window);
        result.windows[static_cast<std::size_t>(w)] =
            RollingWindow{start + 1, minimax(slice, cfg.params, Exec::Serial)};
    }
    return result;
}

}  // namespace mmx
