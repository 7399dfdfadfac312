#include "mmx/reference.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmx {
namespace {

double rd(double a, double b) { return 2.0 * (a - b) / (a + b); }

double q_dir(const std::vector<double>& v, std::size_t i, int m, double sigma, bool forward) {
    double q = 0.0;
    for (int k = 1; k <= m; ++k) {
        if (forward) {
            const std::size_t j = i + static_cast<std::size_t>(k);
            if (j >= v.size()) break;
            q += std::exp(sigma * rd(v[j], v[i]));
        } else {
            if (static_cast<std::size_t>(k) > i) break;
            q += std::exp(sigma * rd(v[i - static_cast<std::size_t>(k)], v[i]));
        }
    }
    return q;
}

}  // namespace

MiniMaxSeries reference_minimax(const PriceSeries& s, const IndicatorParams& params) {
    validate(s);
    validate(params);
    const std::vector<double>& v = s.values;
    const std::size_t n = v.size();
    const double sigma = params.direction == Direction::Up ? 1.0 : -1.0;

    std::vector<double> qn(n), qp(n);
    for (std::size_t i = 0; i < n; ++i) {
        qn[i] = q_dir(v, i, params.m, sigma, true);
        qp[i] = q_dir(v, i, params.m, sigma, false);
    }

    // Direct running product of transition-probability ratios. Deliberately
    // works in the linear domain so it shares nothing with the log-domain
    // pipeline; the price is a narrow usable range before the product leaves
    // normal double territory.
    std::vector<double> u(n);
    u[0] = 1.0;
    for (std::size_t i = 1; i < n; ++i) {
        const double fwd = qn[i - 1] / (qn[i - 1] + qp[i - 1]);
        const double back = qp[i] / (qn[i] + qp[i]);
        u[i] = u[i - 1] * (fwd / back);
        if (!std::isfinite(u[i]) || u[i] <= 0.0 || u[i] < std::numeric_limits<double>::min())
            throw std::range_error("running product left double range at sample " +
                                   std::to_string(i + 1) + "; series too long for the reference");
    }

    double total = 0.0;
    for (double x : u) total += x;
    if (!std::isfinite(total))
        throw std::range_error("running product sum overflowed; series too long for the reference");
    for (double& x : u) x /= total;
    return MiniMaxSeries{u, params.direction, params.m};
}

}  // namespace mmx
