#pragma once

// Numeric kernels shared by the batch and streaming paths. Both paths must
// evaluate identical expressions in identical order so their outputs agree
// bit for bit.

#include <cmath>
#include <cstddef>
#include <vector>

namespace mmx::detail {

inline double rel_diff(double a, double b) { return 2.0 * (a - b) / (a + b); }

inline double direction_sign(bool up) { return up ? 1.0 : -1.0; }

// Sum of exp(sigma * rel_diff(values[i +- k], values[i])) over k = 1..m,
// truncated at the container edges; an empty sum is 0. V needs operator[].
template <class V>
double q_side(const V& values, std::size_t n, std::size_t i, int m, double sigma, bool forward) {
    double q = 0.0;
    if (forward) {
        for (int k = 1; k <= m; ++k) {
            const std::size_t j = i + static_cast<std::size_t>(k);
            if (j >= n) break;
            q += std::exp(sigma * rel_diff(values[j], values[i]));
        }
    } else {
        for (int k = 1; k <= m; ++k) {
            if (static_cast<std::size_t>(k) > i) break;
            const std::size_t j = i - static_cast<std::size_t>(k);
            q += std::exp(sigma * rel_diff(values[j], values[i]));
        }
    }
    return q;
}

// Log-domain weight increment between neighboring samples:
// ln P(prev -> cur) - ln P(cur -> prev).
inline double log_weight_step(double qn_prev, double qp_prev, double qn_cur, double qp_cur) {
    return std::log(qn_prev / (qn_prev + qp_prev)) - std::log(qp_cur / (qn_cur + qp_cur));
}

// exp-normalize with the maximum shifted to exp(0); the result sums to 1.
std::vector<double> logsumexp_normalize(const std::vector<double>& log_weights);

}  // namespace mmx::detail
