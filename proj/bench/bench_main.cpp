// Timing comparison between the serial and OpenMP kernels, plus streaming
// throughput and a sanity row against the naive product implementation.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mmx/indicator.hpp"
#include "mmx/reference.hpp"
#include "mmx/rolling.hpp"
#include "mmx/stream.hpp"

using namespace mmx;
using Clock = std::chrono::steady_clock;

namespace {

PriceSeries walk(std::uint32_t seed, std::size_t n) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> step(0.0, 0.01);
    PriceSeries s;
    s.values.reserve(n);
    double p = 100.0;
    for (std::size_t i = 0; i < n; ++i) {
        s.values.push_back(p);
        p *= std::exp(step(rng));
    }
    return s;
}

template <class Fn>
double best_of(int reps, Fn&& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto start = Clock::now();
        fn();
        const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        if (ms < best) best = ms;
    }
    return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP: not enabled in this build\n\n");
#endif

    std::printf("full-series profiles (best of 3, ms)\n");
    std::printf("%10s %5s %10s %10s %8s\n", "n", "m", "serial", "parallel", "speedup");
    for (std::size_t n : {std::size_t{20000}, std::size_t{100000}, std::size_t{400000}}) {
        for (int m : {5, 10, 32}) {
            if (n == 400000 && m != 10) continue;  // keep the table quick
            const PriceSeries s = walk(1, n);
            const IndicatorParams params{m, Direction::Up};
            const double serial =
                best_of(3, [&] { (void)minimax(s, params, Exec::Serial); });
            const double parallel =
                best_of(3, [&] { (void)minimax(s, params, Exec::Parallel); });
            std::printf("%10zu %5d %10.2f %10.2f %7.2fx\n", n, m, serial, parallel,
                        serial / parallel);
        }
    }

    std::printf("\nrolling windows (n=50000, window=256, hop=16, m=8; best of 3, ms)\n");
    {
        const PriceSeries s = walk(2, 50000);
        const RollingConfig cfg{256, 16, IndicatorParams{8, Direction::Up}};
        const double serial = best_of(3, [&] { (void)rolling_minimax(s, cfg, Exec::Serial); });
        const double parallel = best_of(3, [&] { (void)rolling_minimax(s, cfg, Exec::Parallel); });
        std::printf("%10s %10.2f\n%10s %10.2f\n%10s %9.2fx\n", "serial", serial, "parallel",
                    parallel, "speedup", serial / parallel);
    }

    std::printf("\nstreaming (window=256, m=8, 200000 pushes)\n");
    {
        const PriceSeries feed = walk(3, 200000);
        MiniMaxStream stream(256, IndicatorParams{8, Direction::Up});
        const auto start = Clock::now();
        for (double price : feed.values) stream.push(price);
        const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        std::printf("%.0f pushes/s (%.2f ms total, %llu q refreshes)\n",
                    200000.0 / (ms / 1000.0), ms,
                    static_cast<unsigned long long>(stream.total_q_recomputes()));
    }

    std::printf("\nlog-domain vs naive product (n=200, m=10; best of 10, ms)\n");
    {
        const PriceSeries s = walk(4, 200);
        const IndicatorParams params{10, Direction::Up};
        const double logd = best_of(10, [&] { (void)minimax(s, params, Exec::Serial); });
        const double naive = best_of(10, [&] { (void)reference_minimax(s, params); });
        std::printf("%10s %10.4f\n%10s %10.4f\n", "log", logd, "naive", naive);
    }
    return 0;
}
