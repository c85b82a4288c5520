// Benchmark comparing the OpenMP kernels against their serial reference
// implementations: the exhaustive Kraft enumeration and the Monte Carlo
// harness. Results must agree; timings show the parallel speedup.

#include <chrono>
#include <cmath>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cbst/kraft.hpp"
#include "cbst/montecarlo.hpp"

using namespace cbst;

namespace {

template <typename F>
double timed(F&& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp enabled, max threads %d\n\n", omp_get_max_threads());
#else
    std::printf("openmp disabled, serial build\n\n");
#endif

    bool ok = true;

    {
        auto codec = make_codec("ctw:d=2", Alphabet(2));
        double serial_sum = 0.0, parallel_sum = 0.0;
        double ts = timed([&] { serial_sum = kraft_sum_serial(*codec, 16); });
        double tp = timed([&] { parallel_sum = kraft_sum(*codec, 16); });
        bool equal = std::abs(serial_sum - parallel_sum) < 1e-9;
        ok = ok && equal;
        std::printf("kraft enumeration  ctw:d=2 t=16   serial %7.3fs  openmp %7.3fs  "
                    "speedup %.2fx  results %s\n",
                    ts, tp, ts / tp, equal ? "equal" : "DIFFER");
    }

    {
        auto codec = make_codec("kt:k=0", Alphabet(2));
        MonteCarloConfig config{.kind = TestKind::identity,
                                .null_source = FiniteMemorySource::uniform_iid(2),
                                .codec = codec.get(),
                                .alpha = 0.05,
                                .t = 16384,
                                .m = 0,
                                .trials = 400,
                                .master_seed = 7,
                                .alternative = std::nullopt};
        HarnessSummary serial{}, parallel{};
        double ts = timed([&] { serial = monte_carlo_serial(config); });
        double tp = timed([&] { parallel = monte_carlo(config); });
        bool equal = serial.rejections == parallel.rejections &&
                     serial.mean_statistic == parallel.mean_statistic;
        ok = ok && equal;
        std::printf("monte carlo        kt:k=0 t=16384 serial %7.3fs  openmp %7.3fs  "
                    "speedup %.2fx  results %s\n",
                    ts, tp, ts / tp, equal ? "equal" : "DIFFER");
    }

    return ok ? 0 : 1;
}
