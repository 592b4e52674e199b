#include "xray/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>
#include <vector>

#include "xray/structure.hpp"
#include "xray/transform.hpp"

namespace xray {

LineComplex random_complex(const PointSpace& space, int size, Xoshiro256StarStar& rng) {
    const long long n = space.num_points;
    const long long total = n * (n - 1) / 2;
    if (size < 0 || size > total)
        fail(Errc::too_many_lines, "a complex on " + std::to_string(n) + " points has at most " +
                                       std::to_string(total) + " lines, asked for " +
                                       std::to_string(size));
    std::vector<Line> pool = all_lines(space);
    std::vector<Line> chosen;
    chosen.reserve(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
        const long long j =
            i + static_cast<long long>(rng.below(static_cast<std::uint64_t>(total - i)));
        std::swap(pool[i], pool[j]);
        chosen.push_back(pool[i]);
    }
    return LineComplex(space, std::move(chosen));
}

std::pair<double, double> wilson_interval(std::uint64_t hits, std::uint64_t trials, double z) {
    if (trials == 0) return {0.0, 1.0};
    const double t = static_cast<double>(trials);
    const double p = static_cast<double>(hits) / t;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / t;
    const double center = (p + z2 / (2.0 * t)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / t + z2 / (4.0 * t * t)) / denom;
    // At the boundaries the score interval's endpoint is exactly the sample
    // proportion; computing it avoids returning rounding dust like 3e-18.
    const double low = hits == 0 ? 0.0 : std::max(0.0, center - half);
    const double high = hits == trials ? 1.0 : std::min(1.0, center + half);
    return {low, high};
}

SampleEstimate estimate_fraction(const PointSpace& space, int size, std::uint64_t trials,
                                 std::uint64_t seed, int threads) {
    if (trials == 0) fail(Errc::parse_error, "need at least one trial");
    const long long n = space.num_points;
    const long long total_lines = n * (n - 1) / 2;
    if (size < 0 || size > total_lines)
        fail(Errc::too_many_lines, "a complex on " + std::to_string(n) + " points has at most " +
                                       std::to_string(total_lines) + " lines, asked for " +
                                       std::to_string(size));
    const int workers =
        static_cast<int>(std::clamp<std::uint64_t>(threads < 1 ? 1 : threads, 1, trials));

    std::vector<std::uint64_t> hit_counts(workers, 0), audit_counts(workers, 0);
    std::vector<std::exception_ptr> failures(workers);
    auto run_range = [&](int w, std::uint64_t lo, std::uint64_t hi) {
        try {
            std::uint64_t hits = 0, audited = 0;
            for (std::uint64_t i = lo; i < hi; ++i) {
                Xoshiro256StarStar rng = Xoshiro256StarStar::substream(seed, i);
                const LineComplex c = random_complex(space, size, rng);
                const bool verdict = is_admissible_quick(c.num_points(), c.lines());
                if (i % 100 == 0) {
                    // The audit gate depends only on the global index, so
                    // the audit count is thread-count invariant too.
                    if (is_admissible_rank(c) != verdict ||
                        is_admissible_structural(c).admissible != verdict)
                        throw std::logic_error(
                            "admissibility verdicts disagree on a sampled complex");
                    ++audited;
                }
                hits += verdict ? 1 : 0;
            }
            hit_counts[w] = hits;
            audit_counts[w] = audited;
        } catch (...) {
            failures[w] = std::current_exception();
        }
    };

    if (workers == 1) {
        run_range(0, 0, trials);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = trials / workers, extra = trials % workers;
        std::uint64_t lo = 0;
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t hi = lo + chunk + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
            pool.emplace_back(run_range, w, lo, hi);
            lo = hi;
        }
        for (auto& t : pool) t.join();
    }
    for (const auto& failure : failures)
        if (failure) std::rethrow_exception(failure);

    SampleEstimate est;
    est.trials = trials;
    est.seed = seed;
    for (int w = 0; w < workers; ++w) {
        est.hits += hit_counts[w];
        est.audited += audit_counts[w];
    }
    est.fraction = static_cast<double>(est.hits) / static_cast<double>(trials);
    std::tie(est.ci_low, est.ci_high) = wilson_interval(est.hits, trials, kZ95);
    est.population = binomial(total_lines, size);
    est.implied_total = est.fraction * est.population.convert_to<double>();
    return est;
}

}  // namespace xray
