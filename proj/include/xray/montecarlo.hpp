#pragma once

#include <cstdint>
#include <utility>

#include "xray/bigint.hpp"
#include "xray/rng.hpp"
#include "xray/space.hpp"

namespace xray {

struct SampleEstimate {
    std::uint64_t trials = 0;
    std::uint64_t hits = 0;         // fraction = hits/trials, exactly
    double fraction = 0.0;
    double ci_low = 0.0;            // Wilson 95% score interval on fraction
    double ci_high = 0.0;
    double implied_total = 0.0;     // fraction * population
    BigInt population;              // C(C(N,2), size): all complexes of this size
    std::uint64_t seed = 0;
    std::uint64_t audited = 0;      // draws re-checked by the exact rank test
};

// Uniformly random complex of exactly `size` lines, by partial shuffle of
// the canonical line sequence. Deterministic given the generator state;
// independent draws come from Xoshiro256StarStar::substream(seed, index).
// Throws Error(too_many_lines) when size exceeds C(num_points, 2).
LineComplex random_complex(const PointSpace& space, int size, Xoshiro256StarStar& rng);

// Fraction of admissible complexes among `trials` uniform draws of `size`
// lines. Trial i draws from substream(seed, i), so the estimate is
// identical for every thread count. Verdicts are structural; every 100th
// draw is re-checked against the exact rank test, and a disagreement throws
// std::logic_error (it would be a library defect, not bad input).
SampleEstimate estimate_fraction(const PointSpace& space, int size, std::uint64_t trials,
                                 std::uint64_t seed, int threads = 1);

// Wilson score interval for a binomial proportion at normal quantile z.
std::pair<double, double> wilson_interval(std::uint64_t hits, std::uint64_t trials, double z);

// Two-sided normal quantiles used for reporting.
inline constexpr double kZ95 = 1.959963984540054;
inline constexpr double kZ99 = 2.5758293035489004;

}  // namespace xray
