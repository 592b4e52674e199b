#pragma once

#include <cstdint>
#include <map>

#include "xray/bigint.hpp"
#include "xray/structure.hpp"

namespace xray {

struct OracleResult {
    int n_points = 0;
    BigInt subsets_examined;  // C(C(n_points,2), n_points)
    BigInt admissible_count;
    std::map<CycleType, BigInt> per_type;  // sums to admissible_count
};

// Largest subset count accepted without `force`; admits every N <= 8
// (C(28,8) = 3108105) and rejects N = 9 (C(36,9) is ~94 million).
inline constexpr std::uint64_t kOracleSubsetBudget = 4'000'000;

// Examines every n_points-line subset of the complete line set in
// lexicographic order, counts the admissible ones (= every component
// unicyclic with an odd cycle, at this minimal size) and bins them by
// cycle type. Independent of the enumeration formulas — this is the ground
// truth they are checked against. Sharded over `threads` workers by
// combination rank; results are identical for any thread count. Throws
// Error(budget_exceeded) past the budget unless `force`, and always when
// the subset count cannot be sharded in 64 bits.
OracleResult brute_force_count(int n_points, int threads = 1, bool force = false);

// Draws `samples` random complexes of sizes 1..min(2N, C(N,2)) and checks
// that the structural, quick, and rank admissibility verdicts agree.
// Returns true when they always do; on a disagreement, prints the offending
// complex to stderr and returns false. Requires n_points <= 12.
bool audit_equivalence(int n_points, int samples, std::uint64_t seed);

}  // namespace xray
