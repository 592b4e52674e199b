#pragma once

#include <utility>
#include <vector>

#include "xray/bigint.hpp"
#include "xray/structure.hpp"

namespace xray {

// How repeated cycle lengths in a type are counted. `unordered` (the
// default everywhere) counts each set of disjoint equal-length cycles once
// and matches exhaustive enumeration; `ordered` counts the cycles in the
// sequence they are chosen, inflating types with m_l repeats of length l by
// prod m_l!, which reproduces some published per-type tables as printed.
enum class Multiplicity { unordered, ordered };

struct TypeRow {
    CycleType cycle_type;
    BigInt initial_count;  // rooted forests with the cycle vertices as roots
    BigInt multiplier;     // ways to choose and arrange the cycles
    BigInt final_total;    // initial_count * multiplier
    std::vector<std::pair<BigInt, unsigned>> factorization;  // of final_total
};

// All cycle types realizable on n_points points: every nonempty multiset of
// odd parts >= 3 with sum <= n_points, each once, ascending by (sum,
// lexicographic lengths). Throws Error(no_admissible_types) when
// n_points < 3.
std::vector<CycleType> odd_partitions(int n_points);

// Labeled trees on k vertices: k^(k-2), with 1 for k in {1, 2}.
BigInt labeled_trees(int k);

// Distinct cycles on a fixed set of len labeled vertices: (len-1)!/2.
// Throws Error(not_a_cycle_length) when len < 3.
BigInt cycles_on(int len);

// Forests of k rooted labeled trees spanning n_points vertices with a fixed
// root set: k * n_points^(n_points-k-1), read as 1 when k == n_points.
// Throws Error(invalid_roots) unless 1 <= k <= n_points.
BigInt rooted_forests(int n_points, int k);

// The same count assembled term by term: sum over ordered compositions
// (a_1..a_k) of n_points - k into nonnegative parts of
// multinomial(n_points - k; a_1..a_k) * prod labeled_trees(a_i + 1),
// distributing the non-root vertices over the k trees. Always equals
// rooted_forests(n_points, k).
BigInt composition_sum(int n_points, int k);

// The number of minimal admissible complexes on n_points points whose
// cycle type is `type`: choose the cycle vertex sets and cycles
// (multiplier), then hang the remaining vertices as trees (initial_count).
// Throws Error(type_too_large) when the lengths sum past n_points and
// Error(not_a_cycle_length) on invalid lengths.
TypeRow count_cycle_type(int n_points, const CycleType& type, Multiplicity mode);

// Sum of count_cycle_type over odd_partitions(n_points).
BigInt total_admissible(int n_points, Multiplicity mode);

// One row per odd partition, ordered by (number of cycles, lexicographic
// lengths) — the natural display order for per-type tables.
std::vector<TypeRow> per_type_table(int n_points, Multiplicity mode);

// Prime factorization with ascending primes; factorize(1) is empty and
// negative input factors as its absolute value. Trial division through 1e5,
// then Pollard rho with Miller-Rabin certification (deterministic bases,
// exact below ~3.3e24; the witnesses used make larger inputs probabilistic
// in principle, but every count produced here is smooth and never reaches
// the fallback). Throws Error(zero_has_no_factorization) on 0.
std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& value);

bool is_probable_prime(const BigInt& n);

}  // namespace xray
