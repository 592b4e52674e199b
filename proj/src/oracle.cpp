#include "xray/oracle.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <iostream>
#include <numeric>
#include <thread>
#include <vector>

#include "xray/montecarlo.hpp"
#include "xray/rng.hpp"
#include "xray/space.hpp"
#include "xray/transform.hpp"

namespace xray {

namespace {

// Binomial table in 64-bit for combination unranking; values are exact
// whenever they fit (the budget check guarantees every value we read does).
std::vector<std::vector<std::uint64_t>> pascal_table(int rows, int cols) {
    std::vector<std::vector<std::uint64_t>> c(rows + 1, std::vector<std::uint64_t>(cols + 1, 0));
    for (int i = 0; i <= rows; ++i) {
        c[i][0] = 1;
        for (int j = 1; j <= std::min(i, cols); ++j) {
            const std::uint64_t sum = c[i - 1][j - 1] + c[i - 1][j];
            c[i][j] = sum < c[i - 1][j - 1] ? UINT64_MAX : sum;  // saturate on overflow
        }
    }
    return c;
}

// Lexicographically `rank`-th k-subset of {0..total-1}.
std::vector<int> unrank_combination(const std::vector<std::vector<std::uint64_t>>& c, int total,
                                    int k, std::uint64_t rank) {
    std::vector<int> comb(k);
    int start = 0;
    for (int pos = 0; pos < k; ++pos) {
        for (int v = start;; ++v) {
            const std::uint64_t below = c[total - v - 1][k - pos - 1];
            if (rank < below) {
                comb[pos] = v;
                start = v + 1;
                break;
            }
            rank -= below;
        }
    }
    return comb;
}

// Advances comb to its lexicographic successor; false when it was the last.
bool next_combination(std::vector<int>& comb, int total) {
    const int k = static_cast<int>(comb.size());
    int i = k - 1;
    while (i >= 0 && comb[i] == total - k + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    return true;
}

// Re-analyzes one subset from scratch: admissibility by parity union-find,
// then cycle lengths by pruning leaves and walking what is left. All
// scratch state is preallocated; n_points <= 64 by the bitmask width.
class SubsetAnalyzer {
  public:
    SubsetAnalyzer(int n_points, std::vector<Line> lines)
        : n_(n_points),
          lines_(std::move(lines)),
          parent_(n_points),
          parity_(n_points),
          has_odd_(n_points),
          deg_(n_points),
          adj_(n_points),
          stack_(n_points) {}

    // True iff the subset is admissible (minimal size); fills `type` with
    // the sorted cycle lengths when it is.
    bool analyze(const std::vector<int>& comb, std::vector<int>& type) {
        std::iota(parent_.begin(), parent_.end(), 0);
        std::fill(parity_.begin(), parity_.end(), 0);
        std::fill(has_odd_.begin(), has_odd_.end(), 0);
        std::fill(deg_.begin(), deg_.end(), 0);
        std::fill(adj_.begin(), adj_.end(), 0);
        for (const int idx : comb) {
            const Line& l = lines_[idx];
            ++deg_[l.a];
            ++deg_[l.b];
            adj_[l.a] |= 1ULL << l.b;
            adj_[l.b] |= 1ULL << l.a;
            unsigned char pa = 0, pb = 0;
            const int ra = find(l.a, pa), rb = find(l.b, pb);
            if (ra == rb) {
                if (pa == pb) has_odd_[ra] = 1;
            } else {
                parent_[rb] = ra;
                parity_[rb] = pa ^ pb ^ 1;
                has_odd_[ra] |= has_odd_[rb];
            }
        }
        for (int v = 0; v < n_; ++v) {
            unsigned char ignore = 0;
            if (!has_odd_[find(v, ignore)]) return false;
        }

        // Prune leaves; only the disjoint odd cycles survive.
        std::uint64_t alive = n_ == 64 ? ~0ULL : (1ULL << n_) - 1;
        int sp = 0;
        for (int v = 0; v < n_; ++v)
            if (deg_[v] == 1) stack_[sp++] = v;
        while (sp > 0) {
            const int v = stack_[--sp];
            alive &= ~(1ULL << v);
            const std::uint64_t nb = adj_[v] & alive;
            if (nb == 0) continue;
            const int w = std::countr_zero(nb);
            if (--deg_[w] == 1) stack_[sp++] = w;
        }

        type.clear();
        std::uint64_t seen = 0;
        for (int v = 0; v < n_; ++v) {
            if (!(alive >> v & 1) || (seen >> v & 1)) continue;
            int len = 0, cur = v, prev = -1;
            do {
                seen |= 1ULL << cur;
                ++len;
                std::uint64_t nb = adj_[cur] & alive;
                if (prev >= 0) nb &= ~(1ULL << prev);
                prev = cur;
                cur = std::countr_zero(nb);
            } while (cur != v);
            type.push_back(len);
        }
        std::sort(type.begin(), type.end());
        return true;
    }

  private:
    int find(int v, unsigned char& path_parity) {
        unsigned char acc = 0;
        while (parent_[v] != v) {
            acc ^= parity_[v];
            v = parent_[v];
        }
        path_parity = acc;
        return v;
    }

    int n_;
    std::vector<Line> lines_;
    std::vector<int> parent_;
    std::vector<unsigned char> parity_, has_odd_;
    std::vector<int> deg_;
    std::vector<std::uint64_t> adj_;
    std::vector<int> stack_;
};

}  // namespace

OracleResult brute_force_count(int n_points, int threads, bool force) {
    if (n_points < 1 || n_points > 62)
        fail(Errc::budget_exceeded, "brute force supports 1..62 points");
    const int total_lines = n_points * (n_points - 1) / 2;
    const BigInt exact_total = binomial(total_lines, n_points);
    if (exact_total > BigInt(1) << 62)
        fail(Errc::budget_exceeded, exact_total.str() + " subsets cannot be sharded in 64 bits");
    const std::uint64_t total = exact_total.convert_to<std::uint64_t>();
    if (!force && total > kOracleSubsetBudget)
        fail(Errc::budget_exceeded,
             std::to_string(total) + " subsets exceed the default budget of " +
                 std::to_string(kOracleSubsetBudget) + " (pass force to run anyway)");

    OracleResult result;
    result.n_points = n_points;
    result.subsets_examined = exact_total;
    result.admissible_count = 0;
    if (total == 0) return result;  // N = 2: one line can never cover two points twice

    const auto table = pascal_table(total_lines, n_points);
    const std::vector<Line> lines = all_lines(PointSpace::with_points(n_points));
    const int workers = static_cast<int>(
        std::clamp<std::uint64_t>(threads < 1 ? 1 : static_cast<std::uint64_t>(threads), 1,
                                  std::min<std::uint64_t>(total, 256)));

    std::vector<std::map<std::vector<int>, std::uint64_t>> shard_bins(workers);
    std::vector<std::exception_ptr> failures(workers);
    auto run_shard = [&](int w, std::uint64_t lo, std::uint64_t hi) {
        try {
            SubsetAnalyzer analyzer(n_points, lines);
            std::vector<int> comb = unrank_combination(table, total_lines, n_points, lo);
            std::vector<int> type;
            auto& bins = shard_bins[w];
            for (std::uint64_t r = lo; r < hi; ++r) {
                if (analyzer.analyze(comb, type)) ++bins[type];
                next_combination(comb, total_lines);
            }
        } catch (...) {
            failures[w] = std::current_exception();
        }
    };

    if (workers == 1) {
        run_shard(0, 0, total);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = total / workers, extra = total % workers;
        std::uint64_t lo = 0;
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t hi = lo + chunk + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
            pool.emplace_back(run_shard, w, lo, hi);
            lo = hi;
        }
        for (auto& t : pool) t.join();
    }
    for (const auto& failure : failures)
        if (failure) std::rethrow_exception(failure);

    for (const auto& bins : shard_bins)
        for (const auto& [lengths, count] : bins) {
            result.per_type[CycleType{lengths}] += count;
            result.admissible_count += count;
        }
    return result;
}

bool audit_equivalence(int n_points, int samples, std::uint64_t seed) {
    if (n_points < 1 || n_points > 12)
        fail(Errc::budget_exceeded, "equivalence audit supports 1..12 points");
    const PointSpace space = PointSpace::with_points(n_points);
    const long long total_lines = static_cast<long long>(n_points) * (n_points - 1) / 2;
    const long long max_size = std::min<long long>(2 * n_points, total_lines);
    for (int i = 0; i < samples; ++i) {
        Xoshiro256StarStar rng = Xoshiro256StarStar::substream(seed, static_cast<std::uint64_t>(i));
        const int size =
            max_size == 0 ? 0 : 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_size)));
        const LineComplex c = random_complex(space, size, rng);
        const bool structural = is_admissible_structural(c).admissible;
        const bool quick = is_admissible_quick(c.num_points(), c.lines());
        const bool by_rank = is_admissible_rank(c);
        if (structural != by_rank || quick != structural) {
            std::cerr << "admissibility disagreement (structural=" << structural
                      << ", quick=" << quick << ", rank=" << by_rank << ") on:\n"
                      << serialize_complex(c);
            return false;
        }
    }
    return true;
}

}  // namespace xray
