#include "xray/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "xray/errors.hpp"

namespace xray {

std::vector<CycleType> odd_partitions(int n_points) {
    if (n_points < 3)
        fail(Errc::no_admissible_types,
             "no odd cycle fits on " + std::to_string(n_points) + " points");
    std::vector<CycleType> out;
    std::vector<int> current;
    // Non-decreasing parts enumerate each multiset exactly once.
    auto grow = [&](auto&& self, int min_part, int budget) -> void {
        for (int part = min_part; part <= budget; part += 2) {
            current.push_back(part);
            out.push_back(CycleType{current});
            self(self, part, budget - part);
            current.pop_back();
        }
    };
    grow(grow, 3, n_points);
    std::sort(out.begin(), out.end(), [](const CycleType& x, const CycleType& y) {
        const int sx = std::accumulate(x.lengths.begin(), x.lengths.end(), 0);
        const int sy = std::accumulate(y.lengths.begin(), y.lengths.end(), 0);
        if (sx != sy) return sx < sy;
        return x.lengths < y.lengths;
    });
    return out;
}

BigInt labeled_trees(int k) {
    if (k < 1) fail(Errc::invalid_roots, "trees need at least one vertex");
    if (k <= 2) return 1;
    return ipow(k, static_cast<unsigned>(k - 2));
}

BigInt cycles_on(int len) {
    if (len < 3)
        fail(Errc::not_a_cycle_length, std::to_string(len) + " vertices cannot form a cycle");
    return factorial(len - 1) / 2;
}

BigInt rooted_forests(int n_points, int k) {
    if (n_points < 1 || k < 1 || k > n_points)
        fail(Errc::invalid_roots, "need 1 <= roots <= points, got roots=" + std::to_string(k) +
                                      " points=" + std::to_string(n_points));
    if (k == n_points) return 1;
    return k * ipow(n_points, static_cast<unsigned>(n_points - k - 1));
}

BigInt composition_sum(int n_points, int k) {
    if (n_points < 1 || k < 1 || k > n_points)
        fail(Errc::invalid_roots, "need 1 <= roots <= points, got roots=" + std::to_string(k) +
                                      " points=" + std::to_string(n_points));
    // Distribute the n_points - k non-root vertices over the k trees; the
    // running product of binomials is the multinomial coefficient.
    BigInt total = 0;
    auto place = [&](auto&& self, int tree, int left, const BigInt& acc) -> void {
        if (tree == k - 1) {
            total += acc * labeled_trees(left + 1);
            return;
        }
        for (int take = 0; take <= left; ++take)
            self(self, tree + 1, left - take, acc * binomial(left, take) * labeled_trees(take + 1));
    };
    place(place, 0, n_points - k, BigInt(1));
    return total;
}

TypeRow count_cycle_type(int n_points, const CycleType& type, Multiplicity mode) {
    TypeRow row;
    row.cycle_type = type;
    std::sort(row.cycle_type.lengths.begin(), row.cycle_type.lengths.end());
    int sum = 0;
    for (int len : row.cycle_type.lengths) {
        if (len < 3 || len % 2 == 0)
            fail(Errc::not_a_cycle_length,
                 "cycle lengths must be odd and >= 3, got " + std::to_string(len));
        sum += len;
    }
    if (row.cycle_type.lengths.empty())
        fail(Errc::not_a_cycle_length, "a cycle type needs at least one cycle");
    if (sum > n_points)
        fail(Errc::type_too_large, "type " + to_string(row.cycle_type) + " needs " +
                                       std::to_string(sum) + " points, have " +
                                       std::to_string(n_points));

    BigInt multiplier = 1;
    int remaining = n_points;
    for (int len : row.cycle_type.lengths) {
        multiplier *= binomial(remaining, len) * cycles_on(len);
        remaining -= len;
    }
    if (mode == Multiplicity::unordered) {
        // The sequential product counts equal-length cycles in choice
        // order; collapse each run of repeats to unordered sets.
        BigInt repeats = 1;
        int run = 1;
        for (std::size_t i = 1; i <= row.cycle_type.lengths.size(); ++i) {
            if (i < row.cycle_type.lengths.size() &&
                row.cycle_type.lengths[i] == row.cycle_type.lengths[i - 1]) {
                ++run;
                continue;
            }
            repeats *= factorial(run);
            run = 1;
        }
        BigInt q, rem;
        boost::multiprecision::divide_qr(multiplier, repeats, q, rem);
        if (rem != 0) throw std::logic_error("repeat symmetry must divide the multiplier");
        multiplier = std::move(q);
    }
    row.multiplier = std::move(multiplier);
    row.initial_count = rooted_forests(n_points, sum);
    row.final_total = row.initial_count * row.multiplier;
    row.factorization = factorize(row.final_total);
    return row;
}

BigInt total_admissible(int n_points, Multiplicity mode) {
    BigInt total = 0;
    for (const CycleType& t : odd_partitions(n_points))
        total += count_cycle_type(n_points, t, mode).final_total;
    return total;
}

std::vector<TypeRow> per_type_table(int n_points, Multiplicity mode) {
    std::vector<CycleType> types = odd_partitions(n_points);
    std::sort(types.begin(), types.end(), [](const CycleType& x, const CycleType& y) {
        if (x.lengths.size() != y.lengths.size()) return x.lengths.size() < y.lengths.size();
        return x.lengths < y.lengths;
    });
    std::vector<TypeRow> rows;
    rows.reserve(types.size());
    for (const CycleType& t : types) rows.push_back(count_cycle_type(n_points, t, mode));
    return rows;
}

namespace {

using boost::multiprecision::powm;

bool miller_rabin_witness(const BigInt& n, const BigInt& a, const BigInt& d, int r) {
    BigInt x = powm(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // a certifies n composite
}

BigInt pollard_rho(const BigInt& n) {
    // Floyd cycle-finding with deterministic restarts; n is odd, composite,
    // and has no factor below the trial-division bound.
    for (BigInt c = 1;; ++c) {
        auto step = [&](const BigInt& x) { return (x * x + c) % n; };
        BigInt x = 2, y = 2, d = 1;
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void split_into(const BigInt& n, std::map<BigInt, unsigned>& acc) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++acc[n];
        return;
    }
    const BigInt d = pollard_rho(n);
    split_into(d, acc);
    split_into(n / d, acc);
}

}  // namespace

bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    BigInt d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    // These twelve bases decide primality exactly for n < 3.3e24.
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (miller_rabin_witness(n, BigInt(a), d, r)) return false;
    return true;
}

std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& value) {
    if (value == 0) fail(Errc::zero_has_no_factorization, "0 is divisible by everything");
    BigInt n = abs(value);
    std::map<BigInt, unsigned> acc;
    for (long long p = 2; p <= 100000 && n > 1; p += (p == 2 ? 1 : 2)) {
        if (BigInt(p) * p > n) break;
        while (n % p == 0) {
            ++acc[BigInt(p)];
            n /= p;
        }
    }
    split_into(n, acc);
    return {acc.begin(), acc.end()};
}

}  // namespace xray
