#include "costas/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "costas/golomb.hpp"
#include "costas/welch.hpp"

namespace costas {

namespace {

// Runs fn(i) for i in [0, count) across the given number of threads.
// Callers write results into per-index slots, so assembly is deterministic.
void parallel_for(u64 count, int workers, const std::function<void(u64)>& fn) {
  if (workers <= 1 || count < 2) {
    for (u64 i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<u64> next{0};
  auto worker = [&] {
    for (u64 i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
  };
  std::vector<std::thread> pool;
  const int spawn = static_cast<int>(std::min<u64>(workers, count));
  pool.reserve(spawn);
  for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

// Diagonal-dot profile statistics for one prime: the per-c fixed-point
// counts of every primitive root, folded to (max count, zero count).
struct DiagonalStats {
  u64 max_s = 0;
  u64 zero_count = 0;
  u64 total = 0;
};

DiagonalStats diagonal_stats(u64 p) {
  if (p == 2) return {1, 0, 1};
  const u64 n = p - 1;
  const u64 g0 = smallest_primitive_root(p);
  std::vector<u64> dlog0(p);
  u64 x = 1;
  for (u64 e = 0; e < n; ++e) {
    dlog0[x] = e;
    x = (x * g0) % p;
  }
  DiagonalStats st;
  std::vector<u64> profile(n);
  for (u64 k : units_mod(n)) {
    const u64 kinv = mod_inv(k, n);
    std::fill(profile.begin(), profile.end(), 0);
    // dlog base g0^k of i is dlog0[i] * k^-1; i is fixed for exactly the
    // c that solves c = dlog(i) - (i-1) mod n
    for (u64 i = 1; i <= n; ++i) {
      const u64 c = ((dlog0[i] * kinv) % n + n - (i - 1) % n) % n;
      ++profile[c];
    }
    st.total += n;
    for (u64 c = 0; c < n; ++c) {
      st.max_s = std::max(st.max_s, profile[c]);
      if (profile[c] == 0) ++st.zero_count;
    }
  }
  return st;
}

} // namespace

u64 logfit_value(u64 p) {
  return 1 + static_cast<u64>(std::llround(std::log(static_cast<double>(p))));
}

std::vector<DiagonalRow> table1_scan(u64 p_max, int workers) {
  if (p_max < 2) throw std::invalid_argument("table1_scan: need p_max >= 2");
  const auto primes = primes_upto(p_max);
  std::vector<DiagonalRow> rows(primes.size());
  parallel_for(primes.size(), workers, [&](u64 idx) {
    const u64 p = primes[idx];
    const u64 max_s = diagonal_stats(p).max_s;
    const u64 fit = logfit_value(p);
    rows[idx] = {p, max_s, fit, static_cast<i64>(max_s) - static_cast<i64>(fit)};
  });
  return rows;
}

FitStats logfit_stats(std::span<const DiagonalRow> rows) {
  if (rows.empty()) throw std::invalid_argument("logfit_stats: no rows");
  FitStats st;
  st.total = rows.size();
  for (const auto& r : rows) {
    if (r.err == 0) ++st.exact;
    if (r.err >= -1 && r.err <= 1) ++st.within_one;
  }
  return st;
}

RatioRow fixed_point_free_row(u64 p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("fixed_point_free_row: need prime p >= 3");
  const DiagonalStats st = diagonal_stats(p);
  return {p, st.zero_count, st.total,
          static_cast<double>(st.zero_count) / static_cast<double>(st.total)};
}

Rational fixed_point_free_ratio(u64 p) {
  const RatioRow row = fixed_point_free_row(p);
  if (row.zero_count == 0) return {0, 1};
  const u64 g = std::gcd(row.zero_count, row.total);
  return {row.zero_count / g, row.total / g};
}

std::vector<RatioRow> ratio_scan(u64 p_min, u64 p_max, int workers) {
  std::vector<u64> primes;
  for (u64 p : primes_upto(p_max))
    if (p >= std::max<u64>(p_min, 3)) primes.push_back(p);
  std::vector<RatioRow> rows(primes.size());
  parallel_for(primes.size(), workers, [&](u64 idx) { rows[idx] = fixed_point_free_row(primes[idx]); });
  return rows;
}

std::vector<ParityClassRow> table2_scan(int m) {
  if (m < 3 || m > 12) throw std::invalid_argument("table2_scan: need 3 <= m <= 12");
  const CyclicField F = to_cyclic_field(binary_field(m));
  std::map<std::pair<u64, u64>, u64> classes;
  for (const Permutation& f : golomb_enumerate_distinct(F)) {
    const ParityQuad q = parity_populations(f);
    ++classes[{q.ee, q.eo}];
  }
  std::vector<ParityClassRow> rows;
  for (const auto& [key, count] : classes)
    if (key.first < key.second) rows.push_back({m, key.first, key.second, count});
  return rows;  // map order is ascending by ee
}

GermainRow table3_scan(u64 p, bool include_g2) {
  if (!is_sophie_germain(p)) throw std::invalid_argument("table3_scan: p is not a Sophie Germain prime");
  GermainRow row;
  row.p = p;
  row.w1_max = welch_pair_scan(p, false).max_value;
  if (include_g2) row.g2_max = golomb_pair_scan(prime_cyclic_field(p)).max_value;
  return row;
}

FitStats germain_logfit_check(std::span<const GermainRow> rows) {
  if (rows.empty()) throw std::invalid_argument("germain_logfit_check: no rows");
  FitStats st;
  st.total = rows.size();
  for (const auto& r : rows) {
    const i64 err = static_cast<i64>(r.w1_max) - static_cast<i64>(logfit_value(r.p));
    if (err == 0) ++st.exact;
    if (err >= -1 && err <= 1) ++st.within_one;
  }
  return st;
}

} // namespace costas
