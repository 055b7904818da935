#include "doctest.h"

#include <map>

#include "costas/experiments.hpp"
#include "costas/golomb.hpp"
#include "costas/welch.hpp"

using namespace costas;

namespace {

std::map<u64, u64> as_map(const std::vector<DiagonalRow>& rows) {
  std::map<u64, u64> m;
  for (const auto& r : rows) m[r.p] = r.max_s;
  return m;
}

} // namespace

TEST_CASE("table1_scan small maxima") {
  const auto rows = table1_scan(100);
  const auto m = as_map(rows);
  CHECK(m.at(2) == 1);
  CHECK(m.at(3) == 2);
  CHECK(m.at(5) == 2);
  CHECK(m.at(7) == 3);
  CHECK(m.at(97) == 6);
  for (const auto& r : rows) {
    CHECK(r.max_s >= 1);
    CHECK(r.max_s <= r.p - 1);
  }
}

TEST_CASE("table1_scan agrees with direct per-permutation maxima, p <= 31") {
  const auto m = as_map(table1_scan(31));
  for (u64 p : primes_upto(31)) {
    if (p == 2) continue;
    u64 best = 0;
    for (u64 g : primitive_roots(p))
      for (u64 c = 0; c + 1 < p; ++c)
        best = std::max(best, fixed_point_count(welch_generate({p, g, c})));
    CHECK(m.at(p) == best);
  }
}

TEST_CASE("table1_scan is deterministic across worker counts") {
  const auto seq = table1_scan(300, 1);
  const auto par = table1_scan(300, 4);
  REQUIRE(seq.size() == par.size());
  for (size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i].p == par[i].p);
    CHECK(seq[i].max_s == par[i].max_s);
  }
}

TEST_CASE("logfit on single rows") {
  CHECK(logfit_value(7) == 3);   // ln 7 = 1.9459
  CHECK(logfit_value(17) == 4);  // ln 17 = 2.833
  const DiagonalRow r7{7, 3, 3, 0};
  const auto s7 = logfit_stats(std::span(&r7, 1));
  CHECK(s7.exact == 1);
  CHECK(s7.within_one == 1);
  const DiagonalRow r17{17, 3, 4, -1};
  const auto s17 = logfit_stats(std::span(&r17, 1));
  CHECK(s17.exact == 0);
  CHECK(s17.within_one == 1);
}

TEST_CASE("fixed-point-free ratio") {
  const auto r5 = fixed_point_free_ratio(5);
  CHECK(r5.num == 1);
  CHECK(r5.den == 4);
  // direct enumeration oracle for small p
  for (u64 p : {3ull, 5ull, 7ull, 11ull, 13ull}) {
    u64 zero = 0, total = 0;
    for (u64 g : primitive_roots(p))
      for (u64 c = 0; c + 1 < p; ++c) {
        ++total;
        if (fixed_point_count(welch_generate({p, g, c})) == 0) ++zero;
      }
    const auto row = fixed_point_free_row(p);
    CHECK(row.zero_count == zero);
    CHECK(row.total == total);
  }
}

TEST_CASE("table2_scan reference rows") {
  const auto m3 = table2_scan(3);
  REQUIRE(m3.size() == 1);
  CHECK(m3[0].ee == 1);
  CHECK(m3[0].eo == 2);
  CHECK(m3[0].count == 6);

  const auto m5 = table2_scan(5);
  REQUIRE(m5.size() == 3);
  CHECK(m5[0].ee == 5);
  CHECK(m5[0].eo == 10);
  CHECK(m5[0].count == 10);
  CHECK(m5[1].count == 40);
  CHECK(m5[2].count == 40);
}

TEST_CASE("table2 classes are symmetric and complete, m <= 7") {
  for (int m = 3; m <= 7; ++m) {
    std::map<std::pair<u64, u64>, u64> classes;
    for (const auto& f : golomb_enumerate_distinct(to_cyclic_field(binary_field(m)))) {
      const auto q = parity_populations(f);
      ++classes[{q.ee, q.eo}];
    }
    u64 total = 0;
    const u64 half = (u64{1} << (m - 1)) - 1;
    for (const auto& [key, count] : classes) {
      CHECK(key.first + key.second == half);
      CHECK(classes.at({key.second, key.first}) == count);
      total += count;
    }
    const u64 phi = euler_phi((u64{1} << m) - 1);
    CHECK(total == phi * phi / m);
    const auto rows = table2_scan(m);
    CHECK(rows.size() * 2 == classes.size());
  }
}

TEST_CASE("table3_scan small Germain primes") {
  const auto r5 = table3_scan(5, true);
  CHECK(r5.w1_max == 2);
  CHECK(r5.g2_max == 2);
  const auto r11 = table3_scan(11, true);
  CHECK(r11.w1_max == 3);
  CHECK(r11.g2_max == 4);
  const auto r23 = table3_scan(23, false);
  CHECK(r23.w1_max == 4);
  CHECK_FALSE(r23.g2_max.has_value());
  CHECK_THROWS(table3_scan(13, false));
}

TEST_CASE("germain_logfit_check on frozen single rows") {
  const GermainRow a{263, 7, std::nullopt};
  const auto sa = germain_logfit_check(std::span(&a, 1));
  CHECK(sa.exact == 1);
  CHECK(sa.within_one == 1);
  const GermainRow b{563, 8, std::nullopt};
  const auto sb = germain_logfit_check(std::span(&b, 1));
  CHECK(sb.exact == 0);
  CHECK(sb.within_one == 1);
}
