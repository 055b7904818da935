#ifndef COSTAS_EXPERIMENTS_HPP
#define COSTAS_EXPERIMENTS_HPP

#include <optional>
#include <span>
#include <vector>

#include "costas/xcorr.hpp"

namespace costas {

struct DiagonalRow {
  u64 p = 0;
  u64 max_s = 0;   // max over (g, c) of the diagonal dot count
  u64 fit = 0;     // 1 + round(ln p)
  i64 err = 0;     // max_s - fit
};

// Diagonal maxima for every prime p <= p_max, ascending.  O(p) per
// primitive root via the dlog fixed-point profile.
std::vector<DiagonalRow> table1_scan(u64 p_max, int workers = 1);

struct FitStats {
  u64 exact = 0;       // rows with err == 0
  u64 within_one = 0;  // rows with |err| <= 1
  u64 total = 0;
};

FitStats logfit_stats(std::span<const DiagonalRow> rows);

u64 logfit_value(u64 p);  // 1 + round(ln p)

struct RatioRow {
  u64 p = 0;
  u64 zero_count = 0;  // (g, c) pairs with no diagonal dot
  u64 total = 0;       // (p-1) * phi(p-1)
  double ratio = 0.0;
};

RatioRow fixed_point_free_row(u64 p);
Rational fixed_point_free_ratio(u64 p);  // reduced zero_count / total

// Rows for every prime in [p_min, p_max], ascending.
std::vector<RatioRow> ratio_scan(u64 p_min, u64 p_max, int workers = 1);

struct ParityClassRow {
  int m = 0;
  u64 ee = 0, eo = 0;
  u64 count = 0;  // distinct G2 permutations of GF(2^m) in this class
};

// Parity classes of the distinct G2 permutations of GF(2^m) with ee < eo
// (the mirrored ee > eo half is implied), ascending by ee.
std::vector<ParityClassRow> table2_scan(int m);

struct GermainRow {
  u64 p = 0;
  u64 w1_max = 0;
  std::optional<u64> g2_max;
};

// Full (u,v) pair-scan maxima for one Sophie Germain prime.
GermainRow table3_scan(u64 p, bool include_g2);

// Log-fit statistic over the w1_max column.
FitStats germain_logfit_check(std::span<const GermainRow> rows);

} // namespace costas

#endif
