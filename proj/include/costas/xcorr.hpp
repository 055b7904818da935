#ifndef COSTAS_XCORR_HPP
#define COSTAS_XCORR_HPP

#include <map>
#include <string>
#include <vector>

#include "costas/field.hpp"
#include "costas/permutation.hpp"

namespace costas {

struct AxisMode {
  bool periodic = false;
  u64 period = 0;  // n or n+1 when periodic
};

struct CorrelationMode {
  AxisMode horizontal, vertical;

  static CorrelationMode aperiodic() { return {}; }
  // W1 convention: horizontal periodic with period n = p-1, vertical aperiodic.
  static CorrelationMode welch(u64 n) { return {{true, n}, {false, 0}}; }
  // G2 convention: both axes periodic with period n+1 = q-1; residue 0 is
  // an unoccupied position.
  static CorrelationMode golomb(u64 n) { return {{true, n + 1}, {true, n + 1}}; }
};

// Number of dots of f1, translated by (u, v), that land on dots of f2.
// Out-of-range positions are discarded on aperiodic axes and wrapped on
// periodic ones.  Direct evaluation of the definition; the scans below use
// faster equivalent routes.
u64 cross_correlation(const Permutation& f1, const Permutation& f2, i64 u,
                      i64 v, const CorrelationMode& mode);

// All nonzero cross-correlation values at fixed u, keyed by v.  Periodic
// vertical keys are canonical residues in [0, P_v - 1].
std::map<i64, u64> vertical_profile(const Permutation& f1, const Permutation& f2,
                                    i64 u, const CorrelationMode& mode);

enum class Family { W1, G2 };

// One (spec pair, offset) attaining the scan maximum.  For W1, spec fields
// are (g, c); for G2 they are the exponents (s, t) of (a, b) relative to
// the field generator.
struct ScanWitness {
  u64 spec1_a = 0, spec1_b = 0;
  u64 spec2_a = 0, spec2_b = 0;
  i64 u = 0, v = 0;
  auto operator<=>(const ScanWitness&) const = default;
};

struct PairScanReport {
  Family family = Family::W1;
  u64 field_size = 0;
  u64 max_value = 0;
  std::vector<ScanWitness> argmax;  // deterministic scan order
  u64 pairs_examined = 0;           // permutation pairs covered by the scan
};

// Maximal cross-correlation over all pairs of W1 permutations generated by
// different primitive roots of p, all horizontal shifts u (periodic mod
// p-1), and all v (or v = 0 only).  The shift-closure of the W1 family
// under c-translation reduces the scan to u = 0 over c-shifted pairs, and
// the pair (g^a, g^b) profile depends only on b/a mod p-1, which cuts the
// pair loop to one representative per root ratio.
PairScanReport welch_pair_scan(u64 p, bool v_zero_only);

// Maximal cross-correlation over all ordered pairs of distinct G2
// permutations of a prime field, both axes periodic mod q-1.
PairScanReport golomb_pair_scan(const CyclicField& field);

struct VerifyResult {
  bool holds = false;
  std::string details;  // names the violating witness when !holds
};

// Checks max over W1 pairs of the u-axis correlation against
// (p-1) / (smallest prime dividing (p-1)/2).
VerifyResult verify_w1_u_axis_theorem(u64 p);

// Checks that the W1 pair maximum at (0,0) exceeds by exactly 1 the G2
// maximum at (0,0) over pairs (a,b), (a^r,b) with r > 1 coprime to p-1.
VerifyResult verify_thm_gw(u64 p);

enum class ConjectureStatus { holds, violated, skipped };

struct ConjectureReport {
  // Full (u,v) W1 maximum equals the (0,0) W1 maximum (non-Germain p).
  ConjectureStatus w1_full_vs_origin = ConjectureStatus::skipped;
  // Full (u,v) G2 maximum equals the (0,0) maximum over pairs sharing the
  // second primitive root (non-Germain p, p != 19).
  ConjectureStatus g2_full_vs_shared_b = ConjectureStatus::skipped;
  // Full W1 maximum equals full G2 maximum plus 1 (non-Germain p, p != 19).
  ConjectureStatus w1_vs_g2_plus_one = ConjectureStatus::skipped;
  std::string details;
};

ConjectureReport verify_conjectures(u64 p);

struct Rational {
  u64 num = 0, den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// 2 * phi(p-1)^2 / p, the asymptotic cost ratio of a G2 pair scan over a
// W1 pair scan; used to guard expensive G2 runs.
Rational complexity_ratio(u64 p);

// Estimated G2 pair count phi(p-1)^2 * (phi(p-1)^2 - 1) / 2, the guard
// quantity for golomb_pair_scan refusals.
u64 golomb_scan_pair_count(u64 p);

} // namespace costas

#endif
