#include "costas/golomb.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace costas {

Permutation golomb_generate(const CyclicField& field, const GolombSpec& spec) {
  const u64 n = field.n();
  if (field.q < 4) throw std::invalid_argument("golomb_generate: need field size >= 4");
  if (std::gcd(spec.s, n) != 1 || std::gcd(spec.t, n) != 1)
    throw std::invalid_argument("golomb_generate: a and b must be primitive");
  const u64 t_inv = mod_inv(spec.t, n);
  std::vector<i64> vals(field.q - 2);
  for (u64 i = 1; i <= field.q - 2; ++i) {
    const u32 ai = field.exp[(spec.s * i) % n];
    const u32 rhs = field.one_minus(ai);
    if (rhs == 0) throw std::logic_error("golomb_generate: 1 - a^i vanished");
    vals[i - 1] = static_cast<i64>((u64{field.log[rhs]} * t_inv) % n);
  }
  return Permutation(std::move(vals));
}

Permutation golomb_generate_elems(const CyclicField& field, u32 a, u32 b) {
  if (a == 0 || b == 0) throw std::invalid_argument("golomb_generate_elems: zero element");
  return golomb_generate(field, GolombSpec{field.log[a], field.log[b]});
}

std::vector<u64> frobenius_orbit_reps(u64 order, int m) {
  std::vector<u64> reps;
  for (u64 k : units_mod(order)) {
    bool minimal = true;
    u64 x = k;
    for (int d = 1; d < m; ++d) {
      x = (x * 2) % order;
      if (x < k) { minimal = false; break; }
    }
    if (minimal) reps.push_back(k);
  }
  return reps;
}

std::vector<Permutation> golomb_enumerate_distinct(const CyclicField& field) {
  if (field.q < 4) throw std::invalid_argument("golomb_enumerate_distinct: need field size >= 4");
  const u64 n = field.n();
  const auto units = units_mod(n);
  const auto first = field.char2() ? frobenius_orbit_reps(n, field.m) : units;
  std::set<Permutation> seen;
  for (u64 s : first)
    for (u64 t : units)
      seen.insert(golomb_generate(field, GolombSpec{s, t}));
  return {seen.begin(), seen.end()};
}

} // namespace costas
