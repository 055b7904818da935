#include "costas/welch.hpp"

#include <stdexcept>

namespace costas {

Permutation welch_generate(const WelchSpec& spec) {
  const u64 p = spec.p;
  if (!is_prime(p)) throw std::invalid_argument("welch_generate: p must be prime");
  if (p == 2) return Permutation({1});  // degenerate single-dot case, g = 1
  if (spec.c > p - 2) throw std::invalid_argument("welch_generate: c out of range");
  if (mult_order(spec.g, p) != p - 1)
    throw std::invalid_argument("welch_generate: g is not a primitive root");
  std::vector<i64> vals(p - 1);
  u64 x = mod_pow(spec.g, spec.c, p);
  for (u64 i = 0; i < p - 1; ++i) {
    vals[i] = static_cast<i64>(x);
    x = (x * spec.g) % p;
  }
  return Permutation(std::move(vals));
}

std::vector<u64> welch_fixed_point_profile(u64 p, u64 g) {
  if (!is_prime(p)) throw std::invalid_argument("welch_fixed_point_profile: p must be prime");
  if (p == 2) return {1};
  if (mult_order(g, p) != p - 1)
    throw std::invalid_argument("welch_fixed_point_profile: g is not a primitive root");
  const u64 n = p - 1;
  std::vector<u64> dlog(p);
  u64 x = 1;
  for (u64 e = 0; e < n; ++e) {
    dlog[x] = e;
    x = (x * g) % p;
  }
  std::vector<u64> profile(n, 0);
  for (u64 i = 1; i <= n; ++i) {
    const u64 c = (dlog[i] + n - ((i - 1) % n)) % n;
    ++profile[c];
  }
  return profile;
}

} // namespace costas
