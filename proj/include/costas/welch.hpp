#ifndef COSTAS_WELCH_HPP
#define COSTAS_WELCH_HPP

#include <vector>

#include "costas/permutation.hpp"

namespace costas {

// Exponential Welch parameters: f(i) = g^(i-1+c) mod p on [p-1].
struct WelchSpec {
  u64 p = 0;  // prime
  u64 g = 0;  // primitive root of p
  u64 c = 0;  // shift in [0, p-2]
};

Permutation welch_generate(const WelchSpec& spec);

// Entry c is the number of fixed points of W1(p, g, c).  Computed in O(p)
// total: each i in [p-1] is fixed for exactly one c, namely
// c = (dlog_g(i) - (i-1)) mod (p-1), so the entries sum to p-1.
std::vector<u64> welch_fixed_point_profile(u64 p, u64 g);

} // namespace costas

#endif
