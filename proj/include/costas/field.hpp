#ifndef COSTAS_FIELD_HPP
#define COSTAS_FIELD_HPP

#include <optional>
#include <vector>

#include "costas/nt.hpp"

namespace costas {

// GF(2^m) with exp/log tables over a primitive polynomial.  Elements are
// polynomial bitmasks; alpha is the residue of x and has order 2^m - 1.
struct BinaryFieldContext {
  int m = 0;
  u32 poly = 0;                // degree-m primitive polynomial, bit m set
  std::vector<u32> exp_table;  // size 2^m - 1, exp_table[k] = alpha^k
  std::vector<u32> log_table;  // size 2^m, inverse on nonzero elements

  u64 order() const { return (u64{1} << m) - 1; }  // multiplicative order
};

// Build GF(2^m), 1 <= m <= 16.  Without poly, uses the lexicographically
// least primitive polynomial of degree m.  A supplied poly must be primitive
// (order of x equal to 2^m - 1) or the call throws.
BinaryFieldContext binary_field(int m, std::optional<u32> poly = std::nullopt);

// Exponents k in [1, 2^m - 2] with gcd(k, 2^m - 1) = 1; alpha^k ranges over
// the primitive elements.  For m = 1 returns {0} (trivial group).
std::vector<u64> bf_primitive_elements(const BinaryFieldContext& ctx);

// Discrete log of x to base alpha^k, gcd(k, 2^m - 1) = 1.
u64 bf_dlog(const BinaryFieldContext& ctx, u32 x, u64 base_exponent);

// Uniform view of F(p) or GF(2^m) keyed by a fixed generator alpha:
// exp/log tables plus the one-minus map, which is all the Golomb
// construction and the correlation scans need.
struct CyclicField {
  u64 q = 0;  // field size
  u64 p = 0;  // characteristic
  int m = 1;  // extension degree
  std::vector<u32> exp;  // size q - 1, exp[e] = alpha^e
  std::vector<u32> log;  // size q, log[x] for nonzero x

  u64 n() const { return q - 1; }
  bool char2() const { return p == 2; }
  u32 one_minus(u32 x) const {
    return char2() ? (x ^ 1u) : static_cast<u32>((q + 1 - x) % q);
  }
};

// F(p) with alpha = smallest primitive root.
CyclicField prime_cyclic_field(u64 p);

CyclicField to_cyclic_field(const BinaryFieldContext& ctx);

} // namespace costas

#endif
