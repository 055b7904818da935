#include "costas/field.hpp"

#include <stdexcept>

namespace costas {

// Fills exp/log for the residue of x modulo poly.  Returns false if x does
// not have full order 2^m - 1 (reducible or non-primitive poly).
static bool try_build_tables(int m, u32 poly, std::vector<u32>& exp_table,
                             std::vector<u32>& log_table) {
  const u64 n = (u64{1} << m) - 1;
  const u32 high = u32{1} << m;
  exp_table.assign(n, 0);
  log_table.assign(n + 1, 0);
  u32 x = 1;
  for (u64 k = 0; k < n; ++k) {
    if (x == 1 && k > 0) return false;  // order of x divides k < n
    exp_table[k] = x;
    log_table[x] = static_cast<u32>(k);
    x <<= 1;
    if (x & high) x ^= poly;
  }
  return x == 1;
}

BinaryFieldContext binary_field(int m, std::optional<u32> poly) {
  if (m < 1 || m > 16) throw std::invalid_argument("binary_field: need 1 <= m <= 16");
  BinaryFieldContext ctx;
  ctx.m = m;
  if (poly) {
    ctx.poly = *poly;
    const u32 high = u32{1} << m;
    if ((ctx.poly & high) == 0 || ctx.poly >= (high << 1) || (ctx.poly & 1) == 0)
      throw std::invalid_argument("binary_field: poly must have degree m and constant term 1");
    if (!try_build_tables(m, ctx.poly, ctx.exp_table, ctx.log_table))
      throw std::invalid_argument("binary_field: poly is not primitive");
    return ctx;
  }
  for (u32 cand = (u32{1} << m) + 1; cand < (u32{1} << (m + 1)); cand += 2) {
    if (try_build_tables(m, cand, ctx.exp_table, ctx.log_table)) {
      ctx.poly = cand;
      return ctx;
    }
  }
  throw std::logic_error("binary_field: no primitive polynomial found");
}

std::vector<u64> bf_primitive_elements(const BinaryFieldContext& ctx) {
  return units_mod(ctx.order());
}

u64 bf_dlog(const BinaryFieldContext& ctx, u32 x, u64 base_exponent) {
  if (x == 0) throw std::invalid_argument("bf_dlog: log of zero");
  const u64 n = ctx.order();
  if (n == 1) return 0;
  return (ctx.log_table[x] * mod_inv(base_exponent, n)) % n;
}

CyclicField prime_cyclic_field(u64 p) {
  if (!is_prime(p)) throw std::invalid_argument("prime_cyclic_field: p must be prime");
  CyclicField f;
  f.q = p;
  f.p = p;
  f.m = 1;
  const u64 g = smallest_primitive_root(p);
  f.exp.resize(p - 1);
  f.log.resize(p);
  u64 x = 1;
  for (u64 e = 0; e < p - 1; ++e) {
    f.exp[e] = static_cast<u32>(x);
    f.log[x] = static_cast<u32>(e);
    x = (x * g) % p;
  }
  return f;
}

CyclicField to_cyclic_field(const BinaryFieldContext& ctx) {
  CyclicField f;
  f.q = u64{1} << ctx.m;
  f.p = 2;
  f.m = ctx.m;
  f.exp.assign(ctx.exp_table.begin(), ctx.exp_table.end());
  f.log.assign(ctx.log_table.begin(), ctx.log_table.end());
  return f;
}

} // namespace costas
