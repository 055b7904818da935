#include "costas/nt.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace costas {

static u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 mod_pow(u64 base, u64 exp, u64 modulus) {
  if (modulus < 2) throw std::invalid_argument("mod_pow: modulus must be >= 2");
  u64 r = 1 % modulus;
  base %= modulus;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, modulus);
    base = mul_mod(base, base, modulus);
    exp >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  // This witness set decides primality for all n < 2^64 (Sinclair).
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

u64 mod_inv(u64 a, u64 m) {
  i64 t = 0, new_t = 1;
  i64 r = static_cast<i64>(m), new_r = static_cast<i64>(a % m);
  while (new_r != 0) {
    i64 q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::invalid_argument("mod_inv: arguments not coprime");
  return static_cast<u64>(t < 0 ? t + static_cast<i64>(m) : t);
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 euler_phi(u64 n) {
  if (n == 0) throw std::invalid_argument("euler_phi: n must be >= 1");
  u64 phi = n;
  for (u64 f : prime_factors(n)) phi -= phi / f;
  return phi;
}

std::vector<u64> units_mod(u64 n) {
  if (n == 1) return {0};
  std::vector<u64> out;
  for (u64 k = 1; k < n; ++k)
    if (std::gcd(k, n) == 1) out.push_back(k);
  return out;
}

bool is_sophie_germain(u64 p) { return is_prime(p) && p >= 5 && is_prime((p - 1) / 2); }

u64 smallest_prime_of_half(u64 p) {
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("smallest_prime_of_half: need odd prime p >= 5");
  u64 h = (p - 1) / 2;
  for (u64 d = 2; d * d <= h; ++d)
    if (h % d == 0) return d;
  return h;
}

std::vector<u64> sophie_germain_primes(u64 lo, u64 hi) {
  std::vector<u64> out;
  for (u64 p = std::max<u64>(lo, 5); p <= hi; ++p)
    if (is_prime(p) && is_prime((p - 1) / 2)) out.push_back(p);
  return out;
}

int legendre(i64 i, u64 p) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("legendre: p must be an odd prime");
  i64 r = i % static_cast<i64>(p);
  if (r < 0) r += static_cast<i64>(p);
  if (r == 0) return 0;
  u64 e = mod_pow(static_cast<u64>(r), (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

u64 class_number(u64 p) {
  if (p <= 3 || p % 4 != 3 || !is_prime(p))
    throw std::invalid_argument("class_number: need prime p > 3 with p = 3 mod 4");
  i64 sum = 0;
  for (u64 i = 1; i < p; ++i)
    sum += legendre(static_cast<i64>(i), p) * static_cast<i64>(i);
  // sum is -p * h(-p) under the precondition
  if (sum >= 0 || sum % static_cast<i64>(p) != 0)
    throw std::logic_error("class_number: Legendre sum not divisible by p");
  return static_cast<u64>(-sum) / p;
}

u64 mult_order(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw std::invalid_argument("mult_order: a must be nonzero mod p");
  u64 order = p - 1;
  for (u64 f : prime_factors(p - 1)) {
    while (order % f == 0 && mod_pow(a, order / f, p) == 1) order /= f;
  }
  return order;
}

u64 smallest_primitive_root(u64 p) {
  if (!is_prime(p)) throw std::invalid_argument("smallest_primitive_root: p must be prime");
  if (p == 2) return 1;
  auto factors = prime_factors(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool primitive = true;
    for (u64 f : factors) {
      if (mod_pow(g, (p - 1) / f, p) == 1) { primitive = false; break; }
    }
    if (primitive) return g;
  }
  throw std::logic_error("smallest_primitive_root: none found");
}

std::vector<u64> primitive_roots(u64 p) {
  if (!is_prime(p)) throw std::invalid_argument("primitive_roots: p must be prime");
  if (p == 2) return {1};
  u64 g0 = smallest_primitive_root(p);
  std::vector<u64> out;
  out.reserve(euler_phi(p - 1));
  u64 x = 1;
  for (u64 k = 1; k < p - 1; ++k) {
    x = static_cast<u64>((static_cast<unsigned __int128>(x) * g0) % p);
    if (std::gcd(k, p - 1) == 1) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> primes_upto(u64 n) {
  std::vector<bool> comp(n + 1, false);
  std::vector<u64> out;
  for (u64 i = 2; i <= n; ++i) {
    if (!comp[i]) {
      out.push_back(i);
      for (u64 j = i * i; j <= n; j += i) comp[j] = true;
    }
  }
  return out;
}

} // namespace costas
