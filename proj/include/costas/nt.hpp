#ifndef COSTAS_NT_HPP
#define COSTAS_NT_HPP

#include <cstdint>
#include <vector>

namespace costas {

using u16 = std::uint16_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime(u64 n);

u64 mod_pow(u64 base, u64 exp, u64 modulus);

// Inverse of a modulo m; requires gcd(a, m) = 1.
u64 mod_inv(u64 a, u64 m);

// Distinct prime factors, ascending.
std::vector<u64> prime_factors(u64 n);

u64 euler_phi(u64 n);

// All k in [1, n-1] with gcd(k, n) = 1, ascending.  units_mod(1) = {0}
// by convention (the trivial group).
std::vector<u64> units_mod(u64 n);

// True iff (p-1)/2 is prime; p must be prime.
bool is_sophie_germain(u64 p);

// Least prime dividing (p-1)/2; requires odd prime p >= 5.
u64 smallest_prime_of_half(u64 p);

// Primes p in [lo, hi] with (p-1)/2 prime, ascending.
std::vector<u64> sophie_germain_primes(u64 lo, u64 hi);

// Legendre symbol (i/p) in {-1, 0, +1} by Euler's criterion; p odd prime.
int legendre(i64 i, u64 p);

// h(-p) = -(1/p) * sum_{i=1}^{p-1} (i/p) * i, for prime p > 3, p = 3 mod 4.
u64 class_number(u64 p);

// Smallest primitive root of F(p).  Returns 1 for p = 2.
u64 smallest_primitive_root(u64 p);

// All primitive roots of F(p), ascending.  {1} for p = 2.
std::vector<u64> primitive_roots(u64 p);

// Multiplicative order of a modulo p (a nonzero mod p, p prime).
u64 mult_order(u64 a, u64 p);

std::vector<u64> primes_upto(u64 n);

} // namespace costas

#endif
