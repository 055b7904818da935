#include "doctest.h"

#include <numeric>

#include "costas/nt.hpp"

using namespace costas;

namespace {

bool trial_division_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

} // namespace

TEST_CASE("is_prime basics") {
  CHECK(is_prime(2));
  CHECK(is_prime(4999));
  CHECK_FALSE(is_prime(2047));  // 23 * 89
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("is_prime matches trial division below 5000") {
  for (u64 n = 0; n < 5000; ++n) CHECK(is_prime(n) == trial_division_prime(n));
}

TEST_CASE("euler_phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(4) == 2);  // {1, 3}
  CHECK(euler_phi(2047) == 1936);
  for (u64 n = 1; n <= 200; ++n) {
    u64 direct = 0;
    for (u64 k = 1; k <= n; ++k)
      if (std::gcd(k, n) == 1) ++direct;
    CHECK(euler_phi(n) == direct);
  }
}

TEST_CASE("sophie germain predicate") {
  CHECK(is_sophie_germain(5));
  CHECK_FALSE(is_sophie_germain(13));
  CHECK(is_sophie_germain(563));
  const auto g = sophie_germain_primes(5, 563);
  CHECK(g.size() == 19);
  CHECK(g.front() == 5);
  CHECK(g.back() == 563);
}

TEST_CASE("smallest_prime_of_half") {
  CHECK(smallest_prime_of_half(13) == 2);
  CHECK(smallest_prime_of_half(11) == 5);
  CHECK(smallest_prime_of_half(23) == 11);
  CHECK_THROWS(smallest_prime_of_half(3));
}

TEST_CASE("mod_pow") {
  CHECK(mod_pow(2, 0, 5) == 1);
  CHECK(mod_pow(2, 3, 5) == 3);
  CHECK(mod_pow(3, 6, 7) == 1);
  for (u64 m = 2; m <= 50; ++m) {
    for (u64 b = 0; b < m; ++b) {
      u64 naive = 1 % m;
      for (u64 e = 0; e <= 100; ++e) {
        CHECK(mod_pow(b, e, m) == naive);
        naive = (naive * b) % m;
      }
    }
  }
}

TEST_CASE("primitive_roots against order-check oracle") {
  CHECK(primitive_roots(3) == std::vector<u64>{2});
  CHECK(primitive_roots(5) == std::vector<u64>{2, 3});
  CHECK(primitive_roots(7) == std::vector<u64>{3, 5});
  for (u64 p : primes_upto(61)) {
    if (p == 2) continue;
    std::vector<u64> direct;
    for (u64 g = 2; g < p; ++g)
      if (mult_order(g, p) == p - 1) direct.push_back(g);
    CHECK(primitive_roots(p) == direct);
  }
}

TEST_CASE("primitive root count is phi(p-1) for p <= 500") {
  for (u64 p : primes_upto(500))
    CHECK(primitive_roots(p).size() == euler_phi(p - 1));
}

TEST_CASE("legendre symbol") {
  CHECK(legendre(1, 7) == 1);
  CHECK(legendre(3, 7) == -1);  // squares mod 7 are {1, 2, 4}
  CHECK(legendre(7, 7) == 0);
  CHECK_THROWS(legendre(1, 2));
  // square-set oracle
  for (u64 p : primes_upto(200)) {
    if (p == 2) continue;
    std::vector<bool> is_sq(p, false);
    for (u64 x = 1; x < p; ++x) is_sq[(x * x) % p] = true;
    for (i64 i = -5; i < static_cast<i64>(2 * p); ++i) {
      i64 r = ((i % static_cast<i64>(p)) + p) % static_cast<i64>(p);
      int expected = r == 0 ? 0 : (is_sq[r] ? 1 : -1);
      CHECK(legendre(i, p) == expected);
    }
  }
}

TEST_CASE("class_number") {
  CHECK(class_number(7) == 1);   // (1+2+4)-(3+5+6) = -7
  CHECK(class_number(11) == 1);  // 22-33 = -11
  CHECK(class_number(23) == 3);  // 92-161 = -69
  CHECK_THROWS(class_number(3));
  CHECK_THROWS(class_number(13));  // 1 mod 4
  for (u64 p : primes_upto(1000)) {
    if (p > 3 && p % 4 == 3) CHECK(class_number(p) >= 1);
  }
}

TEST_CASE("mod_inv") {
  for (u64 m : {7ull, 12ull, 100ull})
    for (u64 a = 1; a < m; ++a)
      if (std::gcd(a, m) == 1) CHECK((a * mod_inv(a, m)) % m == 1);
  CHECK_THROWS(mod_inv(4, 12));
}
