#ifndef COSTAS_GOLOMB_HPP
#define COSTAS_GOLOMB_HPP

#include <vector>

#include "costas/field.hpp"
#include "costas/permutation.hpp"

namespace costas {

// Golomb parameters over a field of size q: primitive elements a = alpha^s
// and b = alpha^t, both exponents coprime to q - 1.  The permutation of
// order q - 2 solves a^i + b^(f(i)) = 1.
struct GolombSpec {
  u64 s = 0;  // exponent of a
  u64 t = 0;  // exponent of b
};

Permutation golomb_generate(const CyclicField& field, const GolombSpec& spec);

// Same, with a and b given as field elements (integer residue or bitmask).
Permutation golomb_generate_elems(const CyclicField& field, u32 a, u32 b);

// Minimal representatives of the orbits of the units mod 2^m - 1 under
// doubling (the Frobenius action on exponents); each orbit has size m.
std::vector<u64> frobenius_orbit_reps(u64 order, int m);

// All distinct Golomb permutations of the field, sorted.  In characteristic
// 2 the Frobenius identity golomb(a,b) = golomb(a^2,b^2) is used to skip
// redundant (a,b) pairs; the result is deduplicated by content either way,
// giving phi(q-1)^2 / m permutations.
std::vector<Permutation> golomb_enumerate_distinct(const CyclicField& field);

} // namespace costas

#endif
