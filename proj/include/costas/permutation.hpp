#ifndef COSTAS_PERMUTATION_HPP
#define COSTAS_PERMUTATION_HPP

#include <span>
#include <string>
#include <vector>

#include "costas/nt.hpp"

namespace costas {

// One-based bijection on [n].  vals[i] = f(i+1), entries in [1, n].
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<i64> values);  // throws if not a bijection

  int order() const { return static_cast<int>(vals_.size()); }
  i64 operator()(int i) const { return vals_[i - 1]; }  // one-based
  std::span<const i64> values() const { return vals_; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<i64> vals_;
};

// Space-separated one-based values, e.g. "2 3 1".
std::string to_line(const Permutation& f);
Permutation from_line(const std::string& line);

// Distance-vector distinctness, checked per horizontal distance: for each
// d in [1, n-1] the differences f(i+d) - f(i) must be pairwise distinct.
bool is_costas(const Permutation& f);

Permutation hflip(const Permutation& f);      // i -> f(n+1-i)
Permutation vflip(const Permutation& f);      // i -> n+1-f(i)
Permutation transpose(const Permutation& f);  // inverse permutation

// (ee, eo, oe, oo) dot counts by parity of index and value:
// ee: both even; eo: index odd, value even; oe: index even, value odd;
// oo: both odd.
struct ParityQuad {
  u64 ee = 0, eo = 0, oe = 0, oo = 0;
  bool operator==(const ParityQuad&) const = default;
};

ParityQuad parity_populations(const Permutation& f);

// |{i : f(i) = i}|
u64 fixed_point_count(const Permutation& f);

} // namespace costas

#endif
