#include "costas/permutation.hpp"

#include <sstream>
#include <stdexcept>

namespace costas {

Permutation::Permutation(std::vector<i64> values) : vals_(std::move(values)) {
  const i64 n = static_cast<i64>(vals_.size());
  std::vector<bool> seen(n, false);
  for (i64 v : vals_) {
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument("Permutation: values are not a bijection on [n]");
    seen[v - 1] = true;
  }
}

std::string to_line(const Permutation& f) {
  std::ostringstream out;
  for (int i = 0; i < f.order(); ++i) {
    if (i) out << ' ';
    out << f.values()[i];
  }
  return out.str();
}

Permutation from_line(const std::string& line) {
  std::istringstream in(line);
  std::vector<i64> vals;
  i64 v;
  while (in >> v) vals.push_back(v);
  return Permutation(std::move(vals));
}

bool is_costas(const Permutation& f) {
  const int n = f.order();
  auto v = f.values();
  // seen[] is indexed by difference + n; touched entries reset per distance.
  std::vector<bool> seen(2 * n + 1, false);
  for (int d = 1; d < n; ++d) {
    bool ok = true;
    for (int i = 0; i + d < n; ++i) {
      const i64 diff = v[i + d] - v[i] + n;
      if (seen[diff]) { ok = false; }
      seen[diff] = true;
    }
    for (int i = 0; i + d < n; ++i) seen[v[i + d] - v[i] + n] = false;
    if (!ok) return false;
  }
  return true;
}

Permutation hflip(const Permutation& f) {
  const int n = f.order();
  std::vector<i64> out(n);
  for (int i = 1; i <= n; ++i) out[i - 1] = f(n + 1 - i);
  return Permutation(std::move(out));
}

Permutation vflip(const Permutation& f) {
  const int n = f.order();
  std::vector<i64> out(n);
  for (int i = 1; i <= n; ++i) out[i - 1] = n + 1 - f(i);
  return Permutation(std::move(out));
}

Permutation transpose(const Permutation& f) {
  const int n = f.order();
  std::vector<i64> out(n);
  for (int i = 1; i <= n; ++i) out[f(i) - 1] = i;
  return Permutation(std::move(out));
}

ParityQuad parity_populations(const Permutation& f) {
  ParityQuad q;
  for (int i = 1; i <= f.order(); ++i) {
    const bool io = i & 1, vo = f(i) & 1;
    if (io) { vo ? ++q.oo : ++q.eo; } else { vo ? ++q.oe : ++q.ee; }
  }
  return q;
}

u64 fixed_point_count(const Permutation& f) {
  u64 count = 0;
  for (int i = 1; i <= f.order(); ++i)
    if (f(i) == i) ++count;
  return count;
}

} // namespace costas
