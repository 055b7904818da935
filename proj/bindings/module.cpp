// pybind11 bindings for the core operations.

#include <bit>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "costas/experiments.hpp"
#include "costas/golomb.hpp"
#include "costas/welch.hpp"
#include "costas/xcorr.hpp"

namespace py = pybind11;
using namespace costas;

namespace {

std::vector<i64> perm_values(const Permutation& f) {
  return {f.values().begin(), f.values().end()};
}

CorrelationMode mode_from_name(const std::string& name, u64 n) {
  if (name == "aperiodic") return CorrelationMode::aperiodic();
  if (name == "welch") return CorrelationMode::welch(n);
  if (name == "golomb") return CorrelationMode::golomb(n);
  throw std::invalid_argument("mode must be aperiodic, welch, or golomb");
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Costas permutations: Welch/Golomb constructions, correlation "
            "scans, parity populations, diagonal statistics";

  m.def("welch", [](u64 p, u64 g, u64 c) { return perm_values(welch_generate({p, g, c})); },
        py::arg("p"), py::arg("g"), py::arg("c") = 0,
        "W1 permutation of order p-1 as a list of one-based values");

  m.def("golomb",
        [](u64 q, u64 s, u64 t) {
          const auto F = (q % 2 == 0) ? to_cyclic_field(binary_field(std::countr_zero(q)))
                                      : prime_cyclic_field(q);
          if ((q & (q - 1)) != 0 && !is_prime(q))
            throw std::invalid_argument("q must be prime or a power of 2");
          return perm_values(golomb_generate(F, {s, t}));
        },
        py::arg("q"), py::arg("s") = 1, py::arg("t") = 1,
        "G2 permutation of order q-2; s, t are exponents of the two "
        "primitive roots relative to the field generator");

  m.def("is_costas",
        [](const std::vector<i64>& values) { return is_costas(Permutation(values)); },
        py::arg("values"));

  m.def("parity_populations",
        [](const std::vector<i64>& values) {
          const auto q = parity_populations(Permutation(values));
          return py::make_tuple(q.ee, q.eo, q.oe, q.oo);
        },
        py::arg("values"), "Quadrant populations (ee, eo, oe, oo)");

  m.def("cross_correlation",
        [](const std::vector<i64>& f1, const std::vector<i64>& f2, i64 u, i64 v,
           const std::string& mode) {
          const Permutation a(f1), b(f2);
          return cross_correlation(a, b, u, v, mode_from_name(mode, a.order()));
        },
        py::arg("f1"), py::arg("f2"), py::arg("u"), py::arg("v"),
        py::arg("mode") = "aperiodic");

  m.def("primitive_roots", [](u64 p) { return primitive_roots(p); }, py::arg("p"));

  m.def("welch_pair_scan_max",
        [](u64 p, bool v_zero_only) { return welch_pair_scan(p, v_zero_only).max_value; },
        py::arg("p"), py::arg("v_zero_only") = false,
        "Maximal cross-correlation over W1 pairs with distinct roots");

  m.def("golomb_pair_scan_max",
        [](u64 p) { return golomb_pair_scan(prime_cyclic_field(p)).max_value; },
        py::arg("p"), "Maximal cross-correlation over distinct G2 pairs");

  m.def("diagonal_table",
        [](u64 p_max, int workers) {
          py::list rows;
          for (const auto& r : table1_scan(p_max, workers))
            rows.append(py::make_tuple(r.p, r.max_s, r.fit, r.err));
          return rows;
        },
        py::arg("p_max"), py::arg("workers") = 1,
        "Rows (p, max_s, fit, err) for every prime p <= p_max");

  m.def("parity_classes",
        [](int m_deg) {
          py::list rows;
          for (const auto& r : table2_scan(m_deg))
            rows.append(py::make_tuple(r.ee, r.eo, r.count));
          return rows;
        },
        py::arg("m"), "Parity classes (ee, eo, count) of GF(2^m) G2 permutations");

  m.def("fixed_point_free_ratio",
        [](u64 p) {
          const auto r = fixed_point_free_ratio(p);
          return py::make_tuple(r.num, r.den);
        },
        py::arg("p"), "Reduced fraction of (g, c) pairs whose W1 permutation "
                      "has no fixed point");

  m.def("complexity_ratio",
        [](u64 p) {
          const auto r = complexity_ratio(p);
          return py::make_tuple(r.num, r.den);
        },
        py::arg("p"));
}
