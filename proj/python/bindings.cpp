// Python module _khtensor: algebra dimensions, Khovanov tables from both
// pipelines, Jones polynomials and the decategorification data.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "khtensor/cupcap.hpp"
#include "khtensor/decat.hpp"
#include "khtensor/khovanov.hpp"
#include "khtensor/table.hpp"

namespace py = pybind11;
using namespace kht;

namespace {

std::map<int, std::int64_t> coeffs(const LaurentPoly& p) { return {p.terms().begin(), p.terms().end()}; }

py::tuple key(const std::vector<int>& v) { return py::tuple(py::cast(v)); }

struct FieldGuard {
  explicit FieldGuard(const std::string& name) : scope(Field::parse(name)) {}
  FieldScope scope;
};

}  // namespace

PYBIND11_MODULE(_khtensor, m) {
  m.doc() = "Tensor product algebras and Khovanov homology";
  m.attr("__version__") = KHT_VERSION;

  m.def("algebra_dim", [](int l, int k) { return TensorAlgebra(l, k).dim(); }, py::arg("l"), py::arg("k"));
  m.def(
      "verify_relations",
      [](int l, int k, const std::string& field) {
        FieldGuard f(field);
        const auto rep = verify_relations(TensorAlgebra(l, k));
        return py::make_tuple(rep.checked, rep.failures);
      },
      py::arg("l"), py::arg("k"), py::arg("field") = "q");
  m.def(
      "hom_dims",
      [](int l, int k) {
        TensorAlgebra alg(l, k);
        py::dict out;
        for (int a = 0; a < alg.num_kappas(); ++a)
          for (int b = 0; b < alg.num_kappas(); ++b)
            out[py::make_tuple(key(alg.kappa(a).v), key(alg.kappa(b).v))] = py::cast(alg.block_graded_dim(a, b));
        return out;
      },
      py::arg("l"), py::arg("k"), "Graded dimensions of e_a T e_b keyed by (kappa_a, kappa_b).");
  m.def(
      "pairing",
      [](const std::vector<int>& a, const std::vector<int>& b, int k) {
        const int l = static_cast<int>(a.size());
        return coeffs(pairing(vector_p(Kappa{l, k, a}), vector_p(Kappa{l, k, b})));
      },
      py::arg("kappa"), py::arg("kappa_prime"), py::arg("k"));
  m.def(
      "jones",
      [](const std::vector<int>& braid, int strands) {
        int n = strands;
        if (n <= 0)
          for (int g : braid) n = std::max(n, std::abs(g) + 1);
        return coeffs(jones_polynomial(braid, std::max(n, 1)));
      },
      py::arg("braid"), py::arg("strands") = 0, "Coefficients {degree: coefficient} of the unnormalized Jones polynomial.");
  m.def(
      "kh",
      [](const std::vector<int>& braid, int strands, const std::string& engine, const std::string& field) {
        FieldGuard f(field);
        int n = strands;
        if (n <= 0)
          for (int g : braid) n = std::max(n, std::abs(g) + 1);
        LinkDiagram d{braid, std::max(n, 1)};
        d.validate();
        if (engine == "cube") return kh_cube(d).ranks();
        if (engine == "functor") {
          FunctorEngine eng;
          return khovanov_ranks(eng.run(trace_closure(d.braid, d.strands)));
        }
        throw std::invalid_argument("engine must be 'cube' or 'functor'");
      },
      py::arg("braid"), py::arg("strands") = 0, py::arg("engine") = "cube", py::arg("field") = "q",
      "Bigraded Khovanov ranks {(h, q): rank} of a braid closure.");
  m.def(
      "jw_coefficients",
      [](int l, int k, int degree) {
        py::dict out;
        for (const auto& [v, p] : jw_matrix(l, k, degree)) out[key(v)] = py::cast(coeffs(p));
        return out;
      },
      py::arg("l"), py::arg("k"), py::arg("degree") = 12);
}
