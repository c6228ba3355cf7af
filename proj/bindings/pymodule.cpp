// Python bindings for the main operations: group and algebra summaries,
// canonical forms in the interval ring, resolution checks, generic engine
// ranks, quadratic duality, and the matrix representation certificates.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nilcox/coxeter.hpp"
#include "nilcox/extengine.hpp"
#include "nilcox/koszul.hpp"
#include "nilcox/nilcoxeter.hpp"
#include "nilcox/pirep.hpp"
#include "nilcox/verify.hpp"
#include "nilcox/zring.hpp"

namespace py = pybind11;
using namespace nilcox;

PYBIND11_MODULE(_nilcox, m) {
  m.doc() =
      "exact computations for nilCoxeter algebras, the interval ring, and its "
      "Koszul dual";

  m.def("loewy_dims", &NilCoxeterAlgebra::loewy_dims, py::arg("n"),
        "radical layer sizes of the nilCoxeter algebra on n strands");

  m.def(
      "group_info",
      [](const std::string& diagram) {
        auto G = CoxeterGroup::build(diagram);
        py::dict d;
        d["rank"] = G->rank();
        d["order"] = G->order();
        d["max_length"] = G->max_length();
        d["longest_word"] = G->word(G->longest());
        d["length_histogram"] = G->length_histogram();
        return d;
      },
      py::arg("diagram"), "order, longest element, and length histogram");

  m.def("zring_rank", &ZRing::rank, py::arg("n"), py::arg("degree"),
        "free rank of the interval ring in one internal degree");

  m.def(
      "normalize",
      [](int n, const std::string& word, bool with_signs) {
        ZRing R(n, with_signs);
        auto input = ZRing::parse_text(word, n);
        auto canon = R.normalize_monomial(input.factors);
        canon.sign *= input.sign;
        py::dict d;
        d["canonical"] = ZRing::to_text(canon);
        d["sign"] = canon.sign;
        if (canon.sign != 0) {
          auto rev = R.reversed(canon.factors);
          rev.sign *= canon.sign;
          auto bd = ZRing::bidegree(canon.factors);
          d["reversed"] = ZRing::to_text(rev);
          d["tuple"] = ZRing::f_decode(n, canon.factors);
          d["bidegree"] = py::make_tuple(bd.first, bd.second);
        }
        return d;
      },
      py::arg("n"), py::arg("word"), py::arg("with_signs") = false,
      "canonical and reversed forms of a monomial given as text");

  m.def(
      "check_resolution",
      [](int n, int cap) {
        return check_complex_validity(n, cap) && check_minimality(n, cap) &&
               (n <= 4 ? check_homotopy_exhaustive(n, cap)
                       : check_homotopy_sampled(n, cap, 1000, 12345));
      },
      py::arg("n"), py::arg("degree_cap") = 6,
      "differentials square to zero, are minimal, and the homotopy splits");

  m.def(
      "ext_ranks",
      [](const std::string& diagram, int p, int steps) {
        ExtResolution r(
            FiniteDimAlgebra::nilcoxeter(*CoxeterGroup::build(diagram), p));
        return r.ranks(steps);
      },
      py::arg("diagram"), py::arg("p"), py::arg("steps") = 4,
      "generic engine Ext dimensions by homological step over F_p");

  m.def(
      "koszul_duality",
      [](int n, int p) {
        auto z = z_relation_space(n);
        auto x = nilcactus_relations(n);
        auto perp = perpendicular(z, p);
        return perp.rows.size() == x.rows.size() && same_row_space(perp, x, p);
      },
      py::arg("n"), py::arg("p") = 0,
      "perpendicular of the ring relations equals the nilcactus relations "
      "(p = 0 means over the rationals)");

  m.def(
      "x_graded_ranks",
      [](int n, int cap, int p) {
        py::dict d;
        d["linear"] = x_graded_ranks_linear(n, cap, p);
        d["counted"] = x_graded_ranks_counted(n, cap);
        return d;
      },
      py::arg("n"), py::arg("cap") = 4, py::arg("p") = 3,
      "nilcactus graded ranks by elimination and by series inversion");

  m.def(
      "image_dimension",
      [](int n, int p) {
        std::vector<long long> ones(n - 1, 1);
        return nilcox::image_dimension(rep_interval_ring(n, ones), p);
      },
      py::arg("n"), py::arg("p"),
      "dimension over F_p of the matrix algebra generated at unit parameters");

  m.def(
      "verify_matrix_relations",
      [](int n) {
        const long long primes[8] = {2, 3, 5, 7, 11, 13, 17, 19};
        return verify_homomorphism(
            rep_interval_ring(n, {primes, primes + (n - 1)}));
      },
      py::arg("n"),
      "violated relation instances at distinct prime parameters (empty means "
      "a homomorphism)");

  m.def(
      "verify_all",
      [](bool quick) {
        std::ostringstream out, log;
        int failures = verify_all(quick, out, log);
        return py::make_tuple(failures, out.str());
      },
      py::arg("quick") = true,
      "run the ten acceptance checks; returns (failures, report)");
}
