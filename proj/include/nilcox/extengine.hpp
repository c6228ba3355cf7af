#pragma once

// Generic Ext computer for finite dimensional graded algebras over F_p.
//
// ExtResolution builds the minimal free resolution of the trivial module one
// homological step at a time: kernels of the previous boundary are computed
// slice by internal degree (dense elimination over F_p), and new generators
// are the kernel slices modulo J * kernel, where J is the graded radical.
// Products of dual basis classes of Ext are evaluated by lifting one class
// to a chain map via per-slice linear solves and reading off the coefficient
// of the other.
//
// presentation_table() returns the expected generators-and-relations
// descriptions of these Ext algebras for the small Coxeter diagrams, and
// match_presentation() searches for a generator labeling (within bidegree
// classes) together with a per-generator sign rescaling under which the
// computed products satisfy every listed relation.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilcox/coxeter.hpp"
#include "nilcox/fp.hpp"

namespace nilcox {

// Graded algebra with a fixed homogeneous basis. Basis 0 is the unit, and
// the positive part must be generated by the degree 1 basis elements; every
// nilCoxeter algebra satisfies this.
struct FiniteDimAlgebra {
  ByteField field;
  int dim = 0;
  int top = 0;  // largest basis degree
  std::vector<int> degree;
  std::vector<int> simples;  // basis indices of degree 1
  // structure constants: terms of basis_a * basis_b at index a * dim + b
  std::vector<std::vector<std::pair<int, uint8_t>>> table;

  static FiniteDimAlgebra nilcoxeter(const CoxeterGroup& g, int prime);

  const std::vector<std::pair<int, uint8_t>>& mult(int a, int b) const {
    return table[(size_t)a * dim + b];
  }
};

class ExtResolution {
 public:
  explicit ExtResolution(FiniteDimAlgebra a);

  const FiniteDimAlgebra& algebra() const { return alg_; }

  void extend(int steps);
  int computed_steps() const { return (int)gdeg_.size() - 1; }
  std::vector<long long> ranks(int steps);
  const std::vector<int>& generator_degrees(int s);

  // boundary column of generator c at step s >= 1, sparse over h * dim + b
  const std::vector<std::pair<int, uint8_t>>& column(int s, int c) const {
    return cols_[s][c];
  }
  // apply the boundary P_s -> P_{s-1} to a dense coefficient vector
  std::vector<uint8_t> boundary_image(int s, const std::vector<uint8_t>& v) const;
  bool minimal_step(int s) const;        // no unit entries in any column
  bool composite_is_zero(int s) const;   // boundary after boundary, s >= 2

  // product of dual basis classes (gen a of step sa) * (gen b of step sb),
  // as coefficients over the generators of step sa + sb
  std::vector<uint8_t> yoneda_product(int sa, int a, int sb, int b);

 private:
  FiniteDimAlgebra alg_;
  std::vector<std::vector<int>> gdeg_;  // generator degrees per step; step 0 = {0}
  std::vector<std::vector<std::vector<std::pair<int, uint8_t>>>> cols_;

  struct SliceSolver {
    std::vector<int> src;  // flat basis indices of the source slice
    std::vector<int> tgt;  // flat basis indices of the target slice
    Span<ByteField> span;  // echelonized boundary columns with combos
    SliceSolver(ByteField f, int width) : span(f, width) {}
  };
  std::map<std::pair<int, int>, SliceSolver> solver_;  // (step, degree)
  std::map<std::array<int, 4>, std::vector<uint8_t>> lifts_;

  void grow_once();
  std::vector<std::vector<int>> slice_lists(int s) const;  // degree -> flats
  SliceSolver& solver(int s, int d);
  const std::vector<uint8_t>& lift(int sb, int b, int i, int c);
};

// Expected Ext presentation: generator bidegrees and a relation list.
// A relation is g*h = 0 when s == 0, and g*h + s * g2*h2 = 0 otherwise.
struct Presentation {
  struct Gen {
    std::string name;
    int step;
    int internal;
  };
  struct Rel {
    int g, h, s = 0, g2 = 0, h2 = 0;
  };
  std::string tag;
  std::vector<Gen> gens;
  std::vector<Rel> rels;
};

// Tags: "A2", "A3", "B2", "G2", "I2:<m>", "B3", "H3", "D4". Odd dihedrals
// share the A2 relation shape, even ones the B2 shape, with the top
// generator's internal degree equal to the bond label.
Presentation presentation_table(const std::string& tag);

struct PresentationMatch {
  std::vector<int> gen;   // engine generator index within its step
  std::vector<int> sign;  // +-1 rescaling under which all relations hold
};

std::optional<PresentationMatch> match_presentation(ExtResolution& r,
                                                    const Presentation& p);

}  // namespace nilcox
