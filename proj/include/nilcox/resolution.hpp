#pragma once

// The multiple complex C = N tensor Z-dual over the type A nilCoxeter
// algebra N of S_n: one free summand per (n-1)-tuple of nonnegative integers
// (a cell), with commuting square-zero maps tilde_d_k that lower t_k by one,
// turned into anticommuting differentials d_k by the usual sign rule.  The
// total complex is a minimal free resolution of the trivial module, with an
// explicit contracting homotopy; Yoneda products of the dual cell basis are
// computed by comparison lifting through it.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nilcox/nilcoxeter.hpp"
#include "nilcox/zring.hpp"

namespace nilcox {

class Resolution {
 public:
  explicit Resolution(int n);  // symmetric group S_n, n >= 2

  using Cell = std::vector<int>;  // n-1 nonnegative entries
  using GroupElt = CoxeterGroup::Elt;
  // chain element: (cell, basis element of N) -> coefficient, no zeros
  using Elt = std::map<std::pair<Cell, GroupElt>, long long>;

  int n() const { return n_; }
  const CoxeterGroup& group() const { return alg_.group(); }
  const NilCoxeterAlgebra& algebra() const { return alg_; }

  std::vector<Cell> cells(int total_degree) const;
  static int total_degree(const Cell& t);
  int internal_degree(const Cell& t) const;  // of f_encode(t), nonpositive

  // cell of the generator dual to z_{i,j}: the indicator tuple of [i, j-1]
  Cell generator_cell(int i, int j) const;

  // One leg of the unsigned differential tilde_d_k on the cell t: the
  // coefficient is an interval power word located by walking the canonical
  // factors of f_encode(t) into reversed order while reflecting the index k
  // across every strictly containing factor that crosses the tracked one.
  struct Leg {
    GroupElt coeff;         // Y_{[i,j];1+k-i} for the reflected (i, j, k)
    std::vector<int> word;  // its generator word
    Cell target;            // t with t_k lowered by one
  };
  std::optional<Leg> tilde_leg(const Cell& t, int k) const;

  static int sign(const Cell& t, int k);  // (-1)^{t_1+...+t_{k-1}}

  Elt tilde_d(int k, const Elt& e) const;
  Elt d(int k, const Elt& e) const;  // signed leg
  Elt d(const Elt& e) const;         // total differential

  // Contracting homotopy: on a monomial Y.t scan k = 1..n-1 for the first k
  // with d_k(Y.t) nonzero or Y.t in the image of d_k; in the image case peel
  // the coefficient word off Y and raise t_k (with the matching sign), else
  // zero.  Satisfies d h + h d = 1 away from the augmentation.
  Elt homotopy(const Elt& e) const;

  // Yoneda product of dual cells: lift the cocycle dual to cell_b through
  // the resolution by |cell_a| steps and read off the coefficient of
  // (cell_a, identity) on every start cell of degree |a|+|b|.  The result
  // functional is returned in the dual cell basis, keyed by f_encode.
  ZRing::Elt yoneda_product(const Cell& cell_a, const Cell& cell_b) const;

 private:
  int n_;
  NilCoxeterAlgebra alg_;
  // comparison lifts g_s(1 . t) for the cocycle dual to a fixed cell,
  // keyed by (dual cell, start cell); s is their degree difference
  mutable std::map<std::pair<Cell, Cell>, Elt> lift_memo_;

  Elt left_mul(GroupElt w, const Elt& e) const;
  const Elt& lift(const Cell& dual, const Cell& from) const;
};

}  // namespace nilcox
