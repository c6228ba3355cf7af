#pragma once

// The nilCoxeter algebra N_W over the integers: sparse Y_w arithmetic, the
// trace picking out Y_{w0}, the Nakayama twist by psi, Loewy layer data, and
// the type-A interval words Y_{[i,j]} and Y_{[i,j];k} with their canonical
// factorization.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nilcox/coxeter.hpp"

namespace nilcox {

// terms: element id -> coefficient; never stores zeros. The zero element is
// the empty map.
using NilElt = std::map<CoxeterGroup::Elt, long long>;

class NilCoxeterAlgebra {
 public:
  explicit NilCoxeterAlgebra(std::shared_ptr<const CoxeterGroup> G);

  const CoxeterGroup& group() const { return *G_; }
  std::shared_ptr<const CoxeterGroup> group_ptr() const { return G_; }

  NilElt unit() const { return {{0, 1}}; }
  NilElt basis(CoxeterGroup::Elt w) const { return {{w, 1}}; }
  NilElt gen(int s) const;  // Y_{s}, s in [1, rank]

  NilElt add(const NilElt& a, const NilElt& b) const;
  NilElt scale(const NilElt& a, long long c) const;
  NilElt multiply(const NilElt& a, const NilElt& b) const;
  long long trace(const NilElt& a) const;
  NilElt psi(const NilElt& a) const;

  // product of generators, zero element when the word is not reduced
  NilElt from_word(const std::vector<int>& letters) const;

  bool is_homogeneous(const NilElt& a, int* degree = nullptr) const;

  // Type A (diagram A:n-1, group S_n) interval machinery.
  int type_a_n() const;  // throws unless the diagram is A:n-1
  NilElt interval(int i, int j) const;              // Y_{[i,j]}, i <= j
  NilElt interval_power(int i, int j, int k) const; // Y_{[i,j];k}
  std::vector<int> interval_word(int i, int j) const;
  std::vector<int> interval_power_word(int i, int j, int k) const;

  // The unique (m_1,...,m_{n-1}) with Y_w = Y_{[1,m_1]} ... Y_{[n-1,m_{n-1}]}.
  std::vector<int> canonical_decompose(CoxeterGroup::Elt w) const;

  // Mahonian numbers: coefficients of prod_{i=1}^{n-1} (1 + x + ... + x^i).
  static std::vector<long long> loewy_dims(int n);

  // JSON element format:
  //   {"diagram":"A:3","terms":[{"word":[2,1,3],"coeff":1}]}
  // Words re-reduce on load: a non-reduced word contributes zero.
  std::string to_json(const NilElt& a) const;
  NilElt from_json(const std::string& text) const;

 private:
  std::shared_ptr<const CoxeterGroup> G_;
  mutable std::vector<std::vector<int>> canon_;  // id -> tuple, lazily built
  void build_canonical_map() const;
};

}  // namespace nilcox
