#pragma once

// Finite Coxeter groups: diagram parsing, full enumeration with (length,
// ShortLex) element ids, generator multiplication tables, length, longest
// element, and the conjugation automorphism psi(w) = w0 w w0.
//
// Types A/B/D/I2 use direct combinatorial representations ((signed)
// permutations, dihedral pairs); H3 and explicit bond matrices go through a
// reduced-word engine that decides equality by closure under braid moves.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace nilcox {

struct CoxeterDiagram {
  enum class Family { A, B, D, I2, H, Matrix };
  Family family = Family::A;
  int rank = 1;
  int i2_m = 0;                         // bond for I2
  std::vector<std::vector<int>> bond;   // m_ij, 1 on the diagonal
  std::string label;                    // normalized spec string, e.g. "A:3"

  // Accepts "A:4", "B:3", "D:4", "I2:7", "H:3", "G:2" (alias for I2:6),
  // and "matrix:[[1,3],[3,1]]".
  static CoxeterDiagram parse(const std::string& s);

  int m(int i, int j) const { return bond[i - 1][j - 1]; }  // 1-based
};

class CoxeterGroup {
 public:
  using Elt = int32_t;

  explicit CoxeterGroup(const CoxeterDiagram& d, size_t max_order = 1000000);
  static std::shared_ptr<const CoxeterGroup> build(const std::string& diagram,
                                                   size_t max_order = 1000000);

  const CoxeterDiagram& diagram() const { return diag_; }
  int rank() const { return diag_.rank; }
  size_t order() const { return order_; }

  int length(Elt w) const { return length_[w]; }
  int max_length() const { return length_[longest_]; }
  Elt longest() const { return longest_; }

  // Generators are 1-based (s in [1, rank]).
  Elt right(Elt w, int s) const { return right_[(size_t)w * rank_ + (s - 1)]; }
  Elt left(int s, Elt w) const { return left_[(size_t)w * rank_ + (s - 1)]; }
  std::pair<Elt, int> right_mul_gen(Elt w, int s) const {
    Elt v = right(w, s);
    return {v, length_[v] > length_[w] ? +1 : -1};
  }

  Elt multiply(Elt a, Elt b) const;
  Elt inverse(Elt w) const { return inverse_[w]; }
  Elt psi(Elt w) const { return multiply(multiply(longest_, w), longest_); }

  // ShortLex reduced word (1-based generator letters).
  const std::vector<int>& word(Elt w) const { return word_[w]; }
  Elt from_word(const std::vector<int>& letters) const;

  // nilCoxeter products: result id, or -1 when lengths do not add.
  Elt nil_multiply(Elt a, Elt b) const {
    Elt c = multiply(a, b);
    return length_[c] == length_[a] + length_[b] ? c : Elt(-1);
  }
  Elt nil_from_word(const std::vector<int>& letters) const;

  std::vector<int64_t> length_histogram() const;

 private:
  CoxeterDiagram diag_;
  int rank_ = 0;
  size_t order_ = 0;
  std::vector<int> length_;
  std::vector<Elt> right_, left_, inverse_;
  std::vector<std::vector<int>> word_;
  Elt longest_ = 0;

  void build_tables(size_t max_order);
};

}  // namespace nilcox
