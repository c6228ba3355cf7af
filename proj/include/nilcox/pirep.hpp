#pragma once

// Finite dimensional matrix representations of the interval ring: the 2x2
// representation for three strands, the block doubling recursion that grows
// an n strand representation of size 2^{n-2} from the (n-1) strand one,
// relation checking over the integers at concrete parameter values, and the
// dimension of the generated matrix algebra over a small prime field.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilcox/zring.hpp"

namespace nilcox {

// Square integer matrix, row major.
struct IntMat {
  int size = 0;
  std::vector<long long> a;
  IntMat() = default;
  explicit IntMat(int m) : size(m), a((size_t)m * m, 0) {}
  long long& at(int r, int c) { return a[(size_t)r * size + c]; }
  long long at(int r, int c) const { return a[(size_t)r * size + c]; }
  bool is_zero() const;
  friend bool operator==(const IntMat& x, const IntMat& y) = default;
};

IntMat mat_add(const IntMat& x, const IntMat& y);
IntMat mat_scale(const IntMat& x, long long c);
IntMat mat_mul(const IntMat& x, const IntMat& y);

// One matrix per generator z_{i,j}, 1 <= i < j <= n, stored under the
// ascending index pair, with the parameters already evaluated at integers.
// Size is 2^{n-2} (one dimensional for n = 2).
struct MatrixRep {
  int n = 2;
  int size = 1;
  std::map<std::pair<int, int>, IntMat> gen;
  const IntMat& at(int i, int j) const { return gen.at({i, j}); }
};

// Three strands on two dimensions:
//   z_{1,2} -> [[t1,0],[0,0]]    z_{2,3} -> [[0,0],[0,-t1]]
//   z_{1,3} -> [[0,t2],[t2,0]]
MatrixRep rep_a2(long long t1, long long t2);

// One doubling step from n-1 to n strands. A generator inside [1,n-1] keeps
// its base matrix in the top diagonal block; the bottom block carries the
// reflected generator z_{n+1-j,n+1-i} scaled by (-1)^{n(j-i)}, zero when the
// reflection leaves the window. The new generator z_{1,n} becomes the
// antidiagonal pair of scalar blocks t_new.
MatrixRep rep_doubling(const MatrixRep& base, long long t_new);

// The doubling recursion from the 1x1 base z_{1,2} -> (t[0]); t must hold
// n-1 parameter values.
MatrixRep rep_interval_ring(int n, const std::vector<long long>& t);

// Evaluate every defining relation instance on the matrices: containment
// rewriting with its sign, signed commutation of separated pairs, vanishing
// of overlapping products. Returns descriptions of the violated instances,
// empty when the assignment is a homomorphism.
std::vector<std::string> verify_homomorphism(const MatrixRep& rep);

// Dimension over F_p of the unital subalgebra generated by the images.
int image_dimension(const MatrixRep& rep, int p);

// Sampled homomorphism test for the 2x2 embedding of a graded tensor product
// of polynomial rings Z[t_1..t_split] (x) Z[t_{split+1}..t_r]. degrees[j]
// gives |t_{j+1}|; generators of even degree map to u*Id, odd ones on the
// left factor to diag(u,-u) and on the right factor to antidiag(u,u). Checks
// phi(m1)phi(m2) = sign * phi(m1m2) with the crossing sign on sampled
// monomial pairs.
bool tensor_embedding_check(int split, const std::vector<int>& degrees,
                            int samples, unsigned seed);

// True when no factor of the canonical monomial crosses the cut between
// columns i and i+1, i.e. the monomial survives the restriction onto
// Z[1,i] (x) Z[i+1,n].
bool splits_at_cut(const ZRing::Key& m, int i);

}  // namespace nilcox
