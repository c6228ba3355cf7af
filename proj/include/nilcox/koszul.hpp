#pragma once

// Quadratic duality for the interval ring. z_relation_space lists the
// quadratic relations of the interval ring as integer rows over the ordered
// pair basis e_{g,h} of the degree two slice of the free algebra;
// nilcactus_relations lists the relations of the signed nilcactus algebra,
// which is the quadratic dual. perpendicular computes the annihilator of a
// row space under the transposed dual basis pairing
//
//   < e'_{c,d} , e_{a,b} > = [c == b][d == a],
//
// the pairing under which the perpendicular of the interval ring relations
// is exactly the nilcactus relation space. Graded ranks of the dual come in
// two independent flavours: dense elimination on the slices of the free
// algebra over F_p, and counting normal form words against the adjacency
// graph of reversed canonical monomials.

#include <utility>
#include <vector>

#include "nilcox/extengine.hpp"
#include "nilcox/zring.hpp"

namespace nilcox {

// Integer rows over the ordered pair basis of generator words of length two;
// the pair (g, h) sits at flat index g * gens.size() + h.
struct QuadraticSpace {
  int n = 0;
  std::vector<std::pair<int, int>> gens;  // ascending interval pairs
  std::vector<std::vector<long long>> rows;
};

// Ascending interval pairs (i, j), 1 <= i < j <= n, ordered lexicographically.
std::vector<std::pair<int, int>> interval_pairs(int n);

// Quadratic relations of the interval ring: overlapping products vanish,
// containment products rewrite across the reflected inner interval, disjoint
// products commute up to the sign (-1)^{dd'}.
QuadraticSpace z_relation_space(int n);

// Quadratic relations of the signed nilcactus algebra: squares vanish,
// containment rewrites carry the same sign (-1)^{dd'} as in the interval
// ring, and disjoint products commute up to -(-1)^{dd'}.
QuadraticSpace nilcactus_relations(int n);

// Annihilator of x.rows under the transposed dual basis pairing, over F_p
// for p > 0 and over the rationals for p == 0. Rows are returned as
// primitive integer vectors (content one, first entry positive).
QuadraticSpace perpendicular(const QuadraticSpace& x, int p = 0);

// Row space equality over F_p (p > 0) or over the rationals (p == 0).
bool same_row_space(const QuadraticSpace& x, const QuadraticSpace& y, int p = 0);

// Graded ranks of the nilcactus algebra by word length, indices 0..cap.
// x_graded_ranks_linear eliminates on the two-sided ideal slices of the free
// algebra over F_p; x_graded_ranks_counted enumerates the canonical
// monomials of the interval ring by word length and inverts the Hilbert
// series, H_X(t) = 1 / H_Z(-t). Agreement of the two is a numerical witness
// of the duality. (Counting normal words of the nilcactus rewriting itself
// overcounts from length three on, at n >= 4 the rewriting is not confluent,
// which is why the counting method goes through the series inversion.)
std::vector<long long> x_graded_ranks_linear(int n, int cap, int p);
std::vector<long long> x_graded_ranks_counted(int n, int cap);

// The interval ring with every monomial of length > maxlen set to zero, as a
// finite dimensional algebra over F_p graded by word length. Feeding this to
// ExtResolution measures the nilcactus product signs independently.
FiniteDimAlgebra truncated_interval_ring(int n, int maxlen, int p);

}  // namespace nilcox
