#pragma once

// Exact dense linear algebra over a runtime prime field F_p, plus a drop-in
// rational field so the same elimination code runs over Q (boost::rational).

#include <array>
#include <cassert>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

namespace nilcox {

struct FpField {
  using value_type = int64_t;
  int64_t p = 2;

  explicit FpField(int64_t prime = 2) : p(prime) { assert(p >= 2); }

  value_type zero() const { return 0; }
  value_type one() const { return 1 % p; }
  value_type from_int(int64_t x) const {
    int64_t r = x % p;
    return r < 0 ? r + p : r;
  }
  bool is_zero(value_type a) const { return a == 0; }
  value_type add(value_type a, value_type b) const { return (a + b) % p; }
  value_type sub(value_type a, value_type b) const { return (a - b + p) % p; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type mul(value_type a, value_type b) const { return (a * b) % p; }
  value_type inv(value_type a) const {
    // extended Euclid; p prime and a != 0
    assert(a != 0);
    int64_t t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
      int64_t q = r / newr;
      int64_t tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    return from_int(t);
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
};

// F_p for small p stored in bytes, with every reduction done by a lookup
// table so elimination inner loops contain no integer division. The table
// must cover a*b for a, b < p, hence the p <= 13 limit.
struct ByteField {
  using value_type = uint8_t;
  int p = 2;
  std::array<uint8_t, 256> red{};
  std::array<uint8_t, 16> invt{};

  explicit ByteField(int prime = 2) : p(prime) {
    assert(p >= 2 && p <= 13);
    for (int x = 0; x < 256; ++x) red[x] = (uint8_t)(x % p);
    for (int a = 1; a < p; ++a)
      for (int b = 1; b < p; ++b)
        if (a * b % p == 1) invt[a] = (uint8_t)b;
  }
  value_type zero() const { return 0; }
  value_type one() const { return (uint8_t)(1 % p); }
  value_type from_int(int64_t x) const {
    int64_t r = x % p;
    return (uint8_t)(r < 0 ? r + p : r);
  }
  bool is_zero(value_type a) const { return a == 0; }
  value_type add(value_type a, value_type b) const { return red[a + b]; }
  value_type sub(value_type a, value_type b) const { return red[a + p - b]; }
  value_type neg(value_type a) const { return a == 0 ? 0 : (uint8_t)(p - a); }
  value_type mul(value_type a, value_type b) const { return red[a * b]; }
  value_type inv(value_type a) const {
    assert(a != 0);
    return invt[a];
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
};

struct RationalField {
  using value_type = boost::rational<long long>;

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_int(int64_t x) const { return value_type((long long)x); }
  bool is_zero(const value_type& a) const { return a.numerator() == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const { return value_type(1) / a; }
  value_type div(const value_type& a, const value_type& b) const { return a / b; }
};

// Row-major dense matrix; rows are the vectors of interest throughout.
template <class F>
struct Mat {
  using V = typename F::value_type;
  F field;
  int rows = 0, cols = 0;
  std::vector<V> a;

  Mat() = default;
  Mat(F f, int r, int c) : field(f), rows(r), cols(c), a((size_t)r * c, f.zero()) {}

  V& at(int r, int c) { return a[(size_t)r * cols + c]; }
  const V& at(int r, int c) const { return a[(size_t)r * cols + c]; }

  void append_row(const std::vector<V>& row) {
    assert((int)row.size() == cols || (rows == 0 && cols == 0));
    if (rows == 0 && cols == 0) cols = (int)row.size();
    a.insert(a.end(), row.begin(), row.end());
    ++rows;
  }

  Mat transposed() const {
    Mat t(field, cols, rows);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
  }
};

// Reduced row echelon form in place; returns pivot column per echelon row.
template <class F>
std::vector<int> rref(Mat<F>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int sel = -1;
    for (int i = r; i < m.rows; ++i)
      if (!m.field.is_zero(m.at(i, c))) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    auto piv = m.field.inv(m.at(r, c));
    for (int j = c; j < m.cols; ++j) m.at(r, j) = m.field.mul(m.at(r, j), piv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.field.is_zero(m.at(i, c))) continue;
      auto f = m.at(i, c);
      for (int j = c; j < m.cols; ++j)
        m.at(i, j) = m.field.sub(m.at(i, j), m.field.mul(f, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
int rank_of(Mat<F> m) {
  return (int)rref(m).size();
}

// Basis of {x : x . M^T = 0}? No: right null space, i.e. all x with M x = 0,
// returned as rows of length m.cols.
template <class F>
Mat<F> kernel_basis(Mat<F> m) {
  auto pivots = rref(m);
  std::vector<char> is_pivot(m.cols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  Mat<F> ker(m.field, 0, m.cols);
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<typename F::value_type> v(m.cols, m.field.zero());
    v[c] = m.field.one();
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = m.field.neg(m.at((int)r, c));
    ker.append_row(v);
  }
  return ker;
}

// Incremental row span with pivot bookkeeping: supports rank queries,
// membership tests, and expressing a vector over the inserted generators.
template <class F>
struct Span {
  using V = typename F::value_type;
  F field;
  int cols;
  std::vector<std::vector<V>> rows;   // echelonized
  std::vector<std::vector<V>> combos; // combos[r] over inserted vectors
  std::vector<int> pivot_col;
  int inserted = 0;

  Span(F f, int c) : field(f), cols(c) {}

  int dim() const { return (int)rows.size(); }

  // Reduce v against the span; record the combination if track != nullptr.
  void reduce(std::vector<V>& v, std::vector<V>* track) const {
    for (size_t r = 0; r < rows.size(); ++r) {
      const V& lead = v[pivot_col[r]];
      if (field.is_zero(lead)) continue;
      V f = lead;
      for (int c = 0; c < cols; ++c)
        v[c] = field.sub(v[c], field.mul(f, rows[r][c]));
      if (track)
        for (int k = 0; k < (int)track->size() && k < (int)combos[r].size(); ++k)
          (*track)[k] = field.sub((*track)[k], field.mul(f, combos[r][k]));
    }
  }

  // Insert a vector; returns true if it enlarged the span.
  bool insert(std::vector<V> v) {
    std::vector<V> combo(inserted + 1, field.zero());
    combo[inserted] = field.one();
    ++inserted;
    for (auto& c : combos) c.push_back(field.zero());
    reduce(v, &combo);
    int lead = -1;
    for (int c = 0; c < cols; ++c)
      if (!field.is_zero(v[c])) {
        lead = c;
        break;
      }
    if (lead < 0) return false;
    V piv = field.inv(v[lead]);
    for (int c = 0; c < cols; ++c) v[c] = field.mul(v[c], piv);
    for (auto& x : combo) x = field.mul(x, piv);
    rows.push_back(std::move(v));
    combos.push_back(std::move(combo));
    pivot_col.push_back(lead);
    return true;
  }

  bool contains(std::vector<V> v) const {
    reduce(v, nullptr);
    for (auto& x : v)
      if (!field.is_zero(x)) return false;
    return true;
  }

  // Coefficients c (over inserted vectors) with sum_i c_i * gen_i = v.
  std::optional<std::vector<V>> express(std::vector<V> v) const {
    std::vector<V> combo(inserted, field.zero());
    reduce(v, &combo);
    for (auto& x : v)
      if (!field.is_zero(x)) return std::nullopt;
    for (auto& x : combo) x = field.neg(x);
    return combo;
  }
};

}  // namespace nilcox
