#include "nilcox/koszul.hpp"

#include <cassert>
#include <cstdlib>
#include <map>
#include <numeric>

namespace nilcox {

std::vector<std::pair<int, int>> interval_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
  return out;
}

namespace {

// Interval pair classification shared by both relation spaces. For a proper
// containment (i,j) > (i2,j2) the rewrite target is the reflection of the
// inner interval, reported in ascending orientation together with the parity
// of the orientation flip.
enum class PairKind { equal, contains, contained, disjoint, overlap };

PairKind classify(std::pair<int, int> g, std::pair<int, int> h) {
  if (g == h) return PairKind::equal;
  if (g.first <= h.first && h.second <= g.second) return PairKind::contains;
  if (h.first <= g.first && g.second <= h.second) return PairKind::contained;
  if (g.second < h.first || h.second < g.first) return PairKind::disjoint;
  return PairKind::overlap;
}

std::pair<int, int> reflect_inner(std::pair<int, int> g, std::pair<int, int> h) {
  return {g.first + g.second - h.second, g.first + g.second - h.first};
}

QuadraticSpace relation_space(int n, bool dual) {
  QuadraticSpace out;
  out.n = n;
  out.gens = interval_pairs(n);
  int G = (int)out.gens.size();
  std::map<std::pair<int, int>, int> idx;
  for (int g = 0; g < G; ++g) idx[out.gens[g]] = g;

  for (int a = 0; a < G; ++a)
    for (int b = 0; b < G; ++b) {
      auto g = out.gens[a], h = out.gens[b];
      int d = g.second - g.first, d2 = h.second - h.first;
      std::vector<long long> row((size_t)G * G, 0);
      switch (classify(g, h)) {
        case PairKind::equal:
          if (!dual) continue;  // z_g * z_g is a basis monomial
          row[(size_t)a * G + b] = 1;
          break;
        case PairKind::contains: {
          // z_g z_h = (-1)^{dd'} z_{reflected h} z_g with the reflected pair
          // descending, i.e. an extra (-1)^{d'} in ascending orientation; the
          // dual relation carries the opposite sign.
          int c = idx.at(reflect_inner(g, h));
          long long s = ((size_t)d * d2 + d2) % 2 ? -1 : 1;
          if (dual) s = -s;
          row[(size_t)a * G + b] = 1;
          row[(size_t)c * G + a] = -s;
          break;
        }
        case PairKind::contained:
          continue;  // rewritten from the containing side
        case PairKind::disjoint: {
          if (a > b) continue;  // one row per unordered pair
          long long s = ((size_t)d * d2) % 2 ? -1 : 1;
          if (dual) s = -s;
          row[(size_t)a * G + b] = 1;
          row[(size_t)b * G + a] = -s;
          break;
        }
        case PairKind::overlap:
          if (dual) continue;  // overlapping products are free in the dual
          row[(size_t)a * G + b] = 1;
          break;
      }
      out.rows.push_back(std::move(row));
    }
  return out;
}

// Scale an integer row to content one with positive leading entry.
void make_primitive(std::vector<long long>& v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1)
    for (long long& x : v) x /= g;
  for (long long x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (long long& y : v) y = -y;
    break;
  }
}

template <class F>
Mat<F> pairing_matrix(F field, const QuadraticSpace& x) {
  int G = (int)x.gens.size(), W = G * G;
  Mat<F> m(field, (int)x.rows.size(), W);
  for (int r = 0; r < (int)x.rows.size(); ++r)
    for (int c = 0; c < G; ++c)
      for (int d = 0; d < G; ++d)
        m.at(r, c * G + d) = field.from_int(x.rows[r][(size_t)d * G + c]);
  return m;
}

template <class F>
Mat<F> row_matrix(F field, const QuadraticSpace& x) {
  int G = (int)x.gens.size();
  Mat<F> m(field, (int)x.rows.size(), G * G);
  for (int r = 0; r < (int)x.rows.size(); ++r)
    for (int c = 0; c < G * G; ++c) m.at(r, c) = field.from_int(x.rows[r][c]);
  return m;
}

template <class F>
bool same_rows(F field, const QuadraticSpace& x, const QuadraticSpace& y) {
  if (x.gens != y.gens) return false;
  int rx = rank_of(row_matrix(field, x));
  int ry = rank_of(row_matrix(field, y));
  if (rx != ry) return false;
  Mat<F> stack = row_matrix(field, x);
  for (const auto& row : y.rows) {
    std::vector<typename F::value_type> v(stack.cols);
    for (int c = 0; c < stack.cols; ++c) v[c] = field.from_int(row[c]);
    stack.append_row(v);
  }
  return rank_of(stack) == rx;
}

}  // namespace

QuadraticSpace z_relation_space(int n) { return relation_space(n, false); }

QuadraticSpace nilcactus_relations(int n) { return relation_space(n, true); }

QuadraticSpace perpendicular(const QuadraticSpace& x, int p) {
  QuadraticSpace out;
  out.n = x.n;
  out.gens = x.gens;
  if (p == 0) {
    RationalField field;
    Mat<RationalField> ker = kernel_basis(pairing_matrix(field, x));
    for (int r = 0; r < ker.rows; ++r) {
      long long lcm = 1;
      for (int c = 0; c < ker.cols; ++c)
        lcm = std::lcm(lcm, ker.at(r, c).denominator());
      std::vector<long long> v(ker.cols);
      for (int c = 0; c < ker.cols; ++c)
        v[c] = ker.at(r, c).numerator() * (lcm / ker.at(r, c).denominator());
      make_primitive(v);
      out.rows.push_back(std::move(v));
    }
  } else {
    FpField field(p);
    Mat<FpField> ker = kernel_basis(pairing_matrix(field, x));
    for (int r = 0; r < ker.rows; ++r) {
      std::vector<long long> v(ker.cols);
      for (int c = 0; c < ker.cols; ++c) {
        long long e = ker.at(r, c);
        v[c] = e > p / 2 ? e - p : e;  // symmetric lift
      }
      make_primitive(v);
      out.rows.push_back(std::move(v));
    }
  }
  return out;
}

bool same_row_space(const QuadraticSpace& x, const QuadraticSpace& y, int p) {
  if (p == 0) return same_rows(RationalField{}, x, y);
  return same_rows(FpField(p), x, y);
}

std::vector<long long> x_graded_ranks_linear(int n, int cap, int p) {
  ByteField field(p);
  QuadraticSpace rel = nilcactus_relations(n);
  int G = (int)rel.gens.size();
  std::vector<long long> out{1};
  if (cap >= 1) out.push_back(G);
  std::vector<std::vector<uint8_t>> prev;  // echelon basis of the ideal slice
  long long width = G;
  for (int k = 2; k <= cap; ++k) {
    width *= G;
    Span<ByteField> span(field, (int)width);
    long long front = width / ((long long)G * G);
    for (long long w = 0; w < front; ++w)
      for (const auto& r : rel.rows) {
        std::vector<uint8_t> v((size_t)width, 0);
        for (int pr = 0; pr < G * G; ++pr)
          if (r[pr]) v[(size_t)w * G * G + pr] = field.from_int(r[pr]);
        span.insert(std::move(v));
      }
    for (const auto& u : prev)
      for (int g = 0; g < G; ++g) {
        std::vector<uint8_t> v((size_t)width, 0);
        for (size_t w = 0; w < u.size(); ++w)
          if (u[w]) v[w * G + g] = u[w];
        span.insert(std::move(v));
      }
    out.push_back(width - span.dim());
    prev = span.rows;
  }
  return out;
}

std::vector<long long> x_graded_ranks_counted(int n, int cap) {
  // canonical monomial counts of the interval ring by word length
  std::vector<long long> h{1};
  for (int len = 1; len <= cap; ++len) {
    long long c = 0;
    for (int d = len; d <= len * (n - 1); ++d)
      for (const auto& key : ZRing::canonical_monomials(n, d))
        if ((int)key.size() == len) ++c;
    h.push_back(c);
  }
  // coefficients of 1 / H_Z(-t)
  std::vector<long long> x{1};
  for (int k = 1; k <= cap; ++k) {
    long long s = 0;
    for (int i = 1; i <= k; ++i)
      s += (i % 2 ? 1 : -1) * h[i] * x[(size_t)(k - i)];
    x.push_back(s);
  }
  return x;
}

FiniteDimAlgebra truncated_interval_ring(int n, int maxlen, int p) {
  ZRing ring(n, true);
  FiniteDimAlgebra alg;
  alg.field = ByteField(p);
  std::vector<ZRing::Key> basis{ZRing::Key{}};
  alg.degree = {0};
  std::map<ZRing::Key, int> index;
  index[ZRing::Key{}] = 0;
  for (int len = 1; len <= maxlen; ++len)
    for (int d = len; d <= len * (n - 1); ++d)
      for (const auto& key : ZRing::canonical_monomials(n, d))
        if ((int)key.size() == len) {
          index[key] = (int)basis.size();
          basis.push_back(key);
          alg.degree.push_back(len);
        }
  alg.dim = (int)basis.size();
  alg.top = maxlen;
  for (int b = 0; b < alg.dim; ++b)
    if (alg.degree[b] == 1) alg.simples.push_back(b);
  alg.table.assign((size_t)alg.dim * alg.dim, {});
  for (int a = 0; a < alg.dim; ++a)
    for (int b = 0; b < alg.dim; ++b) {
      if (alg.degree[a] + alg.degree[b] > maxlen) continue;
      std::vector<ZFactor> word = basis[a];
      word.insert(word.end(), basis[b].begin(), basis[b].end());
      ZMonomial m = ring.normalize_monomial(word);
      if (m.sign == 0) continue;
      alg.table[(size_t)a * alg.dim + b] = {
          {index.at(m.factors), alg.field.from_int(m.sign)}};
    }
  return alg;
}

}  // namespace nilcox
