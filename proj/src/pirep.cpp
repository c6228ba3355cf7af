#include "nilcox/pirep.hpp"

#include <cassert>
#include <random>
#include <sstream>
#include <stdexcept>

#include "nilcox/fp.hpp"

namespace nilcox {

bool IntMat::is_zero() const {
  for (long long v : a)
    if (v != 0) return false;
  return true;
}

IntMat mat_add(const IntMat& x, const IntMat& y) {
  assert(x.size == y.size);
  IntMat r = x;
  for (size_t k = 0; k < r.a.size(); ++k) r.a[k] += y.a[k];
  return r;
}

IntMat mat_scale(const IntMat& x, long long c) {
  IntMat r = x;
  for (auto& v : r.a) v *= c;
  return r;
}

IntMat mat_mul(const IntMat& x, const IntMat& y) {
  assert(x.size == y.size);
  int m = x.size;
  IntMat r(m);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      long long v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < m; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

MatrixRep rep_a2(long long t1, long long t2) {
  MatrixRep rep;
  rep.n = 3;
  rep.size = 2;
  IntMat x(2), y(2), z(2);
  x.at(0, 0) = t1;
  y.at(1, 1) = -t1;
  z.at(0, 1) = z.at(1, 0) = t2;
  rep.gen[{1, 2}] = x;
  rep.gen[{2, 3}] = y;
  rep.gen[{1, 3}] = z;
  return rep;
}

MatrixRep rep_doubling(const MatrixRep& base, long long t_new) {
  int n = base.n + 1;
  int m = base.size;
  MatrixRep rep;
  rep.n = n;
  rep.size = 2 * m;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (i == 1 && j == n) continue;
      IntMat g(2 * m);
      if (j <= n - 1) {
        const IntMat& top = base.at(i, j);
        for (int r = 0; r < m; ++r)
          for (int c = 0; c < m; ++c) g.at(r, c) = top.at(r, c);
      }
      // reflected generator, with the sign of the twist by z_{1,n}; it fits
      // the base window [1,n-1] exactly when i >= 2
      if (i >= 2) {
        int ri = n + 1 - j, rj = n + 1 - i;
        long long s = (n * (j - i)) % 2 ? -1 : 1;
        const IntMat& b = base.at(ri, rj);
        for (int r = 0; r < m; ++r)
          for (int c = 0; c < m; ++c) g.at(m + r, m + c) = s * b.at(r, c);
      }
      rep.gen[{i, j}] = g;
    }
  IntMat zn(2 * m);
  for (int r = 0; r < m; ++r) zn.at(r, m + r) = zn.at(m + r, r) = t_new;
  rep.gen[{1, n}] = zn;
  return rep;
}

MatrixRep rep_interval_ring(int n, const std::vector<long long>& t) {
  if (n < 2 || (int)t.size() != n - 1)
    throw std::invalid_argument("need n >= 2 and n-1 parameter values");
  MatrixRep rep;
  rep.n = 2;
  rep.size = 1;
  IntMat g(1);
  g.at(0, 0) = t[0];
  rep.gen[{1, 2}] = g;
  for (int k = 3; k <= n; ++k) rep = rep_doubling(rep, t[k - 2]);
  return rep;
}

std::vector<std::string> verify_homomorphism(const MatrixRep& rep) {
  std::vector<std::string> bad;
  auto report = [&](int i, int j, int i2, int j2, const char* what) {
    std::ostringstream os;
    os << "z[" << i << "," << j << "] z[" << i2 << "," << j2 << "]: " << what;
    bad.push_back(os.str());
  };
  int n = rep.n;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int i2 = 1; i2 < n; ++i2)
        for (int j2 = i2 + 1; j2 <= n; ++j2) {
          if (i == i2 && j == j2) continue;
          const IntMat& g = rep.at(i, j);
          const IntMat& h = rep.at(i2, j2);
          if (i <= i2 && j2 <= j) {
            // z_{i,j} z_{i',j'} = (-1)^{dd'} z_{i+j-i',i+j-j'} z_{i,j};
            // the reflected pair is descending, so normalizing it adds
            // another (-1)^{d'}
            int d = j - i, d2 = j2 - i2;
            long long s = (d * d2 + d2) % 2 ? -1 : 1;
            IntMat lhs = mat_mul(g, h);
            IntMat rhs = mat_scale(mat_mul(rep.at(i + j - j2, i + j - i2), g), s);
            if (!(lhs == rhs)) report(i, j, i2, j2, "containment rewrite fails");
          } else if (i2 <= i && j <= j2) {
            continue;  // checked from the containing side
          } else if (j < i2 || j2 < i) {
            if (std::make_pair(i, j) > std::make_pair(i2, j2)) continue;
            long long s = ((j - i) * (j2 - i2)) % 2 ? -1 : 1;
            IntMat lhs = mat_mul(g, h);
            IntMat rhs = mat_scale(mat_mul(h, g), s);
            if (!(lhs == rhs)) report(i, j, i2, j2, "signed commutation fails");
          } else {
            if (!mat_mul(g, h).is_zero()) report(i, j, i2, j2, "overlap product nonzero");
          }
        }
  return bad;
}

int image_dimension(const MatrixRep& rep, int p) {
  ByteField f(p);
  int m = rep.size;
  int w = m * m;
  auto reduce = [&](const IntMat& g) {
    std::vector<uint8_t> v(w);
    for (int k = 0; k < w; ++k) v[k] = f.from_int(g.a[k]);
    return v;
  };
  std::vector<std::vector<uint8_t>> gens;
  for (auto& [ij, g] : rep.gen) gens.push_back(reduce(g));
  auto mul = [&](const std::vector<uint8_t>& x, const std::vector<uint8_t>& y) {
    std::vector<uint8_t> r(w, 0);
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k) {
        uint8_t v = x[i * m + k];
        if (!v) continue;
        for (int j = 0; j < m; ++j)
          r[i * m + j] = f.add(r[i * m + j], f.mul(v, y[k * m + j]));
      }
    return r;
  };
  Span<ByteField> span(f, w);
  std::vector<std::vector<uint8_t>> basis;
  std::vector<uint8_t> id(w, 0);
  for (int i = 0; i < m; ++i) id[i * m + i] = f.one();
  span.insert(id);
  basis.push_back(id);
  // every word in the generators is reachable by right multiplication
  for (size_t head = 0; head < basis.size(); ++head) {
    std::vector<uint8_t> cur = basis[head];
    for (auto& g : gens) {
      auto prod = mul(cur, g);
      if (span.insert(prod)) basis.push_back(prod);
    }
  }
  return span.dim();
}

bool tensor_embedding_check(int split, const std::vector<int>& degrees,
                            int samples, unsigned seed) {
  int r = (int)degrees.size();
  if (split < 0 || split > r) throw std::invalid_argument("bad split");
  // concrete values for the u_j, kept small and distinct
  std::vector<long long> u(r);
  for (int j = 0; j < r; ++j) u[j] = 2 * j + 3;
  auto gen_mat = [&](int j) {
    IntMat g(2);
    if (degrees[j] % 2 == 0) {
      g.at(0, 0) = g.at(1, 1) = u[j];
    } else if (j < split) {
      g.at(0, 0) = u[j];
      g.at(1, 1) = -u[j];
    } else {
      g.at(0, 1) = g.at(1, 0) = u[j];
    }
    return g;
  };
  auto phi = [&](const std::vector<int>& exp) {
    IntMat acc(2);
    acc.at(0, 0) = acc.at(1, 1) = 1;
    for (int j = 0; j < r; ++j)
      for (int e = 0; e < exp[j]; ++e) acc = mat_mul(acc, gen_mat(j));
    return acc;
  };
  auto odd_count = [&](const std::vector<int>& exp, int from, int to) {
    int c = 0;
    for (int j = from; j < to; ++j)
      if (degrees[j] % 2) c += exp[j];
    return c;
  };
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int s = 0; s < samples; ++s) {
    std::vector<int> e1(r), e2(r);
    for (int j = 0; j < r; ++j) {
      e1[j] = pick(rng);
      e2[j] = pick(rng);
    }
    // crossing sign: odd right-factor part of m1 moves past the odd
    // left-factor part of m2
    int cross = odd_count(e1, split, r) * odd_count(e2, 0, split);
    std::vector<int> e(r);
    for (int j = 0; j < r; ++j) e[j] = e1[j] + e2[j];
    IntMat lhs = mat_mul(phi(e1), phi(e2));
    IntMat rhs = mat_scale(phi(e), cross % 2 ? -1 : 1);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool splits_at_cut(const ZRing::Key& m, int i) {
  for (auto& fct : m)
    if (fct.lo() <= i && i < fct.hi()) return false;
  return true;
}

}  // namespace nilcox
