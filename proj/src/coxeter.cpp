#include "nilcox/coxeter.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <boost/rational.hpp>
#include <json.hpp>

namespace nilcox {

namespace {

std::vector<std::vector<int>> path_bonds(int rank) {
  std::vector<std::vector<int>> m(rank, std::vector<int>(rank, 2));
  for (int i = 0; i < rank; ++i) m[i][i] = 1;
  for (int i = 0; i + 1 < rank; ++i) m[i][i + 1] = m[i + 1][i] = 3;
  return m;
}

}  // namespace

CoxeterDiagram CoxeterDiagram::parse(const std::string& s) {
  CoxeterDiagram d;
  auto colon = s.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("diagram string needs the form TYPE:ARG: " + s);
  std::string head = s.substr(0, colon), arg = s.substr(colon + 1);

  if (head == "matrix") {
    auto j = nlohmann::json::parse(arg);
    int r = (int)j.size();
    if (r < 1) throw std::invalid_argument("empty bond matrix");
    d.family = Family::Matrix;
    d.rank = r;
    d.bond.assign(r, std::vector<int>(r, 2));
    for (int i = 0; i < r; ++i) {
      if ((int)j[i].size() != r)
        throw std::invalid_argument("bond matrix must be square");
      for (int k = 0; k < r; ++k) d.bond[i][k] = j[i][k].get<int>();
    }
    for (int i = 0; i < r; ++i) {
      if (d.bond[i][i] != 1)
        throw std::invalid_argument("bond matrix diagonal must be 1");
      for (int k = 0; k < r; ++k) {
        if (d.bond[i][k] != d.bond[k][i])
          throw std::invalid_argument("bond matrix must be symmetric");
        if (i != k && d.bond[i][k] < 2)
          throw std::invalid_argument("off-diagonal bonds must be >= 2");
      }
    }
    d.label = "matrix:" + j.dump();
    return d;
  }

  int arg_n = 0;
  try {
    arg_n = std::stoi(arg);
  } catch (...) {
    throw std::invalid_argument("bad diagram argument: " + s);
  }

  if (head == "A") {
    if (arg_n < 1) throw std::invalid_argument("A:n needs n >= 1");
    d.family = Family::A;
    d.rank = arg_n;
    d.bond = path_bonds(arg_n);
  } else if (head == "B" || head == "C") {
    if (arg_n < 2) throw std::invalid_argument("B:n needs n >= 2");
    d.family = Family::B;
    d.rank = arg_n;
    d.bond = path_bonds(arg_n);
    d.bond[arg_n - 2][arg_n - 1] = d.bond[arg_n - 1][arg_n - 2] = 4;
  } else if (head == "D") {
    if (arg_n < 4) throw std::invalid_argument("D:n needs n >= 4");
    d.family = Family::D;
    d.rank = arg_n;
    if (arg_n == 4) {
      // star: node 1 bonded to 2, 3, 4
      d.bond.assign(4, std::vector<int>(4, 2));
      for (int i = 0; i < 4; ++i) d.bond[i][i] = 1;
      for (int k = 1; k < 4; ++k) d.bond[0][k] = d.bond[k][0] = 3;
    } else {
      // path 1..rank-1 plus node rank bonded to node 2
      d.bond = path_bonds(arg_n);
      d.bond[arg_n - 2][arg_n - 1] = d.bond[arg_n - 1][arg_n - 2] = 2;
      d.bond[1][arg_n - 1] = d.bond[arg_n - 1][1] = 3;
    }
  } else if (head == "I2") {
    if (arg_n < 2) throw std::invalid_argument("I2:m needs m >= 2");
    d.family = Family::I2;
    d.rank = 2;
    d.i2_m = arg_n;
    d.bond = {{1, arg_n}, {arg_n, 1}};
  } else if (head == "G") {
    if (arg_n != 2) throw std::invalid_argument("only G:2 is supported");
    d.family = Family::I2;
    d.rank = 2;
    d.i2_m = 6;
    d.bond = {{1, 6}, {6, 1}};
  } else if (head == "H") {
    if (arg_n != 3) throw std::invalid_argument("only H:3 is supported");
    d.family = Family::H;
    d.rank = 3;
    d.bond = path_bonds(3);
    d.bond[1][2] = d.bond[2][1] = 5;
  } else {
    throw std::invalid_argument("unknown diagram family: " + head);
  }
  d.label = head + ":" + std::to_string(arg_n);
  return d;
}

namespace {

// Combinatorial element models. A descriptor is a small byte vector; the
// right action of generator s (1-based) and the length statistic are enough
// to drive the table construction.
struct Model {
  virtual ~Model() = default;
  virtual std::vector<int8_t> identity() const = 0;
  virtual std::vector<int8_t> apply_right(std::vector<int8_t> v, int s) const = 0;
  virtual int length(const std::vector<int8_t>& v) const = 0;  // -1: use BFS level
};

// S_{rank+1} as one-line permutations; node i swaps positions i, i+1.
struct ModelA : Model {
  int n;
  explicit ModelA(int rank) : n(rank + 1) {}
  std::vector<int8_t> identity() const override {
    std::vector<int8_t> v(n);
    std::iota(v.begin(), v.end(), 1);
    return v;
  }
  std::vector<int8_t> apply_right(std::vector<int8_t> v, int s) const override {
    std::swap(v[s - 1], v[s]);
    return v;
  }
  int length(const std::vector<int8_t>& v) const override {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += v[i] > v[j];
    return inv;
  }
};

// Signed permutations of 1..rank. The 4-bond sits between the last two
// nodes, so node i (i < rank) swaps positions (rank-i, rank-i+1) and node
// rank negates position 1.
struct ModelB : Model {
  int n;
  explicit ModelB(int rank) : n(rank) {}
  std::vector<int8_t> identity() const override {
    std::vector<int8_t> v(n);
    std::iota(v.begin(), v.end(), 1);
    return v;
  }
  std::vector<int8_t> apply_right(std::vector<int8_t> v, int s) const override {
    if (s == n)
      v[0] = -v[0];
    else
      std::swap(v[n - s - 1], v[n - s]);
    return v;
  }
  int length(const std::vector<int8_t>& v) const override {
    int len = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) len += v[i] > v[j];
      if (v[i] < 0) len += -v[i];
    }
    return len;
  }
};

// Even-signed permutations. D:4 is the star with center node 1; for rank
// >= 5 nodes 1..rank-1 are the path swap(i, i+1) and node rank acts by
// (w1, w2) -> (-w2, -w1).
struct ModelD : Model {
  int n;
  explicit ModelD(int rank) : n(rank) {}
  std::vector<int8_t> identity() const override {
    std::vector<int8_t> v(n);
    std::iota(v.begin(), v.end(), 1);
    return v;
  }
  std::vector<int8_t> apply_right(std::vector<int8_t> v, int s) const override {
    auto negswap = [&v] {
      int8_t a = v[0], b = v[1];
      v[0] = -b;
      v[1] = -a;
    };
    if (n == 4) {
      switch (s) {
        case 1: std::swap(v[1], v[2]); break;
        case 2: std::swap(v[0], v[1]); break;
        case 3: negswap(); break;
        default: std::swap(v[2], v[3]); break;
      }
    } else {
      if (s == n)
        negswap();
      else
        std::swap(v[s - 1], v[s]);
    }
    return v;
  }
  int length(const std::vector<int8_t>& v) const override {
    int len = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) len += v[i] > v[j];
      if (v[i] < 0) len += -v[i] - 1;
    }
    return len;
  }
};

// Dihedral group of order 2m: (a, f) with a in Z_m stands for rho^a sigma^f,
// s1 = sigma, s2 = rho sigma. The rotation count is split over two bytes so
// large m work.
struct ModelI2 : Model {
  int m;
  explicit ModelI2(int bond) : m(bond) {}
  std::vector<int8_t> identity() const override { return {0, 0, 0}; }
  std::vector<int8_t> apply_right(std::vector<int8_t> v, int s) const override {
    int a = (uint8_t)v[0] | ((uint8_t)v[1] << 8), f = v[2];
    int b = (s == 1) ? 0 : 1;
    int c = (a + (f ? m - b : b)) % m;
    return {(int8_t)(c & 0xff), (int8_t)(c >> 8), (int8_t)(f ^ 1)};
  }
  int length(const std::vector<int8_t>&) const override { return -1; }
};

struct Pending {
  std::vector<std::vector<int8_t>> desc;  // per tmp id
  std::vector<int> length;
  std::vector<int32_t> right;             // tmp right table
  std::vector<std::vector<int>> word;     // some reduced word per tmp id
};

Pending enumerate_model(const Model& model, int rank, size_t max_order) {
  Pending out;
  std::map<std::vector<int8_t>, int32_t> ids;
  std::vector<int> level;
  auto idty = model.identity();
  ids[idty] = 0;
  out.desc.push_back(idty);
  level.push_back(0);
  out.word.push_back({});
  for (size_t head = 0; head < out.desc.size(); ++head) {
    for (int s = 1; s <= rank; ++s) {
      auto v = model.apply_right(out.desc[head], s);
      auto it = ids.find(v);
      int32_t id;
      if (it == ids.end()) {
        id = (int32_t)out.desc.size();
        if ((size_t)id >= max_order)
          throw std::runtime_error("group exceeds the element cap");
        ids[v] = id;
        out.desc.push_back(v);
        level.push_back(level[head] + 1);
        auto w = out.word[head];
        w.push_back(s);
        out.word.push_back(std::move(w));
      } else {
        id = it->second;
      }
      out.right.push_back(id);
    }
  }
  out.length.resize(out.desc.size());
  for (size_t i = 0; i < out.desc.size(); ++i) {
    int l = model.length(out.desc[i]);
    out.length[i] = l >= 0 ? l : level[i];
    if (l >= 0 && l != level[i])
      throw std::runtime_error("length statistic disagrees with BFS level");
  }
  return out;
}

// Generic engine for H3 / explicit bond matrices: the standard geometric
// representation with exact arithmetic in the cyclotomic field Q(zeta_N),
// N = lcm of the 2*m_ij, realized as Q[x]/Phi_N(x). Elements are identified
// by exact equality of their reflection matrices; BFS level equals length.
using Rat = boost::rational<long long>;
using Poly = std::vector<Rat>;  // coefficients, low degree first

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == Rat(0)) p.pop_back();
  return p;
}

// quotient of exact division a / b
Poly poly_div(Poly a, const Poly& b) {
  Poly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Rat(0));
  while (a.size() >= b.size()) {
    Rat c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a = poly_trim(std::move(a));
    if (a.empty()) break;
  }
  return q;
}

Poly cyclotomic(int n) {
  static std::map<int, Poly> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  Poly f(n + 1, Rat(0));  // x^n - 1
  f[0] = Rat(-1);
  f[n] = Rat(1);
  for (int d = 1; d < n; ++d)
    if (n % d == 0) f = poly_div(std::move(f), cyclotomic(d));
  memo[n] = f;
  return f;
}

struct CycloField {
  int N;
  Poly phi;
  int deg;
  explicit CycloField(int n) : N(n), phi(cyclotomic(n)), deg((int)phi.size() - 1) {}

  using V = Poly;  // always of size deg
  V zero() const { return V(deg, Rat(0)); }
  V from_rat(Rat r) const {
    V v = zero();
    if (deg > 0) v[0] = r;
    return v;
  }
  V zeta_pow(int k) const {  // x^k mod phi
    k = ((k % N) + N) % N;
    Poly p(k + 1, Rat(0));
    p[k] = Rat(1);
    return reduce(std::move(p));
  }
  V reduce(Poly p) const {
    p = poly_trim(std::move(p));
    while ((int)p.size() > deg) {
      Rat c = p.back();
      size_t shift = p.size() - phi.size();
      for (size_t i = 0; i < phi.size(); ++i) p[shift + i] -= c * phi[i];
      p = poly_trim(std::move(p));
    }
    p.resize(deg, Rat(0));
    return p;
  }
  V add(const V& a, const V& b) const {
    V c(deg);
    for (int i = 0; i < deg; ++i) c[i] = a[i] + b[i];
    return c;
  }
  V sub(const V& a, const V& b) const {
    V c(deg);
    for (int i = 0; i < deg; ++i) c[i] = a[i] - b[i];
    return c;
  }
  V mul(const V& a, const V& b) const {
    Poly p(2 * deg - 1, Rat(0));
    for (int i = 0; i < deg; ++i) {
      if (a[i] == Rat(0)) continue;
      for (int j = 0; j < deg; ++j)
        if (b[j] != Rat(0)) p[i + j] += a[i] * b[j];
    }
    return reduce(std::move(p));
  }
};

Pending enumerate_generic(const CoxeterDiagram& d, size_t max_order) {
  int rank = d.rank;
  int N = 4;
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j) N = std::lcm(N, 2 * d.bond[i][j]);
  CycloField F(N);

  // bilinear form B_st = -cos(pi/m_st) = -(zeta^{N/2m} + zeta^{-N/2m})/2
  std::vector<std::vector<CycloField::V>> B(rank, std::vector<CycloField::V>(rank));
  for (int s = 0; s < rank; ++s)
    for (int t = 0; t < rank; ++t) {
      if (s == t) {
        B[s][t] = F.from_rat(Rat(1));
      } else {
        int m = d.bond[s][t];
        auto c = F.add(F.zeta_pow(N / (2 * m)), F.zeta_pow(-N / (2 * m)));
        for (auto& x : c) x *= Rat(-1, 2);
        B[s][t] = c;
      }
    }

  using Mtx = std::vector<CycloField::V>;  // rank*rank entries, row-major
  auto mat_id = [&] {
    Mtx m(rank * rank, F.zero());
    for (int i = 0; i < rank; ++i) m[i * rank + i] = F.from_rat(Rat(1));
    return m;
  };
  // generator matrix: sigma_s = I - 2 e_s B_s (acting on column vectors)
  std::vector<Mtx> gen(rank + 1);
  for (int s = 1; s <= rank; ++s) {
    Mtx m = mat_id();
    for (int j = 0; j < rank; ++j) {
      auto twice = B[s - 1][j];
      for (auto& x : twice) x *= Rat(2);
      m[(s - 1) * rank + j] = F.sub(m[(s - 1) * rank + j], twice);
    }
    gen[s] = m;
  }
  auto mat_mul = [&](const Mtx& a, const Mtx& b) {
    Mtx c(rank * rank, F.zero());
    for (int i = 0; i < rank; ++i)
      for (int k = 0; k < rank; ++k) {
        const auto& aik = a[i * rank + k];
        bool zero = true;
        for (auto& x : aik)
          if (x != Rat(0)) {
            zero = false;
            break;
          }
        if (zero) continue;
        for (int j = 0; j < rank; ++j)
          c[i * rank + j] = F.add(c[i * rank + j], F.mul(aik, b[k * rank + j]));
      }
    return c;
  };

  Pending out;
  std::map<Mtx, int32_t> ids;
  std::vector<Mtx> mats{mat_id()};
  ids[mats[0]] = 0;
  out.length.push_back(0);
  out.word.push_back({});
  for (size_t head = 0; head < mats.size(); ++head) {
    for (int s = 1; s <= rank; ++s) {
      auto v = mat_mul(mats[head], gen[s]);
      auto it = ids.find(v);
      int32_t id;
      if (it == ids.end()) {
        id = (int32_t)mats.size();
        if ((size_t)id >= max_order)
          throw std::runtime_error("group exceeds the element cap");
        ids[v] = id;
        mats.push_back(v);
        out.length.push_back(out.length[head] + 1);
        auto w = out.word[head];
        w.push_back(s);
        out.word.push_back(std::move(w));
      } else {
        id = it->second;
      }
      out.right.push_back(id);
    }
  }
  out.desc.assign(mats.size(), {});
  return out;
}

}  // namespace

CoxeterGroup::CoxeterGroup(const CoxeterDiagram& d, size_t max_order) : diag_(d) {
  rank_ = d.rank;
  build_tables(max_order);
}

std::shared_ptr<const CoxeterGroup> CoxeterGroup::build(const std::string& diagram,
                                                        size_t max_order) {
  return std::make_shared<CoxeterGroup>(CoxeterDiagram::parse(diagram), max_order);
}

void CoxeterGroup::build_tables(size_t max_order) {
  Pending p;
  switch (diag_.family) {
    case CoxeterDiagram::Family::A:
      p = enumerate_model(ModelA(rank_), rank_, max_order);
      break;
    case CoxeterDiagram::Family::B:
      p = enumerate_model(ModelB(rank_), rank_, max_order);
      break;
    case CoxeterDiagram::Family::D:
      p = enumerate_model(ModelD(rank_), rank_, max_order);
      break;
    case CoxeterDiagram::Family::I2:
      p = enumerate_model(ModelI2(diag_.i2_m), rank_, max_order);
      break;
    default:
      p = enumerate_generic(diag_, max_order);
      break;
  }
  size_t n = p.desc.size();
  order_ = n;

  // Temporary helpers on the provisional ids.
  auto tright = [&](int32_t w, int s) { return p.right[(size_t)w * rank_ + (s - 1)]; };
  auto tfrom_word = [&](const std::vector<int>& ls) {
    int32_t w = 0;
    for (int s : ls) w = tright(w, s);
    return w;
  };
  std::vector<int32_t> tinv(n);
  for (size_t i = 0; i < n; ++i) {
    auto rev = p.word[i];
    std::reverse(rev.begin(), rev.end());
    tinv[i] = tfrom_word(rev);
  }
  auto tleft = [&](int s, int32_t w) { return tinv[tright(tinv[w], s)]; };

  // ShortLex normal form: repeatedly strip the smallest left descent.
  std::vector<std::vector<int>> shortlex(n);
  for (size_t i = 0; i < n; ++i) {
    int32_t w = (int32_t)i;
    auto& out = shortlex[i];
    while (p.length[w] > 0) {
      for (int s = 1; s <= rank_; ++s) {
        int32_t v = tleft(s, w);
        if (p.length[v] < p.length[w]) {
          out.push_back(s);
          w = v;
          break;
        }
      }
    }
  }

  // Final ids sorted by (length, ShortLex word).
  std::vector<int32_t> by_rank(n);
  std::iota(by_rank.begin(), by_rank.end(), 0);
  std::sort(by_rank.begin(), by_rank.end(), [&](int32_t a, int32_t b) {
    if (p.length[a] != p.length[b]) return p.length[a] < p.length[b];
    return shortlex[a] < shortlex[b];
  });
  std::vector<int32_t> new_id(n);
  for (size_t i = 0; i < n; ++i) new_id[by_rank[i]] = (int32_t)i;

  length_.resize(n);
  word_.resize(n);
  inverse_.resize(n);
  right_.resize(n * rank_);
  left_.resize(n * rank_);
  for (size_t i = 0; i < n; ++i) {
    int32_t ni = new_id[i];
    length_[ni] = p.length[i];
    word_[ni] = shortlex[i];
    inverse_[ni] = new_id[tinv[i]];
    for (int s = 1; s <= rank_; ++s) {
      right_[(size_t)ni * rank_ + (s - 1)] = new_id[tright((int32_t)i, s)];
      left_[(size_t)ni * rank_ + (s - 1)] = new_id[tleft(s, (int32_t)i)];
    }
  }
  longest_ = (Elt)(n - 1);
  if (n > 1 && length_[longest_] == length_[(Elt)(n - 2)])
    throw std::runtime_error("longest element is not unique; diagram not finite-irreducible?");
}

CoxeterGroup::Elt CoxeterGroup::multiply(Elt a, Elt b) const {
  Elt w = a;
  for (int s : word_[b]) w = right(w, s);
  return w;
}

CoxeterGroup::Elt CoxeterGroup::from_word(const std::vector<int>& letters) const {
  Elt w = 0;
  for (int s : letters) {
    if (s < 1 || s > rank_) throw std::out_of_range("generator index out of range");
    w = right(w, s);
  }
  return w;
}

CoxeterGroup::Elt CoxeterGroup::nil_from_word(const std::vector<int>& letters) const {
  Elt w = 0;
  for (int s : letters) {
    if (s < 1 || s > rank_) throw std::out_of_range("generator index out of range");
    auto [v, sign] = right_mul_gen(w, s);
    if (sign < 0) return -1;
    w = v;
  }
  return w;
}

std::vector<int64_t> CoxeterGroup::length_histogram() const {
  std::vector<int64_t> h(max_length() + 1, 0);
  for (size_t i = 0; i < order_; ++i) ++h[length_[i]];
  return h;
}

}  // namespace nilcox
