#include "nilcox/nilcoxeter.hpp"

#include <stdexcept>

#include <json.hpp>

namespace nilcox {

NilCoxeterAlgebra::NilCoxeterAlgebra(std::shared_ptr<const CoxeterGroup> G)
    : G_(std::move(G)) {}

NilElt NilCoxeterAlgebra::gen(int s) const {
  if (s < 1 || s > G_->rank()) throw std::out_of_range("generator index");
  return basis((CoxeterGroup::Elt)s);  // ids 1..rank are the generators
}

NilElt NilCoxeterAlgebra::add(const NilElt& a, const NilElt& b) const {
  NilElt c = a;
  for (auto& [w, x] : b) {
    auto it = c.find(w);
    if (it == c.end()) {
      if (x != 0) c[w] = x;
    } else {
      it->second += x;
      if (it->second == 0) c.erase(it);
    }
  }
  return c;
}

NilElt NilCoxeterAlgebra::scale(const NilElt& a, long long c) const {
  NilElt r;
  if (c == 0) return r;
  for (auto& [w, x] : a) r[w] = x * c;
  return r;
}

NilElt NilCoxeterAlgebra::multiply(const NilElt& a, const NilElt& b) const {
  NilElt c;
  for (auto& [w, x] : a)
    for (auto& [v, y] : b) {
      auto wv = G_->nil_multiply(w, v);
      if (wv < 0) continue;
      auto it = c.find(wv);
      if (it == c.end())
        c[wv] = x * y;
      else {
        it->second += x * y;
        if (it->second == 0) c.erase(it);
      }
    }
  return c;
}

long long NilCoxeterAlgebra::trace(const NilElt& a) const {
  auto it = a.find(G_->longest());
  return it == a.end() ? 0 : it->second;
}

NilElt NilCoxeterAlgebra::psi(const NilElt& a) const {
  NilElt r;
  for (auto& [w, x] : a) r[G_->psi(w)] = x;
  return r;
}

NilElt NilCoxeterAlgebra::from_word(const std::vector<int>& letters) const {
  auto w = G_->nil_from_word(letters);
  if (w < 0) return {};
  return basis(w);
}

bool NilCoxeterAlgebra::is_homogeneous(const NilElt& a, int* degree) const {
  int d = -1;
  for (auto& [w, x] : a) {
    (void)x;
    if (d < 0)
      d = G_->length(w);
    else if (G_->length(w) != d)
      return false;
  }
  if (degree) *degree = d < 0 ? 0 : d;
  return true;
}

int NilCoxeterAlgebra::type_a_n() const {
  if (G_->diagram().family != CoxeterDiagram::Family::A)
    throw std::invalid_argument("interval words need a type A diagram");
  return G_->rank() + 1;
}

std::vector<int> NilCoxeterAlgebra::interval_word(int i, int j) const {
  int n = type_a_n();
  if (i < 1 || j > n || i > j) throw std::out_of_range("interval [i,j]");
  std::vector<int> w;
  for (int s = j - 1; s >= i; --s) w.push_back(s);
  return w;
}

std::vector<int> NilCoxeterAlgebra::interval_power_word(int i, int j, int k) const {
  if (k < 0 || k > j - i) throw std::out_of_range("interval power k");
  std::vector<int> w;
  for (int a = 0; a < k; ++a) {
    auto part = interval_word(i + a, j + 1 - k + a);
    w.insert(w.end(), part.begin(), part.end());
  }
  return w;
}

NilElt NilCoxeterAlgebra::interval(int i, int j) const {
  return from_word(interval_word(i, j));
}

NilElt NilCoxeterAlgebra::interval_power(int i, int j, int k) const {
  return from_word(interval_power_word(i, j, k));
}

void NilCoxeterAlgebra::build_canonical_map() const {
  int n = type_a_n();
  canon_.assign(G_->order(), {});
  std::vector<int> m(n - 1);
  for (int i = 0; i < n - 1; ++i) m[i] = i + 1;
  // odometer over all tuples i <= m_i <= n
  while (true) {
    std::vector<int> word;
    for (int i = 1; i <= n - 1; ++i) {
      auto part = interval_word(i, m[i - 1]);
      word.insert(word.end(), part.begin(), part.end());
    }
    auto w = G_->nil_from_word(word);
    if (w < 0 || !canon_[w].empty())
      throw std::runtime_error("canonical factorization is not a bijection");
    canon_[w] = m;
    int i = n - 2;
    while (i >= 0 && m[i] == n) {
      m[i] = i + 1;
      --i;
    }
    if (i < 0) break;
    ++m[i];
  }
}

std::vector<int> NilCoxeterAlgebra::canonical_decompose(CoxeterGroup::Elt w) const {
  if (canon_.empty()) build_canonical_map();
  return canon_[w];
}

std::vector<long long> NilCoxeterAlgebra::loewy_dims(int n) {
  if (n < 1) throw std::invalid_argument("loewy_dims needs n >= 1");
  std::vector<long long> p{1};
  for (int i = 1; i <= n - 1; ++i) {
    std::vector<long long> q(p.size() + i, 0);
    for (size_t a = 0; a < p.size(); ++a)
      for (int k = 0; k <= i; ++k) q[a + k] += p[a];
    p = std::move(q);
  }
  return p;
}

std::string NilCoxeterAlgebra::to_json(const NilElt& a) const {
  nlohmann::json j;
  j["diagram"] = G_->diagram().label;
  j["terms"] = nlohmann::json::array();
  for (auto& [w, x] : a) {
    nlohmann::json t;
    t["word"] = G_->word(w);
    t["coeff"] = x;
    j["terms"].push_back(t);
  }
  return j.dump();
}

NilElt NilCoxeterAlgebra::from_json(const std::string& text) const {
  auto j = nlohmann::json::parse(text);
  if (j.contains("diagram") && j["diagram"].get<std::string>() != G_->diagram().label)
    throw std::invalid_argument("element diagram does not match this algebra");
  NilElt r;
  for (auto& t : j.at("terms")) {
    auto word = t.at("word").get<std::vector<int>>();
    long long c = t.value("coeff", 1LL);
    r = add(r, scale(from_word(word), c));
  }
  return r;
}

}  // namespace nilcox
