#include "nilcox/zring.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>

namespace nilcox {

namespace {

bool contains_interval(const ZFactor& outer, const ZFactor& inner) {
  return outer.lo() <= inner.lo() && inner.hi() <= outer.hi();
}

bool disjoint_intervals(const ZFactor& x, const ZFactor& y) {
  return x.hi() < y.lo() || y.hi() < x.lo();
}

bool same_interval(const ZFactor& x, const ZFactor& y) {
  return x.lo() == y.lo() && x.hi() == y.hi();
}

// literal reflection of the pair f in the interval of m
ZFactor reflect_pair(const ZFactor& f, const ZFactor& m) {
  int s = m.lo() + m.hi();
  return {s - f.a, s - f.b};
}

bool canonical_less(const ZFactor& x, const ZFactor& y) {
  return x.degree() != y.degree() ? x.degree() < y.degree() : x.a < y.a;
}

}  // namespace

ZRing::ZRing(int n, bool with_signs) : n_(n), signed_(with_signs) {
  if (n < 2) throw std::invalid_argument("ZRing needs n >= 2");
}

void ZRing::check_factor(const ZFactor& f) const {
  if (f.a < 1 || f.a > n_ || f.b < 1 || f.b > n_ || f.a == f.b)
    throw std::out_of_range("generator index outside [1,n] or equal pair");
}

ZRing::Elt ZRing::generator(int i, int j) const {
  return normalize({ZFactor{i, j}});
}

ZRing::Elt ZRing::add(const Elt& x, const Elt& y) const {
  Elt r = x;
  for (auto& [k, c] : y) {
    auto it = r.find(k);
    if (it == r.end()) {
      r.emplace(k, c);
    } else if ((it->second += c) == 0) {
      r.erase(it);
    }
  }
  return r;
}

ZRing::Elt ZRing::scale(const Elt& x, long long c) const {
  Elt r;
  if (c != 0)
    for (auto& [k, v] : x) r.emplace(k, v * c);
  return r;
}

ZRing::Elt ZRing::multiply(const Elt& x, const Elt& y) const {
  Elt r;
  for (auto& [kx, cx] : x)
    for (auto& [ky, cy] : y) {
      std::vector<ZFactor> word = kx;
      word.insert(word.end(), ky.begin(), ky.end());
      r = add(r, normalize(word, cx * cy));
    }
  return r;
}

ZMonomial ZRing::normalize_monomial(const std::vector<ZFactor>& word) const {
  int sign = 1;
  std::vector<ZFactor> out;
  out.reserve(word.size());
  for (ZFactor raw : word) {
    check_factor(raw);
    ZFactor f = raw;
    if (f.a > f.b) {
      std::swap(f.a, f.b);
      if (signed_ && (f.degree() & 1)) sign = -sign;
    }
    // insert f into the sorted prefix, rewriting across each crossed factor
    size_t p = out.size();
    while (p > 0) {
      const ZFactor& e = out[p - 1];
      int de = e.degree(), df = f.degree();
      if (de > df) {
        if (contains_interval(e, f)) {
          // e f = (-1)^(de*df+df) f' e with f' the reflection of f in e
          f = reflect_pair(f, e);
          std::swap(f.a, f.b);  // reflection of an ascending pair descends
          if (signed_ && ((de * df + df) & 1)) sign = -sign;
        } else if (disjoint_intervals(e, f)) {
          if (signed_ && ((de * df) & 1)) sign = -sign;
        } else {
          return {0, {}};
        }
        --p;
      } else if (de == df) {
        if (same_interval(e, f) || e.hi() < f.lo()) break;
        if (f.hi() < e.lo()) {
          if (signed_ && ((de * df) & 1)) sign = -sign;
          --p;
        } else {
          return {0, {}};
        }
      } else {
        break;
      }
    }
    out.insert(out.begin() + p, f);
  }
  // a non-adjacent overlapping pair still kills the monomial: the later
  // factor can always be moved next to the earlier one by legal rewrites
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = i + 1; j < out.size(); ++j)
      if (!contains_interval(out[j], out[i]) &&
          !disjoint_intervals(out[i], out[j]))
        return {0, {}};
  return {sign, out};
}

ZRing::Elt ZRing::normalize(const std::vector<ZFactor>& word,
                            long long coeff) const {
  ZMonomial m = normalize_monomial(word);
  if (m.sign == 0 || coeff == 0) return {};
  return {{m.factors, coeff * m.sign}};
}

bool ZRing::is_canonical(const Key& m) const {
  for (auto& f : m) {
    check_factor(f);
    if (f.a > f.b) return false;
  }
  for (size_t i = 0; i + 1 < m.size(); ++i)
    if (canonical_less(m[i + 1], m[i])) return false;
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j)
      if (!contains_interval(m[j], m[i]) && !disjoint_intervals(m[i], m[j]))
        return false;
  return true;
}

ZMonomial ZRing::reversed(const Key& canonical) const {
  if (!is_canonical(canonical))
    throw std::invalid_argument("reversed() needs a canonical monomial");
  ZMonomial r;
  std::vector<ZFactor> rem = canonical;
  while (!rem.empty()) {
    ZFactor m = rem.back();
    rem.pop_back();
    for (ZFactor& e : rem) {
      if (same_interval(e, m)) continue;  // identical factors swap freely
      if (contains_interval(m, e)) {
        e = reflect_pair(e, m);
        if (signed_ && ((e.degree() * m.degree()) & 1)) r.sign = -r.sign;
      } else if (disjoint_intervals(e, m)) {
        if (signed_ && ((e.degree() * m.degree()) & 1)) r.sign = -r.sign;
      } else {
        throw std::logic_error("overlap inside a canonical monomial");
      }
    }
    r.factors.push_back(m);
  }
  return r;
}

std::pair<int, int> ZRing::bidegree(const Key& m) {
  int h = 0, t = 0;
  for (auto& f : m) {
    int d = f.degree();
    h -= d;
    t -= d * (d + 1) / 2;
  }
  return {h, t};
}

ZRing::Elt ZRing::star(const Elt& x) const {
  Elt r;
  for (auto& [k, c] : x) {
    std::vector<ZFactor> word(k.rbegin(), k.rend());
    r = add(r, normalize(word, c));
  }
  return r;
}

ZRing::Elt ZRing::dagger(const Elt& x) const {
  Elt r;
  for (auto& [k, c] : x) {
    std::vector<ZFactor> word;
    long long cc = c;
    for (auto& f : k) {
      word.push_back({n_ + 1 - f.a, n_ + 1 - f.b});
      if (signed_ && (((n_ - 1) * f.degree()) & 1)) cc = -cc;
    }
    r = add(r, normalize(word, cc));
  }
  return r;
}

ZRing::Elt ZRing::quotient_interval(const Elt& x, int n1, int n2) const {
  if (n1 < 1 || n2 > n_ || n1 > n2)
    throw std::out_of_range("window [n1,n2] outside [1,n]");
  Elt r;
  for (auto& [k, c] : x) {
    bool inside = true;
    for (auto& f : k) inside = inside && n1 <= f.lo() && f.hi() <= n2;
    if (inside) r.emplace(k, c);
  }
  return r;
}

ZRing::Key ZRing::f_encode(const std::vector<int>& t) {
  int n = (int)t.size() + 1;
  int maxt = 0;
  for (int v : t) {
    if (v < 0) throw std::invalid_argument("f_encode needs t_i >= 0");
    maxt = std::max(maxt, v);
  }
  Key out;
  for (int level = 1; level <= maxt; ++level) {
    for (int i = 1; i <= n - 1; ++i) {
      if (t[i - 1] < level || (i > 1 && t[i - 2] >= level)) continue;
      int j = i;
      while (j + 1 <= n - 1 && t[j] >= level) ++j;
      out.push_back({i, j + 1});
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<int> ZRing::f_decode(int n, const Key& m) {
  std::vector<int> t(n - 1, 0);
  for (auto& f : m) {
    if (f.a < 1 || f.b > n || f.a >= f.b)
      throw std::invalid_argument("f_decode needs ascending factors in [1,n]");
    for (int k = f.a; k < f.b; ++k) t[k - 1] += 1;
  }
  return t;
}

bool ZRing::nonzero_mul_criterion(const std::vector<int>& t, int i, int j) {
  int n = (int)t.size() + 1;
  if (i < 1 || j > n || i >= j) throw std::out_of_range("need 1 <= i < j <= n");
  auto at = [&](int k) { return (k >= 1 && k <= n - 1) ? t[k - 1] : 0; };
  // No level run of t may cross an end of [i,j]: inside the span the heights
  // must stay at or above both outside neighbours t_{i-1} and t_j.
  for (int k = i; k < j; ++k)
    if (at(k) < at(i - 1) || at(k) < at(j)) return false;
  return true;
}

std::vector<ZRing::Key> ZRing::canonical_monomials(int n, int d) {
  if (n < 2 || d < 0) throw std::invalid_argument("need n >= 2, d >= 0");
  std::vector<ZFactor> cand;
  for (int deg = 1; deg <= n - 1; ++deg)
    for (int a = 1; a + deg <= n; ++a) cand.push_back({a, a + deg});
  std::vector<Key> out;
  Key seq;
  // candidates are scanned in canonical order, so any sequence passing the
  // pairwise contains-or-disjoint test is canonical
  auto dfs = [&](auto&& self, size_t from, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(seq);
      return;
    }
    for (size_t idx = from; idx < cand.size(); ++idx) {
      const ZFactor& f = cand[idx];
      if (f.degree() > remaining) break;
      bool ok = true;
      for (auto& e : seq)
        ok = ok && (contains_interval(f, e) || disjoint_intervals(e, f));
      if (!ok) continue;
      seq.push_back(f);
      self(self, idx, remaining - f.degree());
      seq.pop_back();
    }
  };
  dfs(dfs, 0, d);
  return out;
}

long long ZRing::rank(int n, int d) {
  return (long long)canonical_monomials(n, d).size();
}

std::string ZRing::to_text(const ZMonomial& m) {
  if (m.sign == 0) return "0";
  std::string s = m.sign < 0 ? "-" : "";
  if (m.factors.empty()) return s + "1";
  for (size_t i = 0; i < m.factors.size();) {
    size_t j = i;
    while (j < m.factors.size() && m.factors[j] == m.factors[i]) ++j;
    s += "[" + std::to_string(m.factors[i].a) + "," +
         std::to_string(m.factors[i].b) + "]";
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

ZMonomial ZRing::parse_text(const std::string& s, int n) {
  ZMonomial m;
  size_t p = 0;
  auto skip = [&] {
    while (p < s.size() && isspace((unsigned char)s[p])) ++p;
  };
  auto number = [&]() -> int {
    skip();
    size_t q = p;
    while (p < s.size() && isdigit((unsigned char)s[p])) ++p;
    if (q == p) throw std::invalid_argument("expected a number in monomial");
    return std::stoi(s.substr(q, p - q));
  };
  auto expect = [&](char c) {
    skip();
    if (p >= s.size() || s[p] != c)
      throw std::invalid_argument(std::string("expected '") + c +
                                  "' in monomial");
    ++p;
  };
  skip();
  if (p < s.size() && s[p] == '-') {
    m.sign = -1;
    ++p;
  }
  skip();
  if (p < s.size() && (s[p] == '0' || s[p] == '1') ) {
    if (s[p] == '0') m.sign = 0;
    ++p;
    skip();
    if (p != s.size()) throw std::invalid_argument("trailing monomial text");
    return m;
  }
  while (p < s.size()) {
    expect('[');
    int a = number();
    expect(',');
    int b = number();
    expect(']');
    int e = 1;
    skip();
    if (p < s.size() && s[p] == '^') {
      ++p;
      e = number();
      if (e < 1) throw std::invalid_argument("exponent must be positive");
    }
    if (a < 1 || a > n || b < 1 || b > n || a == b)
      throw std::invalid_argument("factor index outside [1,n]");
    for (int i = 0; i < e; ++i) m.factors.push_back({a, b});
    skip();
  }
  if (m.factors.empty())
    throw std::invalid_argument("empty monomial text");
  return m;
}

std::string ZRing::to_json(const Elt& x) const {
  nlohmann::json terms = nlohmann::json::array();
  for (auto& [k, c] : x) {
    nlohmann::json fac = nlohmann::json::array();
    for (auto& f : k) fac.push_back({f.a, f.b});
    terms.push_back({{"coeff", c}, {"factors", fac}});
  }
  nlohmann::json j{{"n", n_}, {"signed", signed_}, {"terms", terms}};
  return j.dump();
}

ZRing::Elt ZRing::from_json(const std::string& text) const {
  auto j = nlohmann::json::parse(text);
  if (j.at("n").get<int>() != n_ || j.at("signed").get<bool>() != signed_)
    throw std::invalid_argument("element does not match this ring");
  Elt r;
  for (auto& term : j.at("terms")) {
    std::vector<ZFactor> word;
    for (auto& f : term.at("factors"))
      word.push_back({f.at(0).get<int>(), f.at(1).get<int>()});
    r = add(r, normalize(word, term.at("coeff").get<long long>()));
  }
  return r;
}

}  // namespace nilcox
