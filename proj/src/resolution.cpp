#include "nilcox/resolution.hpp"

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

ZFactor reflect_pair(const ZFactor& f, const ZFactor& m) {
  int s = m.lo() + m.hi();
  return {s - f.a, s - f.b};
}

void enumerate_cells(int entries, int total, std::vector<int>& acc,
                     std::vector<std::vector<int>>& out) {
  if ((int)acc.size() == entries - 1) {
    acc.push_back(total);
    out.push_back(acc);
    acc.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    acc.push_back(v);
    enumerate_cells(entries, total - v, acc, out);
    acc.pop_back();
  }
}

}  // namespace

Resolution::Resolution(int n)
    : n_(n),
      alg_(CoxeterGroup::build("A:" + std::to_string(n - 1))) {
  if (n < 2) throw std::invalid_argument("Resolution needs n >= 2");
}

std::vector<Resolution::Cell> Resolution::cells(int total_degree) const {
  std::vector<Cell> out;
  if (total_degree < 0) return out;
  std::vector<int> acc;
  enumerate_cells(n_ - 1, total_degree, acc, out);
  return out;
}

int Resolution::total_degree(const Cell& t) {
  int s = 0;
  for (int v : t) s += v;
  return s;
}

int Resolution::internal_degree(const Cell& t) const {
  return ZRing::bidegree(ZRing::f_encode(t)).second;
}

Resolution::Cell Resolution::generator_cell(int i, int j) const {
  if (i < 1 || j <= i || j > n_)
    throw std::out_of_range("generator cell needs 1 <= i < j <= n");
  Cell t(n_ - 1, 0);
  for (int k = i; k < j; ++k) t[k - 1] = 1;
  return t;
}

std::optional<Resolution::Leg> Resolution::tilde_leg(const Cell& t,
                                                     int k) const {
  if ((int)t.size() != n_ - 1)
    throw std::invalid_argument("cell has wrong arity");
  if (k < 1 || k > n_ - 1) throw std::out_of_range("leg index out of range");
  if (t[k - 1] == 0) return std::nullopt;

  // walk the canonical factors into reversed order, tracking the first
  // factor whose support covers k together with the reflected index
  std::vector<ZFactor> list = ZRing::f_encode(t);
  size_t chosen = 0;
  while (!(list[chosen].lo() <= k && k < list[chosen].hi())) ++chosen;
  int kc = k;
  while (true) {
    ZFactor m = list.back();
    list.pop_back();
    if (list.size() == chosen) {
      Leg leg;
      int i = m.lo(), j = m.hi();
      leg.word = alg_.interval_power_word(i, j, 1 + kc - i);
      leg.coeff = alg_.group().nil_from_word(leg.word);
      leg.target = t;
      leg.target[k - 1] -= 1;
      return leg;
    }
    for (size_t e = 0; e < list.size(); ++e) {
      ZFactor& f = list[e];
      if (contains_interval(m, f)) {
        // an equal interval is fixed by the reflection, but the tracked
        // index still flips inside the window
        if (!same_interval(f, m)) f = reflect_pair(f, m);
        if (e == chosen) kc = m.lo() + m.hi() - 1 - kc;
      } else if (!disjoint_intervals(f, m)) {
        throw std::logic_error("overlap inside a canonical monomial");
      }
    }
  }
}

int Resolution::sign(const Cell& t, int k) {
  int s = 0;
  for (int idx = 0; idx + 1 < k; ++idx) s += t[idx];
  return (s & 1) ? -1 : +1;
}

Resolution::Elt Resolution::tilde_d(int k, const Elt& e) const {
  Elt out;
  for (auto& [key, c] : e) {
    auto leg = tilde_leg(key.first, k);
    if (!leg) continue;
    GroupElt v = alg_.group().nil_multiply(key.second, leg->coeff);
    if (v < 0) continue;
    auto it = out.find({leg->target, v});
    if (it == out.end()) {
      out.emplace(std::make_pair(leg->target, v), c);
    } else if ((it->second += c) == 0) {
      out.erase(it);
    }
  }
  return out;
}

Resolution::Elt Resolution::d(int k, const Elt& e) const {
  Elt out;
  for (auto& [key, c] : e) {
    auto leg = tilde_leg(key.first, k);
    if (!leg) continue;
    GroupElt v = alg_.group().nil_multiply(key.second, leg->coeff);
    if (v < 0) continue;
    long long val = c * sign(key.first, k);
    auto it = out.find({leg->target, v});
    if (it == out.end()) {
      out.emplace(std::make_pair(leg->target, v), val);
    } else if ((it->second += val) == 0) {
      out.erase(it);
    }
  }
  return out;
}

Resolution::Elt Resolution::d(const Elt& e) const {
  Elt out;
  for (int k = 1; k <= n_ - 1; ++k) {
    for (auto& [key, c] : d(k, e)) {
      auto it = out.find(key);
      if (it == out.end()) {
        out.emplace(key, c);
      } else if ((it->second += c) == 0) {
        out.erase(it);
      }
    }
  }
  return out;
}

Resolution::Elt Resolution::homotopy(const Elt& e) const {
  const CoxeterGroup& G = alg_.group();
  Elt out;
  for (auto& [key, c] : e) {
    const Cell& t = key.first;
    GroupElt w = key.second;
    for (int k = 1; k <= n_ - 1; ++k) {
      bool hits = false;
      if (auto leg = tilde_leg(t, k))
        hits = G.nil_multiply(w, leg->coeff) >= 0;
      Cell up = t;
      up[k - 1] += 1;
      GroupElt u = tilde_leg(up, k)->coeff;
      GroupElt v = G.multiply(w, G.inverse(u));
      bool divisible = G.length(v) + G.length(u) == G.length(w);
      if (divisible) {
        long long val = c * sign(up, k);
        auto it = out.find({up, v});
        if (it == out.end()) {
          out.emplace(std::make_pair(up, v), val);
        } else if ((it->second += val) == 0) {
          out.erase(it);
        }
      }
      if (hits || divisible) break;
    }
  }
  return out;
}

Resolution::Elt Resolution::left_mul(GroupElt w, const Elt& e) const {
  Elt out;
  for (auto& [key, c] : e) {
    GroupElt v = alg_.group().nil_multiply(w, key.second);
    if (v < 0) continue;
    auto it = out.find({key.first, v});
    if (it == out.end()) {
      out.emplace(std::make_pair(key.first, v), c);
    } else if ((it->second += c) == 0) {
      out.erase(it);
    }
  }
  return out;
}

const Resolution::Elt& Resolution::lift(const Cell& dual,
                                        const Cell& from) const {
  auto memo_key = std::make_pair(dual, from);
  auto found = lift_memo_.find(memo_key);
  if (found != lift_memo_.end()) return found->second;

  int steps = total_degree(from) - total_degree(dual);
  Elt value;
  if (steps < 0) {
    // stays empty
  } else if (steps == 0) {
    if (from == dual) value.emplace(std::make_pair(Cell(n_ - 1, 0), 0), 1);
  } else {
    Elt start;
    start.emplace(std::make_pair(from, GroupElt(0)), 1);
    Elt pushed;
    for (auto& [key, c] : d(start)) {
      for (auto& [lkey, lc] : left_mul(key.second, lift(dual, key.first))) {
        auto it = pushed.find(lkey);
        if (it == pushed.end()) {
          pushed.emplace(lkey, lc * c);
        } else if ((it->second += lc * c) == 0) {
          pushed.erase(it);
        }
      }
    }
    value = homotopy(pushed);
  }
  auto [it, inserted] = lift_memo_.emplace(memo_key, std::move(value));
  return it->second;
}

ZRing::Elt Resolution::yoneda_product(const Cell& cell_a,
                                      const Cell& cell_b) const {
  ZRing::Elt out;
  int target = total_degree(cell_a) + total_degree(cell_b);
  for (const Cell& c : cells(target)) {
    const Elt& g = lift(cell_b, c);
    auto it = g.find({cell_a, 0});
    if (it != g.end()) out.emplace(ZRing::f_encode(c), it->second);
  }
  return out;
}

}  // namespace nilcox
