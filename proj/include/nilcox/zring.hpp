#pragma once

// The interval-generated ring Z and its signless variant: generators z_{i,j}
// indexed by pairs, with reflection/commutation/overlap relations, a unique
// canonical form per monomial, the reversed canonical form, the bijection f
// between canonical monomials and nonnegative tuples, and the star/dagger
// involutions.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nilcox {

// Index pair of a generator z_{a,b}. Canonical storage is ascending (a < b);
// the reversed canonical form keeps the literal orientation produced by the
// reflections, which may be descending.
struct ZFactor {
  int a = 0, b = 0;
  int lo() const { return a < b ? a : b; }
  int hi() const { return a < b ? b : a; }
  int degree() const { return hi() - lo(); }  // = j - i > 0
  friend bool operator==(const ZFactor& x, const ZFactor& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const ZFactor& x, const ZFactor& y) {
    return !(x == y);
  }
  friend bool operator<(const ZFactor& x, const ZFactor& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  }
};

// A single signed monomial: sign is +1/-1, or 0 for the zero monomial.
struct ZMonomial {
  int sign = 1;
  std::vector<ZFactor> factors;
};

class ZRing {
 public:
  // Monomials are keyed by their canonical factor sequences.
  using Key = std::vector<ZFactor>;
  using Elt = std::map<Key, long long>;

  ZRing(int n, bool with_signs);

  int n() const { return n_; }
  bool with_signs() const { return signed_; }

  Elt zero() const { return {}; }
  Elt one() const { return {{Key{}, 1}}; }
  Elt generator(int i, int j) const;  // z_{i,j}, normalized orientation

  Elt add(const Elt& x, const Elt& y) const;
  Elt scale(const Elt& x, long long c) const;
  Elt multiply(const Elt& x, const Elt& y) const;

  // Canonical form of a word of index pairs: a single monomial or zero.
  Elt normalize(const std::vector<ZFactor>& word, long long coeff = 1) const;
  ZMonomial normalize_monomial(const std::vector<ZFactor>& word) const;
  bool is_canonical(const Key& m) const;

  // Reversed canonical form: factors move right-to-left across the word, each
  // crossed factor strictly inside the mover reflecting in its interval.
  ZMonomial reversed(const Key& canonical) const;

  // (homological, internal) degree; both are <= 0 for nonempty monomials.
  static std::pair<int, int> bidegree(const Key& m);

  Elt star(const Elt& x) const;    // anti-automorphism fixing generators
  Elt dagger(const Elt& x) const;  // automorphism z_{i,j} -> +-z_{n+1-i,n+1-j}
  Elt quotient_interval(const Elt& x, int n1, int n2) const;

  // Bijection with (n-1)-tuples of nonnegative integers (signless canonical
  // forms; degree of the image is minus the tuple sum).
  static Key f_encode(const std::vector<int>& t);
  static std::vector<int> f_decode(int n, const Key& m);

  // True iff z_{i,j} * f_encode(t) is nonzero (the left product; right
  // multiplication vanishes on a different set of tuples).  With t_0 = t_n =
  // 0, every entry t_k for k in [i, j-1] must stay >= both outside neighbours
  // t_{i-1} and t_j, so that no level run of t crosses an end of [i, j].
  static bool nonzero_mul_criterion(const std::vector<int>& t, int i, int j);

  // All canonical factor sequences of total degree d, and their count.
  static std::vector<Key> canonical_monomials(int n, int d);
  static long long rank(int n, int d);

  // Text format: `[5,6][2,4][5,7]^2[1,4][5,8][1,9]`, optional leading `-`,
  // `1` for the empty monomial, `0` for zero.
  static std::string to_text(const ZMonomial& m);
  static std::string to_text(const Key& m) { return to_text({1, m}); }
  static ZMonomial parse_text(const std::string& s, int n);

  std::string to_json(const Elt& x) const;
  Elt from_json(const std::string& text) const;

 private:
  int n_;
  bool signed_;
  void check_factor(const ZFactor& f) const;
};

}  // namespace nilcox
