#include <doctest.h>

#include <string>
#include <vector>

#include "nilcox/pirep.hpp"
#include "nilcox/zring.hpp"

using namespace nilcox;

namespace {

IntMat single(int m, int r, int c, long long v) {
  IntMat g(m);
  g.at(r, c) = v;
  return g;
}

}  // namespace

TEST_SUITE("pirep") {

TEST_CASE("the two dimensional representation satisfies its relations") {
  MatrixRep rep = rep_a2(2, 3);
  CHECK(verify_homomorphism(rep).empty());

  // xz + zy = 0 and xy = 0, spelled out at t1 = 2, t2 = 3
  IntMat x = rep.at(1, 2), y = rep.at(2, 3), z = rep.at(1, 3);
  CHECK(mat_add(mat_mul(x, z), mat_mul(z, y)).is_zero());
  CHECK(mat_mul(x, y).is_zero());
  CHECK_FALSE(mat_mul(x, z).is_zero());

  CHECK(image_dimension(rep_a2(1, 1), 5) == 4);
}

TEST_CASE("a corrupted assignment is reported") {
  MatrixRep rep = rep_a2(2, 3);
  rep.gen[{2, 3}].at(1, 1) = 2;  // flip the sign of y
  auto bad = verify_homomorphism(rep);
  REQUIRE_FALSE(bad.empty());
  bool mentions = false;
  for (auto& line : bad) mentions = mentions || line.find("containment") != std::string::npos;
  CHECK(mentions);
}

TEST_CASE("one doubling step reproduces the two dimensional representation") {
  MatrixRep base;
  base.n = 2;
  base.size = 1;
  base.gen[{1, 2}] = single(1, 0, 0, 2);
  MatrixRep dbl = rep_doubling(base, 3);
  MatrixRep direct = rep_a2(2, 3);
  REQUIRE(dbl.size == 2);
  CHECK(dbl.at(1, 2) == direct.at(1, 2));
  CHECK(dbl.at(2, 3) == direct.at(2, 3));
  CHECK(dbl.at(1, 3) == direct.at(1, 3));
}

TEST_CASE("two doubling steps match the printed four strand matrices") {
  MatrixRep rep = rep_interval_ring(4, {2, 3, 5});
  long long t1 = 2, t2 = 3, t3 = 5;

  CHECK(rep.at(1, 2) == single(4, 0, 0, t1));
  IntMat v(4);
  v.at(1, 1) = v.at(3, 3) = -t1;
  CHECK(rep.at(2, 3) == v);
  CHECK(rep.at(3, 4) == single(4, 2, 2, t1));
  IntMat x(4);
  x.at(0, 1) = x.at(1, 0) = t2;
  CHECK(rep.at(1, 3) == x);
  IntMat y(4);
  y.at(2, 3) = y.at(3, 2) = t2;
  CHECK(rep.at(2, 4) == y);
  IntMat z(4);
  z.at(0, 2) = z.at(1, 3) = z.at(2, 0) = z.at(3, 1) = t3;
  CHECK(rep.at(1, 4) == z);

  CHECK(verify_homomorphism(rep).empty());
  // the twist by the long generator: u z = z w and w z = z u
  IntMat u = rep.at(1, 2), w = rep.at(3, 4);
  CHECK(mat_mul(u, z) == mat_mul(z, w));
  CHECK(mat_mul(w, z) == mat_mul(z, u));
  CHECK_FALSE(mat_mul(u, z).is_zero());
  // and x z = z y
  CHECK(mat_mul(x, z) == mat_mul(z, y));
}

TEST_CASE("five strands at distinct prime parameters is a homomorphism") {
  MatrixRep rep = rep_interval_ring(5, {2, 3, 5, 7});
  REQUIRE(rep.size == 8);
  CHECK(verify_homomorphism(rep).empty());

  // the two diagonal blocks have different kernels: the top one keeps
  // z_{1,n-1} and kills z_{2,n}, the bottom one the other way round
  int m = rep.size / 2;
  auto quadrant_zero = [&](const IntMat& g, int roff, int coff) {
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c)
        if (g.at(roff + r, coff + c) != 0) return false;
    return true;
  };
  const IntMat& a = rep.at(1, 4);
  const IntMat& b = rep.at(2, 5);
  CHECK_FALSE(quadrant_zero(a, 0, 0));
  CHECK(quadrant_zero(b, 0, 0));
  CHECK(quadrant_zero(a, m, m));
  CHECK_FALSE(quadrant_zero(b, m, m));
}

TEST_CASE("image dimensions certify the full matrix algebra") {
  for (int n = 3; n <= 5; ++n) {
    std::vector<long long> ones(n - 1, 1);
    MatrixRep rep = rep_interval_ring(n, ones);
    int want = rep.size * rep.size;
    for (int p : {2, 3, 5}) {
      CAPTURE(n);
      CAPTURE(p);
      CHECK(image_dimension(rep, p) == want);
    }
  }
}

TEST_CASE("the quotient by three generators has its own four dimensional representation") {
  // generators u, w, z with uw + wu = 0, uz + zw = 0, wz + zu = 0
  long long t1 = 2, t2 = 3, t3 = 5;
  IntMat u(4), w(4), z(4);
  u.at(0, 0) = t1;
  u.at(1, 1) = -t1;
  u.at(2, 3) = u.at(3, 2) = -t2;
  w.at(0, 1) = w.at(1, 0) = t2;
  w.at(2, 2) = -t1;
  w.at(3, 3) = t1;
  z.at(0, 2) = z.at(1, 3) = z.at(2, 0) = z.at(3, 1) = t3;
  CHECK(mat_add(mat_mul(u, w), mat_mul(w, u)).is_zero());
  CHECK(mat_add(mat_mul(u, z), mat_mul(z, w)).is_zero());
  CHECK(mat_add(mat_mul(w, z), mat_mul(z, u)).is_zero());
  CHECK_FALSE(mat_mul(u, w).is_zero());
  CHECK_FALSE(mat_mul(u, z).is_zero());
}

TEST_CASE("the two by two tensor embedding respects the crossing signs") {
  CHECK(tensor_embedding_check(2, {1, 2, 1, 3}, 200, 11));
  CHECK(tensor_embedding_check(0, {1, 1}, 100, 12));
  CHECK(tensor_embedding_check(2, {1, 1}, 100, 13));
  CHECK(tensor_embedding_check(1, {1, 1}, 100, 14));
  CHECK(tensor_embedding_check(3, {2, 1, 1, 2, 1, 4}, 300, 15));
}

TEST_CASE("monomials without the long generator survive some cut") {
  for (int n = 3; n <= 5; ++n) {
    ZRing ring(n, true);
    for (int d = 0; d <= 5; ++d)
      for (auto& key : ZRing::canonical_monomials(n, d)) {
        bool has_long = false;
        for (auto& f : key) has_long = has_long || (f.lo() == 1 && f.hi() == n);
        int cuts = 0;
        for (int i = 1; i < n; ++i)
          if (splits_at_cut(key, i)) ++cuts;
        CAPTURE(n);
        CAPTURE(ZRing::to_text(key));
        if (has_long) {
          CHECK(cuts == 0);  // the long generator crosses every cut
        } else {
          REQUIRE(cuts > 0);
          // the split pieces really live in the two window quotients
          for (int i = 1; i < n; ++i) {
            if (!splits_at_cut(key, i)) continue;
            std::vector<ZFactor> left, right;
            for (auto& f : key) (f.hi() <= i ? left : right).push_back(f);
            ZRing::Elt l = ring.normalize(left), r = ring.normalize(right);
            CHECK_FALSE(ring.quotient_interval(l, 1, i).empty());
            CHECK_FALSE(ring.quotient_interval(r, i + 1, n).empty());
          }
        }
      }
  }
}

}
