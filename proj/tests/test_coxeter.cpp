#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "nilcox/coxeter.hpp"

using namespace nilcox;

namespace {

// Coefficients of prod_i (1 + q + ... + q^{d_i - 1}).
std::vector<int64_t> poincare_poly(const std::vector<int>& degrees) {
  std::vector<int64_t> p{1};
  for (int d : degrees) {
    std::vector<int64_t> q(p.size() + d - 1, 0);
    for (size_t i = 0; i < p.size(); ++i)
      for (int k = 0; k < d; ++k) q[i + k] += p[i];
    p = std::move(q);
  }
  return p;
}

}  // namespace

TEST_SUITE("coxeter") {

TEST_CASE("orders and length histograms match the degree polynomials") {
  struct Case {
    const char* diagram;
    std::vector<int> degrees;
  };
  std::vector<Case> cases = {
      {"A:1", {2}},
      {"A:2", {2, 3}},
      {"A:3", {2, 3, 4}},
      {"A:4", {2, 3, 4, 5}},
      {"A:5", {2, 3, 4, 5, 6}},
      {"B:2", {2, 4}},
      {"B:3", {2, 4, 6}},
      {"D:4", {2, 4, 4, 6}},
      {"D:5", {2, 4, 6, 8, 5}},
      {"I2:5", {2, 5}},
      {"I2:7", {2, 7}},
      {"G:2", {2, 6}},
      {"H:3", {2, 6, 10}},
  };
  for (auto& c : cases) {
    CAPTURE(c.diagram);
    auto G = CoxeterGroup::build(c.diagram);
    auto expect = poincare_poly(c.degrees);
    int64_t order = std::accumulate(expect.begin(), expect.end(), int64_t(0));
    CHECK(G->order() == (size_t)order);
    CHECK(G->length_histogram() == expect);
    CHECK(G->max_length() == (int)expect.size() - 1);
  }
}

TEST_CASE("identity and generators get the first ids in ShortLex order") {
  for (const char* s : {"A:3", "B:3", "H:3", "I2:7"}) {
    auto G = CoxeterGroup::build(s);
    CHECK(G->length(0) == 0);
    CHECK(G->word(0).empty());
    for (int i = 1; i <= G->rank(); ++i) {
      CHECK(G->length(i) == 1);
      CHECK(G->word(i) == std::vector<int>{i});
    }
  }
}

TEST_CASE("longest element properties") {
  auto A3 = CoxeterGroup::build("A:3");
  auto w0 = A3->longest();
  CHECK(A3->length(w0) == 6);
  CHECK(A3->multiply(w0, w0) == 0);
  for (int i = 1; i <= 3; ++i)
    CHECK(A3->right_mul_gen(w0, i).second == -1);

  CHECK(CoxeterGroup::build("B:3")->max_length() == 9);
  CHECK(CoxeterGroup::build("D:4")->max_length() == 12);
  CHECK(CoxeterGroup::build("H:3")->max_length() == 15);
  CHECK(CoxeterGroup::build("I2:7")->max_length() == 7);
}

TEST_CASE("right_mul_gen is an involution with opposite signs") {
  for (const char* s : {"A:3", "B:3", "D:4", "I2:6"}) {
    auto G = CoxeterGroup::build(s);
    for (size_t w = 0; w < G->order(); ++w)
      for (int i = 1; i <= G->rank(); ++i) {
        auto [v, sg] = G->right_mul_gen((CoxeterGroup::Elt)w, i);
        auto [back, sg2] = G->right_mul_gen(v, i);
        CHECK(back == (CoxeterGroup::Elt)w);
        CHECK(sg * sg2 == -1);
      }
  }
}

TEST_CASE("words are reduced and evaluate back to their element") {
  for (const char* s : {"A:4", "B:3", "D:4", "H:3"}) {
    auto G = CoxeterGroup::build(s);
    for (size_t w = 0; w < G->order(); ++w) {
      auto id = (CoxeterGroup::Elt)w;
      CHECK((int)G->word(id).size() == G->length(id));
      CHECK(G->nil_from_word(G->word(id)) == id);
    }
  }
}

TEST_CASE("inverse and associativity") {
  auto G = CoxeterGroup::build("B:3");
  for (size_t w = 0; w < G->order(); ++w) {
    auto id = (CoxeterGroup::Elt)w;
    CHECK(G->multiply(id, G->inverse(id)) == 0);
    CHECK(G->multiply(G->inverse(id), id) == 0);
    CHECK(G->length(G->inverse(id)) == G->length(id));
  }
  // associativity on a deterministic sample
  for (size_t a = 0; a < G->order(); a += 7)
    for (size_t b = 1; b < G->order(); b += 11)
      for (size_t c = 2; c < G->order(); c += 13) {
        auto x = G->multiply(G->multiply((int)a, (int)b), (int)c);
        auto y = G->multiply((int)a, G->multiply((int)b, (int)c));
        CHECK(x == y);
      }
}

TEST_CASE("braid relations hold in the nil product") {
  auto A2 = CoxeterGroup::build("A:2");
  CHECK(A2->nil_from_word({1, 2, 1}) == A2->nil_from_word({2, 1, 2}));
  CHECK(A2->nil_from_word({1, 2, 1}) != -1);
  CHECK(A2->nil_from_word({1, 1}) == -1);

  auto B2 = CoxeterGroup::build("B:2");
  CHECK(B2->nil_from_word({1, 2, 1, 2}) == B2->nil_from_word({2, 1, 2, 1}));
  CHECK(B2->nil_from_word({1, 2, 1, 2}) == B2->longest());
}

TEST_CASE("psi is conjugation by the longest element") {
  struct Case {
    const char* diagram;
    std::map<int, int> gen_image;  // expected psi on generators
  };
  std::vector<Case> cases = {
      {"A:3", {{1, 3}, {2, 2}, {3, 1}}},
      {"A:4", {{1, 4}, {2, 3}, {3, 2}, {4, 1}}},
      {"B:3", {{1, 1}, {2, 2}, {3, 3}}},
      {"D:4", {{1, 1}, {2, 2}, {3, 3}, {4, 4}}},
      {"G:2", {{1, 1}, {2, 2}}},
      {"I2:4", {{1, 1}, {2, 2}}},
      {"I2:5", {{1, 2}, {2, 1}}},
      {"I2:7", {{1, 2}, {2, 1}}},
      {"H:3", {{1, 1}, {2, 2}, {3, 3}}},
      {"D:5", {{1, 5}, {2, 2}, {3, 3}, {4, 4}, {5, 1}}},
  };
  for (auto& c : cases) {
    CAPTURE(c.diagram);
    auto G = CoxeterGroup::build(c.diagram);
    for (auto [g, img] : c.gen_image) CHECK(G->psi(g) == img);
    CHECK(G->psi(0) == 0);
    CHECK(G->psi(G->longest()) == G->longest());
    // involution + automorphism on a sample
    for (size_t w = 0; w < G->order(); w += 3) {
      auto id = (CoxeterGroup::Elt)w;
      CHECK(G->psi(G->psi(id)) == id);
    }
    if (G->order() <= 250)
      for (size_t a = 0; a < G->order(); ++a)
        for (size_t b = 0; b < G->order(); ++b)
          CHECK(G->psi(G->multiply((int)a, (int)b)) ==
                G->multiply(G->psi((int)a), G->psi((int)b)));
  }
}

TEST_CASE("generic engine agrees with the combinatorial models") {
  // Same diagram through different engines must produce identical tables,
  // because ids are canonically sorted by (length, ShortLex).
  struct Pair {
    const char* model;
    const char* matrix;
  };
  std::vector<Pair> pairs = {
      {"A:2", "matrix:[[1,3],[3,1]]"},
      {"B:2", "matrix:[[1,4],[4,1]]"},
      {"I2:4", "matrix:[[1,4],[4,1]]"},
      {"A:3", "matrix:[[1,3,2],[3,1,3],[2,3,1]]"},
      {"B:3", "matrix:[[1,3,2],[3,1,4],[2,4,1]]"},
  };
  for (auto& pr : pairs) {
    CAPTURE(pr.model);
    auto G = CoxeterGroup::build(pr.model);
    auto M = CoxeterGroup::build(pr.matrix);
    REQUIRE(G->order() == M->order());
    for (size_t w = 0; w < G->order(); ++w) {
      auto id = (CoxeterGroup::Elt)w;
      CHECK(G->length(id) == M->length(id));
      CHECK(G->word(id) == M->word(id));
      for (int s = 1; s <= G->rank(); ++s) {
        CHECK(G->right(id, s) == M->right(id, s));
        CHECK(G->left(s, id) == M->left(s, id));
      }
    }
  }
}

TEST_CASE("diagram parsing rejects bad input") {
  CHECK_THROWS(CoxeterDiagram::parse("E:8"));
  CHECK_THROWS(CoxeterDiagram::parse("A2"));
  CHECK_THROWS(CoxeterDiagram::parse("D:3"));
  CHECK_THROWS(CoxeterDiagram::parse("H:4"));
  CHECK_THROWS(CoxeterDiagram::parse("matrix:[[1,3],[4,1]]"));
  CHECK_THROWS(CoxeterDiagram::parse("matrix:[[2,3],[3,2]]"));
  CHECK_THROWS(CoxeterGroup::build("matrix:[[1,3,3],[3,1,3],[3,3,1]]", 5000));
}

}  // TEST_SUITE
