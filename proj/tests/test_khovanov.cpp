#include <stdexcept>

#include "doctest.h"
#include "khtensor/cupcap.hpp"
#include "khtensor/decat.hpp"
#include "khtensor/khovanov.hpp"

using namespace kht;

namespace {

using Table = std::map<std::pair<int, int>, int>;

Table cube(const std::string& word, int strands = 0) {
  return kh_cube(LinkDiagram::from_braid(word, strands)).ranks();
}

// Coordinates of x (x) y in V (x) V, index 2a + b.
Scalar pair_coeff(const Vec& v, int a, int b) { return v[2 * a + b]; }

}  // namespace

TEST_CASE("the Frobenius algebra H*(S^2)") {
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        // (ab)c = a(bc)
        Vec left(2), right(2);
        const Vec ab = FrobAlg::multiply(a, b), bc = FrobAlg::multiply(b, c);
        for (int u = 0; u < 2; ++u) {
          axpy(left, ab[u], FrobAlg::multiply(u, c));
          axpy(right, bc[u], FrobAlg::multiply(a, u));
        }
        CHECK(left == right);
      }
  for (int a = 0; a < 2; ++a) {
    // Counit: (epsilon (x) id) Delta = id.
    const Vec d = FrobAlg::comultiply(a);
    for (int b = 0; b < 2; ++b) {
      Scalar s;
      for (int u = 0; u < 2; ++u) s += FrobAlg::counit(u) * pair_coeff(d, u, b);
      CHECK(s == Scalar(a == b ? 1 : 0));
    }
    // Frobenius: Delta(m(a, 1)) = (m (x) id)(a (x) Delta(1)).
    const Vec d1 = FrobAlg::comultiply(0);
    Vec rhs(4);
    for (int u = 0; u < 2; ++u)
      for (int v = 0; v < 2; ++v) {
        const Vec m = FrobAlg::multiply(a, u);
        for (int w = 0; w < 2; ++w) rhs[2 * w + v] += m[w] * pair_coeff(d1, u, v);
      }
    Vec lhs(4);
    const Vec m = FrobAlg::multiply(a, 0);
    for (int w = 0; w < 2; ++w) axpy(lhs, m[w], FrobAlg::comultiply(w));
    CHECK(lhs == rhs);
  }
  // t squares to zero; the trace pairs 1 with t.
  CHECK(is_zero(FrobAlg::multiply(1, 1)));
  CHECK(FrobAlg::counit(1) == Scalar(1));
  CHECK(FrobAlg::counit(0).is_zero());
}

TEST_CASE("braid words parse and validate") {
  const auto d = LinkDiagram::from_braid("1 -2 1");
  CHECK(d.strands == 3);
  CHECK(d.writhe() == 1);
  CHECK_THROWS_AS(LinkDiagram::from_braid("1 x"), std::invalid_argument);
  CHECK_THROWS_AS(LinkDiagram::from_braid("0"), std::invalid_argument);
  CHECK_THROWS_AS(LinkDiagram::from_braid("2", 2), std::invalid_argument);
  CHECK_THROWS_AS(build_cube(LinkDiagram::from_braid("1 1 1 1"), 3), std::invalid_argument);
}

TEST_CASE("cube of resolutions of the Hopf link") {
  const Cube c = build_cube(LinkDiagram::from_braid("1 1"));
  CHECK(c.circles == std::vector<int>{2, 1, 1, 2});
  const Cube u = build_cube(LinkDiagram::from_braid("", 1));
  CHECK(u.circles == std::vector<int>{1});
}

TEST_CASE("the cube differential squares to zero") {
  for (const char* w : {"1 1 1", "1 -2 1 -2", "1 1 2 -1 2", "-1 -1 2 2 1", "1 2 3 -2 1 3"}) {
    const auto d = LinkDiagram::from_braid(w);
    const Cube c = build_cube(d);
    for (int h = -c.n_minus; h < c.n_plus - 1; ++h)
      for (int q = -3 * c.n - 4; q <= 3 * c.n + 4; ++q) {
        const Matrix a = kh_differential(c, h, q), b = kh_differential(c, h + 1, q);
        if (a.cols() == 0 || b.rows() == 0) continue;
        CHECK((b * a).is_zero());
      }
  }
}

TEST_CASE("cube homology of small links") {
  CHECK(cube("", 1) == Table{{{0, -1}, 1}, {{0, 1}, 1}});
  CHECK(cube("1 1") == Table{{{0, 0}, 1}, {{0, 2}, 1}, {{2, 4}, 1}, {{2, 6}, 1}});
  CHECK(cube("1 1 1") == Table{{{0, 1}, 1}, {{0, 3}, 1}, {{2, 5}, 1}, {{3, 9}, 1}});
  CHECK(cube("-1 -1 -1") == Table{{{0, -1}, 1}, {{0, -3}, 1}, {{-2, -5}, 1}, {{-3, -9}, 1}});
  // Figure eight.
  CHECK(cube("1 -2 1 -2") ==
        Table{{{-2, -5}, 1}, {{-1, -1}, 1}, {{0, -1}, 1}, {{0, 1}, 1}, {{1, 1}, 1}, {{2, 5}, 1}});
  FieldScope f2(2);
  CHECK(cube("1 1 1") == Table{{{0, 1}, 1}, {{0, 3}, 1}, {{2, 5}, 1}, {{2, 7}, 1}, {{3, 7}, 1}, {{3, 9}, 1}});
}

TEST_CASE("cube homology is a link invariant and categorifies Jones") {
  const std::vector<std::pair<std::string, int>> links = {
      {"1 1 1", 2}, {"1 -2 1 -2", 3}, {"1 1 2", 3}, {"1 2 1 2", 3}, {"1 1 1 1", 2}, {"-1 2 2 2", 3}};
  for (int p : {0, 2, 3}) {
    FieldScope field(p);
    for (const auto& [w, n] : links) {
      const auto d = LinkDiagram::from_braid(w, n);
      const BigradedTable t = kh_cube(d);
      INFO(w << " over " << p);
      CHECK(t.euler_characteristic() == jones_polynomial(d.braid, n));
      // Conjugate and stabilized presentations.
      auto rot = d.braid;
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      CHECK(kh_cube(LinkDiagram{rot, n}) == t);
      auto stab = d.braid;
      stab.push_back(n);
      CHECK(kh_cube(LinkDiagram{stab, n + 1}) == t);
      stab.back() = -n;
      CHECK(kh_cube(LinkDiagram{stab, n + 1}) == t);
    }
  }
}

TEST_CASE("cube and functor pipelines agree") {
  for (int p : {0, 2}) {
    FieldScope field(p);
    for (const std::vector<int>& b : {std::vector<int>{}, {1}, {-1}, {1, 1}, {1, 1, 1}, {-1, -1, -1}, {1, -1}}) {
      FunctorEngine eng;
      CHECK(khovanov_ranks(eng.run(trace_closure(b, 2))) == kh_cube(LinkDiagram{b, 2}).ranks());
    }
  }
}
