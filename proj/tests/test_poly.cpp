#include "doctest.h"
#include "khtensor/poly.hpp"

using namespace kht;

namespace {
MultiPoly Y(int k, int i) { return MultiPoly::variable(k, i); }
}

TEST_CASE("complete symmetric functions") {
  CHECK(complete_symmetric(2, 1, 2) == Y(2, 1) * Y(2, 1));
  CHECK(complete_symmetric(0, 3, 3) == MultiPoly::constant(3, Scalar(1)));
  CHECK(complete_symmetric(3, 0, 2).is_zero());
  auto y1 = Y(2, 1), y2 = Y(2, 2);
  CHECK(complete_symmetric(2, 2, 2) == y1 * y1 + y1 * y2 + y2 * y2);
  // Number of terms of h_p in j variables is C(p+j-1, j-1).
  CHECK(complete_symmetric(3, 3, 4).terms().size() == 10);
}

TEST_CASE("elementary symmetric functions") {
  CHECK(elementary_symmetric(1, {2}, 2) == Y(2, 2));
  CHECK(elementary_symmetric(2, {2, 3}, 3) == Y(3, 2) * Y(3, 3));
  CHECK(elementary_symmetric(2, {2}, 2).is_zero());
}

TEST_CASE("inclusion-exclusion identity for complete symmetric functions") {
  for (int m = 1; m <= 4; ++m)
    for (int j = 0; j < m; ++j)
      for (int p = 0; p <= 4; ++p) {
        std::vector<int> tail;
        for (int v = j + 1; v <= m; ++v) tail.push_back(v);
        MultiPoly rhs(m);
        for (int i = 0; i <= p; ++i) {
          MultiPoly t = elementary_symmetric(i, tail, m) * complete_symmetric(p - i, m, m);
          rhs += (i % 2 ? -t : t);
        }
        CHECK(complete_symmetric(p, j, m) == rhs);
      }
}

TEST_CASE("demazure operator") {
  CHECK(demazure(1, MultiPoly::constant(2, Scalar(1))).is_zero());
  CHECK(demazure(1, Y(2, 1)) == MultiPoly::constant(2, Scalar(-1)));
  CHECK(demazure(1, Y(2, 1) * Y(2, 1)) == -(Y(2, 1) + Y(2, 2)));

  // Oracle: (Y_{i+1} - Y_i) * demazure(f) == f - s_i f, on all monomials.
  for (int d = 0; d <= 4; ++d)
    for (const auto& e : monomials_of_degree(3, d))
      for (int i = 1; i <= 2; ++i) {
        MultiPoly f = MultiPoly::monomial(e, Scalar(3));
        MultiPoly g = demazure(i, f);
        CHECK((Y(3, i + 1) - Y(3, i)) * g == f - f.swapped(i));
        CHECK(demazure(i, g).is_zero());
        const int other = i == 1 ? 3 : 1;
        MultiPoly sym = Y(3, i) * Y(3, i + 1) + Y(3, other);
        CHECK(demazure(i, sym * f) == sym * g);
        CHECK((f.degree() == 0 ? g.is_zero() : g.is_zero() || g.degree() == f.degree() - 1));
      }
}

TEST_CASE("prime field arithmetic") {
  FieldScope scope(3);
  CHECK((Scalar(2) + Scalar(2)) == Scalar(1));
  CHECK(Scalar(2).inverse() == Scalar(2));
  CHECK(Scalar(1, 2) == Scalar(2));
}

TEST_CASE("rational arithmetic") {
  CHECK(Scalar(1, 2) + Scalar(1, 3) == Scalar(5, 6));
  CHECK(Scalar(-4, 6) == Scalar(2, -3));
  CHECK(Scalar(7, 3).inverse() * Scalar(7, 3) == Scalar(1));
}
