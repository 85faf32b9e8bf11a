#include "doctest.h"
#include "khtensor/algebra.hpp"

using namespace kht;

namespace {
int sum_squares(int l, int k) {
  int s = 0;
  for (const auto& [p, list] : enumerate_backdrops(l, k)) s += static_cast<int>(list.size() * list.size());
  return s;
}
}  // namespace

TEST_CASE("two reds, one black") {
  TensorAlgebra alg(2, 1);
  CHECK(alg.dim() == 5);
  const int k00 = alg.kappa_index(Kappa{2, 1, {0, 0}});
  const int k01 = alg.kappa_index(Kappa{2, 1, {0, 1}});
  const int k11 = alg.kappa_index(Kappa{2, 1, {1, 1}});
  CHECK(alg.block_dim(k00, k00) == 2);
  CHECK(alg.block_dim(k00, k01) == 1);
  CHECK(alg.block_dim(k01, k00) == 1);
  CHECK(alg.block_dim(k01, k01) == 1);
  CHECK(alg.idempotent(k11).is_zero());
  auto y = alg.generator(*alg.find_generator(GenKind::Y, 1, k00));
  CHECK(y.mat.rows() == 2);
  CHECK(!y.mat.is_zero());
  CHECK((y.mat * y.mat).is_zero());
  auto ip = alg.generator(*alg.find_generator(GenKind::IotaPlus, 1, k00));
  CHECK(ip.target == k01);
  CHECK(ip.degree == 1);
  Matrix expected(1, 2);
  expected(0, 0) = Scalar(1);
  CHECK(ip.mat == expected);
}

TEST_CASE("relations hold over Q and F2") {
  for (int field : {0, 2}) {
    FieldScope scope(field);
    for (int l = 0; l <= 4; ++l)
      for (int k = 0; k <= std::min(l, 2); ++k) {
        TensorAlgebra alg(l, k);
        auto rep = verify_relations(alg);
        INFO("l=" << l << " k=" << k << " field=" << field);
        for (const auto& f : rep.failures) INFO(f);
        CHECK(rep.ok());
        if (k > 0) CHECK(rep.checked > 0);
      }
  }
}

TEST_CASE("cellular basis spans the algebra") {
  for (int l = 0; l <= 4; ++l)
    for (int k = 0; k <= std::min(l, 2); ++k) {
      TensorAlgebra alg(l, k);
      auto cells = cellular_basis(alg);
      INFO("l=" << l << " k=" << k);
      CHECK(static_cast<int>(cells.size()) == sum_squares(l, k));
      CHECK(cellular_rank(alg, cells) == sum_squares(l, k));
      CHECK(alg.dim() == sum_squares(l, k));
      for (const auto& c : cells) {
        CHECK(!c.mat.is_zero());
        CHECK(alg.is_homogeneous(c.target, c.source, c.mat, c.degree));
      }
    }
}

TEST_CASE("star exchanges cellular indices") {
  TensorAlgebra alg(3, 1);
  auto cells = cellular_basis(alg);
  for (const auto& c : cells)
    for (const auto& d : cells)
      if (c.s.str() == d.t.str() && c.t.str() == d.s.str())
        CHECK(alg.word_matrix(alg.star_word(c.word), c.target) == d.mat);
}

TEST_CASE("nilHecke corner") {
  for (int l = 1; l <= 4; ++l)
    for (int k = 1; k <= std::min(l, 2); ++k) {
      TensorAlgebra alg(l, k);
      const int e0 = alg.kappa_index(Kappa{l, k, std::vector<int>(l, 0)});
      CHECK(idempotent_subalgebra_dim(alg, {e0}) == factorial(k) * factorial(k) * binomial(l, k));
    }
  CHECK(idempotent_subalgebra_dim(TensorAlgebra(2, 1), {0}) == 2);
  CHECK(idempotent_subalgebra_dim(TensorAlgebra(3, 1), {0}) == 3);
}
