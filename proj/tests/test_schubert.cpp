#include "doctest.h"
#include "khtensor/schubert.hpp"

using namespace kht;

TEST_CASE("ideal generators for two reds and one black") {
  MultiPoly y = MultiPoly::variable(1, 1);
  auto g00 = ideal_generators(Kappa{2, 1, {0, 0}});
  CHECK(g00 == std::vector<MultiPoly>{y * y});
  auto g01 = ideal_generators(Kappa{2, 1, {0, 1}});
  CHECK(std::find(g01.begin(), g01.end(), y) != g01.end());
  auto g11 = ideal_generators(Kappa{2, 1, {1, 1}});
  CHECK(std::find(g11.begin(), g11.end(), MultiPoly::constant(1, Scalar(1))) != g11.end());
}

TEST_CASE("quotient ring dimensions") {
  QuotientRing r00(Kappa{2, 1, {0, 0}});
  CHECK(r00.graded_dims() == std::vector<int>{1, 1});
  CHECK(r00.reduce(MultiPoly::variable(1, 1) * MultiPoly::variable(1, 1)) == Vec(2));
  CHECK(QuotientRing(Kappa{2, 1, {0, 1}}).dim() == 1);
  CHECK(QuotientRing(Kappa{2, 1, {1, 1}}).is_zero());
  // Hilbert series of k[Y1..Yk]/(h_{l-k+1},...,h_l) is [l-k+1]...[l].
  CHECK(QuotientRing(Kappa{4, 2, {0, 0, 0, 0}}).dim() == 12);
  CHECK(QuotientRing(Kappa{4, 2, {0, 0, 0, 0}}).graded_dims() == std::vector<int>{1, 2, 3, 3, 2, 1});
  for (int l = 0; l <= 6; ++l)
    for (int k = 0; k <= std::min(l, 3); ++k) {
      QuotientRing r(Kappa{l, k, std::vector<int>(l, 0)});
      CHECK(r.dim() == factorial(l) / factorial(l - k));
    }
}

TEST_CASE("reduction kills generators and ideals are monotone") {
  for (int l = 1; l <= 4; ++l)
    for (int k = 1; k <= 2; ++k) {
      auto kappas = enumerate_kappas(l, k);
      std::vector<QuotientRing> rings;
      for (const auto& kap : kappas) rings.emplace_back(kap);
      for (size_t a = 0; a < kappas.size(); ++a) {
        for (const auto& g : ideal_generators(kappas[a])) CHECK(is_zero(rings[a].reduce(g)));
        if (!rings[a].is_zero()) CHECK(rings[a].reduce(MultiPoly::constant(k, Scalar(1)))[0] == Scalar(1));
        for (size_t b = 0; b < kappas.size(); ++b)
          if (kappas[a].leq(kappas[b]))
            for (const auto& g : ideal_generators(kappas[a])) CHECK(is_zero(rings[b].reduce(g)));
      }
    }
}

TEST_CASE("multiplication by Y_i descends to the lowered idempotent") {
  for (int l = 1; l <= 4; ++l)
    for (int k = 1; k <= 2; ++k)
      for (const auto& kap : enumerate_kappas(l, k))
        for (int i = 1; i <= k; ++i) {
          if (!kap.in_image(i)) continue;
          Kappa low = kappa_shift(kap, i, -1);
          QuotientRing tgt(low);
          for (const auto& g : ideal_generators(kap)) CHECK(is_zero(tgt.reduce(g.times_var(i))));
        }
}
