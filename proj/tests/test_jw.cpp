#include <algorithm>
#include <climits>

#include "doctest.h"
#include "khtensor/cupcap.hpp"
#include "khtensor/decat.hpp"

using namespace kht;

namespace {

int kappa0(const TensorAlgebra& alg) { return alg.kappa_index(Kappa{alg.l(), alg.k(), std::vector<int>(alg.l(), 0)}); }

// Sum over terms of (-1)^n q^shift gdim(e_u T eps).
LaurentPoly euler_block(const ModuleContext& ctx, const ProjComplex& c, int u) {
  LaurentPoly chi;
  for (int n = c.lo; n <= c.hi(); ++n)
    for (const Summand& s : c.at(n)) {
      const auto g = LaurentPoly::from_dims(ctx.type_module(s.alpha).module.graded_dim(u)).shifted(s.shift);
      if (n % 2 == 0) chi += g;
      else chi -= g;
    }
  return chi;
}

}  // namespace

TEST_CASE("the projector fixes the projective-injective and kills L1") {
  TensorAlgebra alg(2, 1);
  ModuleContext ctx(alg);
  const int k00 = kappa0(alg), k01 = alg.kappa_index(Kappa{2, 1, {0, 1}});
  const auto p = jw_projection(ctx, ctx.projective(k00), 8);
  REQUIRE(p.size() == 1);
  CHECK(p.at(0) == std::vector<Summand>{{k00, 0}});
  CHECK(jw_projection(ctx, ctx.simple(k01), 8).size() == 0);
  // e_0 L0 is the simple of e_0 T e_0 = k[y]/y^2: a periodic tail.
  const auto l0 = jw_projection(ctx, ctx.simple(k00), 8);
  CHECK(l0.lo == -8);
  for (int n = -8; n <= 0; ++n) CHECK(l0.at(n) == std::vector<Summand>{{k00, -2 * n}});
}

TEST_CASE("the projector on P_(0,1) expands q / (1 + q^2)") {
  TensorAlgebra alg(2, 1);
  ModuleContext ctx(alg);
  const int k00 = kappa0(alg), k01 = alg.kappa_index(Kappa{2, 1, {0, 1}});
  const auto c = jw_projection(ctx, ctx.projective(k01), 8);
  CHECK(c.lo == -8);
  LaurentPoly chi;
  for (int n = -8; n <= 0; ++n) {
    REQUIRE(c.at(n).size() == 1);
    CHECK(c.at(n)[0].alpha == k00);
    chi += LaurentPoly::monomial(c.at(n)[0].shift, n % 2 == 0 ? 1 : -1);
  }
  CHECK(chi == jw_matrix(2, 1, 17).at({0, 1}));
  CHECK(is_complex(HomSpaces(ctx), c));
}

TEST_CASE("Euler characteristic of the projector matches the classical series") {
  const int cutoff = 6;
  for (auto [l, k] : {std::pair{2, 1}, {3, 1}, {2, 2}, {3, 2}, {4, 2}}) {
    TensorAlgebra alg(l, k);
    ModuleContext ctx(alg);
    const QVector p0 = vector_p(alg.kappa(kappa0(alg)));
    const LaurentPoly norm = pairing(p0, p0);
    for (int t = 0; t < alg.num_kappas(); ++t) {
      if (alg.kappa(t).violating()) continue;
      const auto c = jw_projection(ctx, ctx.projective(t), cutoff);
      INFO("l=" << l << " k=" << k << " " << alg.kappa(t).str());
      CHECK(is_complex(HomSpaces(ctx), c));
      // Degrees below the lowest shift in the deepest term are complete.
      int bound = INT_MAX / 2;
      if (c.size() > 0 && c.lo == -cutoff)
        for (const Summand& s : c.at(c.lo)) bound = std::min(bound, s.shift - 3);
      for (int u = 0; u < alg.num_kappas(); ++u) {
        const LaurentPoly g = pairing(vector_p(alg.kappa(u)), p0);
        const LaurentPoly expect = series_divide(pairing(p0, vector_p(alg.kappa(t))) * g, norm, bound + 8);
        const LaurentPoly got = euler_block(ctx, c, u);
        CHECK(got.truncated(bound) == expect.truncated(bound));
      }
    }
  }
}

TEST_CASE("the projector is idempotent") {
  for (auto [l, k] : {std::pair{2, 1}, {3, 1}, {3, 2}}) {
    TensorAlgebra alg(l, k);
    ModuleContext ctx(alg);
    for (int t = 0; t < alg.num_kappas(); ++t) {
      if (alg.kappa(t).violating()) continue;
      const auto once = jw_projection(ctx, ctx.projective(t), 4);
      const auto twice = jw_projection(ctx, to_modules(ctx, once), 4);
      INFO("l=" << l << " k=" << k << " " << alg.kappa(t).str());
      CHECK(twice.lo == once.lo);
      CHECK(twice.terms == once.terms);
    }
  }
}
