#include "doctest.h"
#include "khtensor/complex.hpp"
#include "khtensor/decat.hpp"
#include "khtensor/functors.hpp"

using namespace kht;

TEST_CASE("graded Hom dimensions between projectives for two reds") {
  TensorAlgebra alg(2, 1);
  const int k00 = alg.kappa_index(Kappa{2, 1, {0, 0}});
  const int k01 = alg.kappa_index(Kappa{2, 1, {0, 1}});
  CHECK(hom_dim_graded(alg, k00, k00).at_one() == 2);
  CHECK(hom_dim_graded(alg, k01, k01).at_one() == 1);
  CHECK(hom_dim_graded(alg, k00, k00) == LaurentPoly::monomial(0) + LaurentPoly::monomial(2));
  for (int a = 0; a < alg.num_kappas(); ++a)
    for (int b = 0; b < alg.num_kappas(); ++b)
      CHECK(hom_dim_graded(alg, a, b) == pairing(vector_p(alg.kappa(a)), vector_p(alg.kappa(b))));
}

TEST_CASE("standard modules have the cell module dimensions") {
  for (int l = 1; l <= 4; ++l)
    for (int k = 0; k <= l && k <= 2; ++k) {
      TensorAlgebra alg(l, k);
      ModuleContext ctx(alg);
      // Cell modules: S_kappa for kappa = bottom_kappa(lambda) has a basis of
      // the backdrops of shape lambda, graded by their kappa.
      std::map<std::vector<int>, std::map<std::vector<int>, int>> cell;
      for (const auto& [part, list] : enumerate_backdrops(l, k))
        for (const auto& b : list) cell[bottom_kappa(part, l).v][kappa_of_backdrop(b).v]++;
      for (int t = 0; t < alg.num_kappas(); ++t) {
        if (alg.kappa(t).violating()) continue;
        INFO("l=" << l << " k=" << k << " " << alg.kappa(t).str());
        const Module s = standard_module(ctx, t).module;
        CHECK(verify_module(s));
        CHECK(alg.kappa(t).basic() == (cell.count(alg.kappa(t).v) == 1));
        for (int u = 0; u < alg.num_kappas(); ++u) CHECK(s.dim(u) == cell[alg.kappa(t).v][alg.kappa(u).v]);
        // The class of S_kappa is the standard vector.
        for (int u = 0; u < alg.num_kappas(); ++u)
          CHECK(LaurentPoly::from_dims(s.graded_dim(u)) == pairing(vector_p(alg.kappa(u)), vector_v(alg.kappa(t))));
      }
    }
  TensorAlgebra alg(2, 1);
  ModuleContext ctx(alg);
  CHECK(standard_module(ctx, alg.kappa_index(Kappa{2, 1, {0, 1}})).module.dim() == 2);
  CHECK(standard_module(ctx, alg.kappa_index(Kappa{2, 1, {0, 0}})).module.dim() == 1);
}

TEST_CASE("projectives are built from the empty picture by F and I") {
  for (int l = 1; l <= 3; ++l)
    for (int k = 0; k <= l && k <= 2; ++k)
      for (const Kappa& kappa : enumerate_kappas(l, k)) {
        if (kappa.violating()) continue;
        std::vector<std::unique_ptr<TensorAlgebra>> algs;
        std::vector<std::unique_ptr<ModuleContext>> ctxs;
        algs.push_back(std::make_unique<TensorAlgebra>(0, 0));
        ctxs.push_back(std::make_unique<ModuleContext>(*algs.back()));
        Module m = ctxs.back()->projective(0);
        bool zero = false;
        auto step = [&](int nl, int nk, bool red) {
          // More blacks than reds: the weight space vanishes.
          if (zero || nk > nl) {
            zero = true;
            return;
          }
          algs.push_back(std::make_unique<TensorAlgebra>(nl, nk));
          ctxs.push_back(std::make_unique<ModuleContext>(*algs.back()));
          m = red ? functor_I(*ctxs.back(), m) : functor_F(*ctxs.back(), m);
        };
        int blacks = 0;
        for (int h = 1; h <= l; ++h) {
          for (; blacks < kappa(h); ++blacks) step(h - 1, blacks + 1, false);
          step(h, blacks, true);
        }
        for (; blacks < k; ++blacks) step(l, blacks + 1, false);
        INFO(kappa.str());
        if (zero) {
          TensorAlgebra alg(l, k);
          CHECK(ModuleContext(alg).projective(alg.kappa_index(kappa)).dim() == 0);
          continue;
        }
        const TensorAlgebra& alg = *algs.back();
        CHECK(verify_module(m));
        const Module& p = ctxs.back()->projective(alg.kappa_index(kappa));
        for (int u = 0; u < alg.num_kappas(); ++u) CHECK(m.graded_dim(u) == p.graded_dim(u));
        CHECK(ctxs.back()->top_profile(m) == ctxs.back()->top_profile(p));
      }
}

TEST_CASE("E on the simples and projectives of two reds") {
  TensorAlgebra big(2, 1), small(2, 0);
  ModuleContext ctx(big), sctx(small);
  const int k00 = big.kappa_index(Kappa{2, 1, {0, 0}});
  const int k01 = big.kappa_index(Kappa{2, 1, {0, 1}});
  const Module e0 = functor_E(small, ctx.simple(k00));
  CHECK(verify_module(e0));
  CHECK(e0.dim() == 1);
  CHECK(functor_E(small, ctx.simple(k01)).dim() == 0);
  const Module ep = functor_E(small, ctx.projective(k01));
  CHECK(ep.dim() == 1);
  CHECK(ep.graded_dim() == std::map<int, int>{{1, 1}});
}

TEST_CASE("E sends projectives to projectives") {
  for (int l = 1; l <= 3; ++l)
    for (int k = 1; k <= l; ++k) {
      TensorAlgebra big(l, k), small(l, k - 1);
      ModuleContext ctx(big), sctx(small);
      for (int t = 0; t < big.num_kappas(); ++t) {
        const Module e = functor_E(small, ctx.projective(t));
        CHECK(verify_module(e));
        if (e.is_zero()) continue;
        INFO("l=" << l << " k=" << k << " " << big.kappa(t).str());
        CHECK(resolve(sctx, e).terms.size() == 1);
      }
    }
}

TEST_CASE("F is left adjoint to E on projectives") {
  // Hom(F P_s, P_t) = Hom(P_s, E P_t) = e_s E P_t.
  TensorAlgebra small(2, 0), big(2, 1);
  ModuleContext sctx(small), ctx(big);
  for (int s = 0; s < small.num_kappas(); ++s) {
    const Module fp = functor_F(ctx, sctx.projective(s));
    const int image = big.kappa_index(Kappa{2, 1, small.kappa(s).v});
    for (int u = 0; u < big.num_kappas(); ++u) CHECK(fp.graded_dim(u) == ctx.projective(image).graded_dim(u));
  }
}
