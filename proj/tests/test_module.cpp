#include "doctest.h"
#include "khtensor/module.hpp"

using namespace kht;

namespace {

Vec unit(int n, int i) {
  Vec v(n);
  v[i] = Scalar(1);
  return v;
}

}  // namespace

TEST_CASE("projectives for two reds and one black") {
  TensorAlgebra alg(2, 1);
  ModuleContext ctx(alg);
  const int k00 = alg.kappa_index(Kappa{2, 1, {0, 0}});
  const int k01 = alg.kappa_index(Kappa{2, 1, {0, 1}});
  CHECK(ctx.basic().size() == 2);
  CHECK(ctx.positively_graded());
  CHECK(ctx.arrows().size() == 2);
  const Module& p0 = ctx.projective(k00);
  const Module& p1 = ctx.projective(k01);
  CHECK(p0.dim() == 3);
  CHECK(p1.dim() == 2);
  CHECK(verify_module(p0));
  CHECK(verify_module(p1));
  CHECK(p0.graded_dim() == std::map<int, int>{{0, 1}, {1, 1}, {2, 1}});
  auto top = ctx.top_profile(p0);
  CHECK(top == std::map<std::pair<int, int>, int>{{{k00, 0}, 1}});
  auto id = ctx.from_projective(k00, p0, unit(p0.dim(k00), 0));
  CHECK(is_module_map(p0, p0, id));
  CHECK(id.blocks[k00] == Matrix::identity(p0.dim(k00)));
  CHECK(id.blocks[k01] == Matrix::identity(p0.dim(k01)));
  // Hom(P_01, P_00) is e_01 P_00: one map of degree 1.
  auto f = ctx.from_projective(k01, p0, unit(p0.dim(k01), 0), 1);
  CHECK(is_module_map(p1.shifted(1), p0, f));
}

TEST_CASE("simple heads of basic projectives") {
  for (int l = 1; l <= 3; ++l)
    for (int k = 1; k <= std::min(l, 2); ++k) {
      TensorAlgebra alg(l, k);
      ModuleContext ctx(alg);
      INFO("l=" << l << " k=" << k);
      for (int t : ctx.basic()) {
        Module s = ctx.simple(t);
        CHECK(verify_module(s));
        if (ctx.positively_graded())
          for (int u : ctx.basic()) CHECK(s.dim(u) == (u == t ? 1 : 0));
        if (ctx.positively_graded()) CHECK(ctx.top(s).size() == 1);
      }
    }
}

TEST_CASE("kernel and direct sum") {
  TensorAlgebra alg(2, 1);
  ModuleContext ctx(alg);
  const int k00 = alg.kappa_index(Kappa{2, 1, {0, 0}});
  const int k01 = alg.kappa_index(Kappa{2, 1, {0, 1}});
  const Module& p0 = ctx.projective(k00);
  const Module& p1 = ctx.projective(k01);
  // P_01{1} -> P_00 by iota-: injective (nothing kills it in the faithful picture).
  auto f = ctx.from_projective(k01, p0, unit(p0.dim(k01), 0), 1);
  auto ker = kernel(p1.shifted(1), p0, f);
  CHECK(ker.module.dim() == 0);
  auto ds = direct_sum({&p0, &p1});
  CHECK(ds.module.dim() == 5);
  CHECK(verify_module(ds.module));
  CHECK(is_module_map(p1, ds.module, ds.inj[1]));
  CHECK((ds.proj[1] * ds.inj[1]).blocks[k01] == Matrix::identity(p1.dim(k01)));
  CHECK(ctx.top(ds.module).size() == 2);
}
