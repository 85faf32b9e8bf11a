#include "doctest.h"
#include "khtensor/cupcap.hpp"

using namespace kht;

TEST_CASE("inserting and removing a cup") {
  Kappa k{3, 2, {0, 1, 2}};
  for (int i = 0; i <= 3; ++i) {
    Kappa c = insert_cup(k, i);
    CHECK(c.valid());
    auto back = remove_cup(c, i);
    REQUIRE(back);
    CHECK(*back == k);
  }
  CHECK_FALSE(remove_cup(Kappa{2, 1, {0, 0}}, 0));
}

TEST_CASE("the cup on the empty picture is the simple L1") {
  TensorAlgebra big(2, 1), small(0, 0);
  ModuleContext ctx(big);
  CupBimodule cup = cup_bimodule(ctx, small, 0);
  CHECK(cup.descends);
  CHECK(verify_bimodule(cup.bimodule));
  const Module& col = cup.bimodule.cols[0];
  CHECK(col.dim() == 1);
  CHECK(col.dim(big.kappa_index(Kappa{2, 1, {0, 1}})) == 1);
}

TEST_CASE("cup bimodules are well defined") {
  for (auto [l, k] : {std::pair{1, 0}, std::pair{1, 1}, std::pair{2, 0}, std::pair{2, 1}}) {
    TensorAlgebra big(l + 2, k + 1), small(l, k);
    ModuleContext ctx(big);
    for (int i = 0; i <= l; ++i) {
      CAPTURE(l);
      CAPTURE(k);
      CAPTURE(i);
      CupBimodule cup = cup_bimodule(ctx, small, i);
      CHECK(cup.descends);
      CHECK(verify_bimodule(cup.bimodule));
    }
  }
}

TEST_CASE("the crossing bimodule for two reds") {
  TensorAlgebra big(2, 1), small(0, 0);
  ModuleContext ctx(big);
  CupBimodule cup = cup_bimodule(ctx, small, 0);
  Unit u = cup_unit(ctx, cup);
  CHECK(u.solutions == 1);
  CHECK(is_bimodule_map(identity_bimodule(ctx), u.target, u.map));
  Crossing x = crossing_bimodule(ctx, small, 0);
  CHECK(x.surjective);
  CHECK(x.bimodule.dim() == 4);
  CHECK(verify_bimodule(x.bimodule));
}

TEST_CASE("triangle identities of the cup adjunction") {
  for (auto [l, k] : {std::pair{0, 0}, std::pair{2, 1}})
    for (int i = 0; i <= l; ++i) {
      TensorAlgebra big(l + 2, k + 1), small(l, k);
      ModuleContext bc(big), sc(small);
      CupBimodule cup = cup_bimodule(bc, small, i);
      Unit u = cup_unit(bc, cup);
      Counit e = cup_counit(sc, cup, u);
      REQUIRE(e.solutions == 1);
      CHECK(is_bimodule_map(e.source, identity_bimodule(sc), e.map));
      Zigzag z = zigzag(cup, u, e);
      const Bimodule kd = mirror(cup.bimodule);
      for (size_t r = 0; r < z.left.size(); ++r)
        CHECK((z.left[r] - ModMap::identity(cup.bimodule.cols[r])).is_zero());
      for (size_t r = 0; r < z.right.size(); ++r) CHECK((z.right[r] - ModMap::identity(kd.cols[r])).is_zero());
    }
}

namespace {

ProjComplex single(const TensorAlgebra& alg, int type) {
  ProjComplex c;
  c.alg = &alg;
  c.terms = {{{type, 0}}};
  return c;
}

}  // namespace

TEST_CASE("cap after cup deloops into two shifted copies") {
  FunctorEngine eng;
  const ProjComplex circle = eng.apply_cap(eng.apply_cup(eng.ground(), 0), 0);
  CHECK(ground_ranks(circle) == std::map<std::pair<int, int>, int>{{{-1, 1}, 1}, {{1, -1}, 1}});
  const TensorAlgebra& alg = eng.algebra(2, 1);
  const ModuleContext& ctx = eng.context(2, 1);
  for (int a = 0; a < ctx.num_types(); ++a)
    for (int i = 0; i <= 2; ++i) {
      const ProjComplex c = eng.apply_cap(eng.apply_cup(single(alg, a), i), i);
      CHECK(removable_entries(HomSpaces(ctx), c) == 0);
      REQUIRE(c.size() == 2);
      std::vector<std::pair<int, int>> found;
      for (int n = c.lo; n <= c.hi(); ++n)
        for (const auto& s : c.at(n)) {
          CHECK(s.alpha == a);
          found.emplace_back(n, s.shift);
        }
      REQUIRE(found.size() == 2);
      CHECK(found[1].first - found[0].first == 2);
      CHECK(found[0].second - found[1].second == 2);
      CHECK(found[0].first + found[0].second == 0);
    }
}

TEST_CASE("second Reidemeister move on projectives of T^4") {
  FunctorEngine eng;
  const TensorAlgebra& alg = eng.algebra(4, 2);
  const ModuleContext& ctx = eng.context(4, 2);
  for (int a = 0; a < ctx.num_types(); ++a)
    for (int i = 0; i <= 2; ++i)
      for (int sign : {1, -1}) {
        const ProjComplex c = eng.apply_crossing(eng.apply_crossing(single(alg, a), i, sign), i, -sign);
        REQUIRE(c.size() == 1);
        CHECK(c.lo == 0);
        CHECK(c.at(0) == std::vector<Summand>{{a, 0}});
      }
}

namespace {

using Table = std::map<std::pair<int, int>, int>;

Table functor_kh(const std::vector<int>& braid) {
  FunctorEngine eng;
  return khovanov_ranks(eng.run(trace_closure(braid, 2)));
}

}  // namespace

TEST_CASE("functor pipeline gives Khovanov homology of small closures") {
  const Table unknot{{{0, -1}, 1}, {{0, 1}, 1}};
  const Table hopf{{{0, 0}, 1}, {{0, 2}, 1}, {{2, 4}, 1}, {{2, 6}, 1}};
  const Table trefoil{{{0, 1}, 1}, {{0, 3}, 1}, {{2, 5}, 1}, {{3, 9}, 1}};
  FunctorEngine eng;
  CHECK(khovanov_ranks(eng.run(parse_tangle("cup 0, cap 0"))) == unknot);
  CHECK(functor_kh({1}) == unknot);
  CHECK(functor_kh({-1}) == unknot);
  CHECK(functor_kh({1, -1}) == Table{{{0, -2}, 1}, {{0, 0}, 2}, {{0, 2}, 1}});
  CHECK(functor_kh({1, 1}) == hopf);
  CHECK(functor_kh({1, 1, 1}) == trefoil);
  Table mirror;
  for (const auto& [key, v] : trefoil) mirror[{-key.first, -key.second}] = v;
  CHECK(functor_kh({-1, -1, -1}) == mirror);
}

TEST_CASE("functor pipeline over F2 sees the trefoil's extra pair") {
  FieldScope f2(2);
  CHECK(functor_kh({1, 1, 1}) ==
        Table{{{0, 1}, 1}, {{0, 3}, 1}, {{2, 5}, 1}, {{2, 7}, 1}, {{3, 7}, 1}, {{3, 9}, 1}});
  CHECK(functor_kh({1, 1}) == Table{{{0, 0}, 1}, {{0, 2}, 1}, {{2, 4}, 1}, {{2, 6}, 1}});
}
