// Acceptance run: one PASS/FAIL line per criterion.  Criterion 11 is
// optional and does not affect the exit status.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "khtensor/cupcap.hpp"
#include "khtensor/decat.hpp"
#include "khtensor/khovanov.hpp"
#include "khtensor/table.hpp"

using namespace kht;

namespace {

using Table = std::map<std::pair<int, int>, int>;

// Collects failed checks with a short reason.
struct Check {
  std::vector<std::string> failures;
  void operator()(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome run(const std::function<void(Check&, std::ostringstream&)>& body) {
  Check check;
  std::ostringstream detail;
  try {
    body(check, detail);
  } catch (const std::exception& e) {
    check.failures.push_back(std::string("exception: ") + e.what());
  }
  if (!check.failures.empty()) {
    std::ostringstream out;
    out << check.failures.size() << " failed check(s), first: " << check.failures.front();
    return {false, out.str()};
  }
  return {true, detail.str()};
}

int sum_squares(int l, int k) {
  int s = 0;
  for (const auto& [p, list] : enumerate_backdrops(l, k)) s += static_cast<int>(list.size() * list.size());
  return s;
}

int total(const Table& t, int n) {
  int s = 0;
  for (const auto& [key, v] : t)
    if (key.first == n) s += v;
  return s;
}

ProjComplex single(const TensorAlgebra& alg, int type) {
  ProjComplex c;
  c.alg = &alg;
  c.terms = {{{type, 0}}};
  return c;
}

int kappa0(const TensorAlgebra& alg) { return alg.kappa_index(Kappa{alg.l(), alg.k(), std::vector<int>(alg.l(), 0)}); }

std::string str(const Table& t) { return BigradedTable(t).to_tsv(); }

// Criterion 9 collects every table computed by criterion 8.
struct Computed {
  std::vector<int> braid;
  int strands;
  int field;
  Table table;
};
std::vector<Computed> computed;

void criterion1(Check& check, std::ostringstream& d) {
  int relations = 0;
  for (int field : {0, 2}) {
    FieldScope scope(field);
    for (int l = 0; l <= 4; ++l)
      for (int k = 0; k <= std::min(l, 2); ++k) {
        TensorAlgebra alg(l, k);
        const auto rep = verify_relations(alg);
        relations += rep.checked;
        check(rep.ok(), "relations at l=" + std::to_string(l) + " k=" + std::to_string(k) + " char " +
                            std::to_string(field) + (rep.ok() ? "" : ": " + rep.failures.front()));
      }
  }
  d << relations << " relation instances over Q and F2";
}

void criterion2(Check& check, std::ostringstream& d) {
  for (int l = 0; l <= 4; ++l)
    for (int k = 0; k <= std::min(l, 2); ++k) {
      TensorAlgebra alg(l, k);
      const int expected = sum_squares(l, k);
      const auto cells = cellular_basis(alg);
      const std::string at = " at l=" + std::to_string(l) + " k=" + std::to_string(k);
      check(static_cast<int>(cells.size()) == expected, "cellular element count" + at);
      check(cellular_rank(alg, cells) == expected, "cellular rank" + at);
      check(alg.dim() == expected, "generated subalgebra dimension" + at);
    }
  TensorAlgebra two(2, 1);
  check(two.dim() == 5, "dim T^2_0 = 5");
  d << "dim T^2_0 = " << two.dim() << ", T^4 (k=2) = " << TensorAlgebra(4, 2).dim();
}

void criterion3(Check& check, std::ostringstream& d) {
  for (int l = 1; l <= 4; ++l)
    for (int k = 1; k <= std::min(l, 2); ++k) {
      TensorAlgebra alg(l, k);
      const int e0 = kappa0(alg);
      const std::string at = " at l=" + std::to_string(l) + " k=" + std::to_string(k);
      check(idempotent_subalgebra_dim(alg, {e0}) == factorial(k) * factorial(k) * binomial(l, k), "dim e0 T e0" + at);
      const Matrix& y = alg.generator(*alg.find_generator(GenKind::Y, 1, e0)).mat;
      Matrix p = Matrix::identity(y.rows());
      for (int j = 1; j < l; ++j) p = y * p;
      check(!p.is_zero(), "y1^(l-1) e0 != 0" + at);
      check((y * p).is_zero(), "y1^l e0 = 0" + at);
    }
  d << "(k!)^2 C(l,k) and y1^l e0 = 0 for l<=4, k<=2";
}

void criterion4(Check& check, std::ostringstream& d) {
  int pairs = 0;
  for (int l = 0; l <= 4; ++l)
    for (int k = 0; k <= std::min(l, 2); ++k) {
      TensorAlgebra alg(l, k);
      for (int a = 0; a < alg.num_kappas(); ++a)
        for (int b = 0; b < alg.num_kappas(); ++b) {
          ++pairs;
          check(LaurentPoly::from_dims(alg.block_graded_dim(a, b)) ==
                    pairing(vector_p(alg.kappa(a)), vector_p(alg.kappa(b))),
                "pairing " + alg.kappa(a).str() + " " + alg.kappa(b).str());
        }
    }
  d << pairs << " pairs of idempotents";
}

void criterion5(Check& check, std::ostringstream& d) {
  TensorAlgebra alg(2, 1);
  ModuleContext ctx(alg);
  HomSpaces hom(ctx);
  const int k00 = alg.kappa_index(Kappa{2, 1, {0, 0}}), k01 = alg.kappa_index(Kappa{2, 1, {0, 1}});
  const Module l0 = ctx.simple(k00), l1 = ctx.simple(k01);
  check(l0.dim() == 1 && l1.dim() == 1, "simples are one dimensional");
  const auto r0 = gaussian_eliminate(hom, resolve(ctx, l0));
  check(r0.lo == -1 && r0.at(0) == std::vector<Summand>{{k00, 0}} && r0.at(-1) == std::vector<Summand>{{k01, 1}},
        "resolution of L0 is P01{1} -> P00");
  const auto r1 = gaussian_eliminate(hom, resolve(ctx, l1));
  check(r1.lo == -2 && r1.at(0) == std::vector<Summand>{{k01, 0}} && r1.at(-1) == std::vector<Summand>{{k00, 1}} &&
            r1.at(-2) == std::vector<Summand>{{k01, 2}},
        "resolution of L1 is P01{2} -> P00{1} -> P01");
  check(removable_entries(hom, r0) == 0 && removable_entries(hom, r1) == 0, "resolutions are minimal");
  const auto e11 = ext_bigraded(ctx, l1, l1);
  check(total(e11, 0) == 1 && total(e11, 1) == 0 && total(e11, 2) == 1, "Ext(L1, L1) ranks 1, 0, 1");
  // The resolution has length 2, so Ext^4 vanishes and the square of the
  // degree two class, a map from the fourth term, is zero.
  check(total(e11, 4) == 0 && r1.lo == -2, "Ext^4(L1, L1) = 0");
  check(is_zero(FrobAlg::multiply(1, 1)), "t^2 = 0 in H*(S^2)");
  d << "Ext(L1,L1) = 1,0,1 in degrees 0,1,2";
}

void criterion6(Check& check, std::ostringstream& d) {
  {
    TensorAlgebra big(2, 1), small(0, 0);
    ModuleContext ctx(big);
    CupBimodule cup = cup_bimodule(ctx, small, 0);
    const Module l1 = ctx.simple(big.kappa_index(Kappa{2, 1, {0, 1}}));
    const Module& col = cup.bimodule.cols[0];
    bool same = true;
    for (int t = 0; t < big.num_kappas(); ++t) same = same && col.graded_dim(t) == l1.graded_dim(t);
    check(same && verify_bimodule(cup.bimodule), "l=0 cup bimodule is L1");
    check(crossing_bimodule(ctx, small, 0).bimodule.dim() == 4, "ker phi has dimension 4");
  }
  for (auto [l, k] : {std::pair{0, 0}, std::pair{2, 1}})
    for (int i = 0; i <= l; ++i) {
      TensorAlgebra big(l + 2, k + 1), small(l, k);
      ModuleContext bc(big), sc(small);
      CupBimodule cup = cup_bimodule(bc, small, i);
      Unit u = cup_unit(bc, cup);
      Counit e = cup_counit(sc, cup, u);
      if (e.solutions != 1) {
        check(false, "counit not unique");
        continue;
      }
      Zigzag z = zigzag(cup, u, e);
      const Bimodule kd = mirror(cup.bimodule);
      bool ok = true;
      for (size_t r = 0; r < z.left.size(); ++r) ok = ok && (z.left[r] - ModMap::identity(cup.bimodule.cols[r])).is_zero();
      for (size_t r = 0; r < z.right.size(); ++r) ok = ok && (z.right[r] - ModMap::identity(kd.cols[r])).is_zero();
      check(ok, "zigzag identities at l=" + std::to_string(l) + " gap " + std::to_string(i));
    }
  FunctorEngine eng;
  const ModuleContext& ctx = eng.context(2, 1);
  const TensorAlgebra& alg = eng.algebra(2, 1);
  for (int a = 0; a < ctx.num_types(); ++a)
    for (int i = 0; i <= 2; ++i) {
      const ProjComplex c = eng.apply_cap(eng.apply_cup(single(alg, a), i), i);
      std::vector<std::pair<int, int>> found;
      for (int n = c.lo; n <= c.hi(); ++n)
        for (const auto& s : c.at(n)) found.emplace_back(s.alpha == a ? n : 1000, s.shift);
      const bool ok = found.size() == 2 && found[0].first != 1000 && found[1].first != 1000 &&
                      found[1].first - found[0].first == 2 && found[0].second - found[1].second == 2;
      check(ok, "delooping of type " + std::to_string(a) + " at gap " + std::to_string(i));
    }
  d << "cup = L1, dim ker phi = 4, zigzags, delooping";
}

void criterion7(Check& check, std::ostringstream& d) {
  FunctorEngine eng;
  const TensorAlgebra& alg = eng.algebra(4, 2);
  const ModuleContext& ctx = eng.context(4, 2);
  int cases = 0;
  for (int a = 0; a < ctx.num_types(); ++a)
    for (int i = 0; i <= 2; ++i)
      for (int sign : {1, -1}) {
        const ProjComplex c = eng.apply_crossing(eng.apply_crossing(single(alg, a), i, sign), i, -sign);
        ++cases;
        check(c.size() == 1 && c.lo == 0 && c.at(0) == std::vector<Summand>{{a, 0}},
              "RII on type " + std::to_string(a) + " at " + std::to_string(i));
      }
  const Table unknot{{{0, -1}, 1}, {{0, 1}, 1}};
  check(khovanov_ranks(eng.run(trace_closure({}, 1))) == unknot, "unknot");
  check(khovanov_ranks(eng.run(trace_closure({1}, 2))) == unknot, "RI positive");
  check(khovanov_ranks(eng.run(trace_closure({-1}, 2))) == unknot, "RI negative");
  d << cases << " RII cases on T^4 projectives; RI with framing constants pos q+1, neg q-1";
}

void criterion8(Check& check, std::ostringstream& d) {
  const std::vector<std::pair<std::vector<int>, int>> links = {{{}, 1}, {{1, 1}, 2}, {{1, 1, 1}, 2}};
  for (int field : {0, 2}) {
    FieldScope scope(field);
    for (const auto& [braid, strands] : links) {
      FunctorEngine eng;
      const Table functor = khovanov_ranks(eng.run(trace_closure(braid, strands)));
      const Table cube = kh_cube(LinkDiagram{braid, strands}).ranks();
      check(functor == cube, "pipelines differ over char " + std::to_string(field) + "\n" + str(functor) + str(cube));
      computed.push_back({braid, strands, field, functor});
    }
  }
  const Table trefoil{{{0, 1}, 1}, {{0, 3}, 1}, {{2, 5}, 1}, {{3, 9}, 1}};
  check(kh_cube(LinkDiagram{{1, 1, 1}, 2}).ranks() == trefoil, "trefoil cube values");
  d << "unknot, Hopf, trefoil over Q and F2";
}

void criterion9(Check& check, std::ostringstream& d) {
  // Also some tables from the cube alone.
  for (const auto& [braid, strands] : std::vector<std::pair<std::vector<int>, int>>{
           {{-1, -1, -1}, 2}, {{1, -2, 1, -2}, 3}, {{1, 1, 1, 1}, 2}, {{1, 2, 1, 2}, 3}})
    for (int field : {0, 2}) {
      FieldScope scope(field);
      computed.push_back({braid, strands, field, kh_cube(LinkDiagram{braid, strands}).ranks()});
    }
  for (const auto& c : computed)
    check(BigradedTable(c.table).euler_characteristic() == jones_polynomial(c.braid, c.strands),
          "Euler characteristic over char " + std::to_string(c.field));
  d << computed.size() << " tables";
}

void criterion10(Check& check, std::ostringstream& d) {
  const int cutoff = 8;
  TensorAlgebra alg(2, 1);
  ModuleContext ctx(alg);
  const int k00 = kappa0(alg), k01 = alg.kappa_index(Kappa{2, 1, {0, 1}});
  const auto p = jw_projection(ctx, ctx.projective(k00), cutoff);
  check(p.size() == 1 && p.at(0) == std::vector<Summand>{{k00, 0}}, "projector is the identity on P00");
  check(jw_projection(ctx, ctx.simple(k01), cutoff).size() == 0, "projector kills L1");
  const auto c = jw_projection(ctx, ctx.projective(k01), cutoff);
  LaurentPoly chi;
  for (int n = c.lo; n <= c.hi(); ++n)
    for (const Summand& s : c.at(n)) {
      check(s.alpha == k00, "projector lands in P00");
      chi += LaurentPoly::monomial(s.shift, n % 2 == 0 ? 1 : -1);
    }
  const int degree = 2 * cutoff + 1;
  check(c.lo == -cutoff, "truncation reaches the cutoff");
  check(chi == jw_matrix(2, 1, degree).at({0, 1}), "Euler characteristic is q/(1+q^2) to q^" + std::to_string(degree));
  d << "chi(pi P01) = " << chi.str();
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  const std::vector<std::pair<std::string, std::function<void(Check&, std::ostringstream&)>>> criteria = {
      {"relation suite", criterion1},
      {"dimension theorem", criterion2},
      {"nilHecke subalgebra", criterion3},
      {"decategorification", criterion4},
      {"l=2 homological profile", criterion5},
      {"cup/cap structure", criterion6},
      {"Reidemeister invariance", criterion7},
      {"two-pipeline Khovanov agreement", criterion8},
      {"Euler characteristic oracle", criterion9},
      {"truncated Jones-Wenzl", criterion10},
  };
  bool all = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    const Outcome o = run(criteria[i].second);
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    all = all && o.pass;
    std::cout << "criterion " << i + 1 << " [" << criteria[i].first << "]: " << (o.pass ? "PASS" : "FAIL") << " ("
              << secs << " s) " << o.detail << std::endl;
  }
  // The trace closure of a 3-braid passes through T^6_3, of dimension
  // 122156 over 84 idempotents.  The dense matrix realization of that
  // algebra needs far more memory than a desk machine has, so the run is
  // refused rather than attempted.
  long dim63 = sum_squares(6, 3);
  std::cout << "criterion 11 [figure-eight through T^6] (optional): FAIL (not run: dim T^6_3 = " << dim63
            << " exceeds the dense realization's memory budget)" << std::endl;
  std::cout << (all ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << std::endl;
  return all ? 0 : 1;
}
