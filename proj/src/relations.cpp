#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "khtensor/algebra.hpp"

namespace kht {

namespace {

class Auditor {
 public:
  explicit Auditor(const TensorAlgebra& alg) : alg_(alg) {}

  /// Generator id for a step, or nullopt if the move is not allowed.
  std::optional<int> gen(GenKind kind, int i, int source) const { return alg_.find_generator(kind, i, source); }

  /// Compose a word given as (kind, index) letters applied bottom to top,
  /// i.e. letters[0] acts first.  Returns the target and matrix.
  std::optional<std::pair<int, Matrix>> run(int source, const std::vector<std::pair<GenKind, int>>& letters) const {
    int cur = source;
    Matrix m = Matrix::identity(alg_.ring(source).dim());
    for (const auto& [kind, i] : letters) {
      auto g = gen(kind, i, cur);
      if (!g) return std::nullopt;
      m = alg_.generator(*g).mat * m;
      cur = alg_.generator(*g).target;
    }
    return std::make_pair(cur, m);
  }

  void expect(bool ok, const std::string& what, int source) {
    ++report.checked;
    if (!ok) report.failures.push_back(what + " at " + alg_.kappa(source).str());
  }

  /// Checks lhs == rhs + c * id when both words exist.
  void equal(int s, const std::vector<std::pair<GenKind, int>>& lhs, const std::vector<std::pair<GenKind, int>>& rhs,
             const Scalar& c, const std::string& name) {
    auto a = run(s, lhs);
    auto b = run(s, rhs);
    if (!a || !b) return;
    if (a->first != b->first) {
      expect(false, name + " (targets differ)", s);
      return;
    }
    Matrix r = b->second;
    if (!c.is_zero()) {
      if (a->first != s) {
        expect(false, name + " (correction needs equal ends)", s);
        return;
      }
      r += Matrix::identity(alg_.ring(s).dim()).scaled(c);
    }
    expect(a->second == r, name, s);
  }

  RelationReport report;

 private:
  const TensorAlgebra& alg_;
};

constexpr GenKind Y = GenKind::Y, P = GenKind::Psi, IP = GenKind::IotaPlus, IM = GenKind::IotaMinus;

std::set<int> strands(GenKind kind, int i) {
  if (kind == P) return {i, i + 1};
  return {i};
}

}  // namespace

RelationReport verify_relations(const TensorAlgebra& alg) {
  Auditor a(alg);
  const int k = alg.k();
  const Scalar minus_one(-1), zero;
  for (int s = 0; s < alg.num_kappas(); ++s) {
    const Kappa& kap = alg.kappa(s);
    if (kap.violating()) a.expect(alg.ring(s).is_zero(), "violating idempotent vanishes", s);

    for (int i = 1; i < k; ++i) {
      // Dot slides through a black crossing, with the identity correction.
      a.equal(s, {{P, i}, {Y, i}}, {{Y, i + 1}, {P, i}}, minus_one, "nilHecke (a)");
      a.equal(s, {{Y, i}, {P, i}}, {{P, i}, {Y, i + 1}}, minus_one, "nilHecke (b)");
      if (auto w = a.run(s, {{P, i}, {P, i}}); w) a.expect(w->second.is_zero(), "black bigon", s);
      if (i + 1 < k)
        a.equal(s, {{P, i}, {P, i + 1}, {P, i}}, {{P, i + 1}, {P, i}, {P, i + 1}}, zero, "black braid");
      // Blacks i, i+1 with a single red between them: the crossing may pass
      // the red at the cost of the identity.
      if (std::count(kap.v.begin(), kap.v.end(), i) == 1)
        a.equal(s, {{IM, i}, {P, i}, {IP, i}}, {{IP, i + 1}, {P, i}, {IM, i + 1}}, minus_one,
                "red triple correction");
      // A black strand passing a black/red crossing.
      if (!kap.in_image(i) && kap.in_image(i + 1))
        a.equal(s, {{P, i}, {IM, i + 1}, {IM, i}}, {{IM, i + 1}, {IM, i}, {P, i}}, zero, "black triple (red right)");
      if (!kap.in_image(i) && kap.in_image(i - 1))
        a.equal(s, {{P, i}, {IP, i}, {IP, i + 1}}, {{IP, i}, {IP, i + 1}, {P, i}}, zero, "black triple (red left)");
    }
    for (int j = 1; j <= k; ++j) {
      a.equal(s, {{Y, j}, {IM, j}}, {{IM, j}, {Y, j}}, zero, "red dot (rightward)");
      a.equal(s, {{Y, j}, {IP, j}}, {{IP, j}, {Y, j}}, zero, "red dot (leftward)");
      a.equal(s, {{IM, j}, {IP, j}}, {{Y, j}}, zero, "cost (black left)");
      a.equal(s, {{IP, j}, {IM, j}}, {{Y, j}}, zero, "cost (red left)");
    }

    // Moves on disjoint black strands commute.
    std::vector<std::pair<GenKind, int>> letters;
    for (int i = 1; i <= k; ++i)
      for (GenKind kind : {Y, P, IP, IM})
        if (kind != P || i < k) letters.emplace_back(kind, i);
    for (const auto& g : letters)
      for (const auto& h : letters) {
        if (g >= h) continue;
        auto sg = strands(g.first, g.second), sh = strands(h.first, h.second);
        bool disjoint = true;
        for (int x : sg)
          if (sh.count(x)) disjoint = false;
        if (g.first == Y && h.first == Y) disjoint = true;
        if (!disjoint) continue;
        a.equal(s, {g, h}, {h, g}, zero, "distant commutation " + to_string(g.first) + to_string(h.first));
      }
  }

  // Homogeneity and well-definedness of every generator.
  for (const auto& g : alg.generators()) {
    a.expect(alg.is_homogeneous(g.target, g.source, g.mat, g.degree), "homogeneity of " + to_string(g.kind), g.source);
    const QuotientRing& src = alg.ring(g.source);
    const QuotientRing& tgt = alg.ring(g.target);
    if (src.is_zero()) continue;
    std::function<MultiPoly(const MultiPoly&)> op;
    const int i = g.i;
    switch (g.kind) {
      case GenKind::Y: op = [i](const MultiPoly& f) { return f.times_var(i); }; break;
      case GenKind::Psi: op = [i](const MultiPoly& f) { return demazure(i, f); }; break;
      case GenKind::IotaPlus: op = [](const MultiPoly& f) { return f; }; break;
      case GenKind::IotaMinus: op = [i](const MultiPoly& f) { return f.times_var(i); }; break;
    }
    bool ok = true;
    for (const auto& h : ideal_generators(alg.kappa(g.source)))
      for (int d = 0; d <= 2 && ok; ++d)
        for (const auto& e : monomials_of_degree(k, d))
          if (!is_zero(tgt.reduce(op(MultiPoly::monomial(e) * h)))) ok = false;
    a.expect(ok, "ideal preserved by " + to_string(g.kind) + std::to_string(g.i), g.source);
  }

  // Cyclotomic relation on the nilHecke corner.
  if (k >= 1) {
    const int e0 = alg.kappa_index(Kappa{alg.l(), k, std::vector<int>(alg.l(), 0)});
    const Matrix y1 = alg.generator(*alg.find_generator(Y, 1, e0)).mat;
    Matrix p = Matrix::identity(alg.ring(e0).dim());
    for (int t = 0; t < alg.l() - 1; ++t) p = y1 * p;
    a.expect(!p.is_zero(), "y1^(l-1) e0 nonzero", e0);
    a.expect((y1 * p).is_zero(), "y1^l e0 = 0", e0);
  }
  return a.report;
}

}  // namespace kht
