#include <algorithm>

#include "doctest.h"
#include "khtensor/algebra.hpp"
#include "khtensor/decat.hpp"

using namespace kht;

namespace {

LaurentPoly q(int e, std::int64_t c = 1) { return LaurentPoly::monomial(e, c); }

}  // namespace

TEST_CASE("Laurent arithmetic and series division") {
  CHECK((q(1) + q(-1)) * (q(1) - q(-1)) == q(2) - q(-2));
  CHECK(LaurentPoly::quantum_integer(3) == q(-2) + q(0) + q(2));
  CHECK((q(1) + q(-1)).str() == "q^-1 + q");
  CHECK(q(3).bar() == q(-3));
  // q / (1 + q^2) = q - q^3 + q^5 - ...
  CHECK(series_divide(q(1), q(0) + q(2), 7) == q(1) - q(3) + q(5) - q(7));
  // Exact quotients terminate.
  CHECK(series_divide(q(0) - q(4), q(0) - q(2), 20) == q(0) + q(2));
}

TEST_CASE("the form on projective vectors computes graded Hom dimensions") {
  for (int l = 0; l <= 4; ++l)
    for (int k = 0; k <= std::min(l, 2); ++k) {
      TensorAlgebra alg(l, k);
      const auto& ks = alg.kappas();
      for (int a = 0; a < alg.num_kappas(); ++a)
        for (int b = 0; b < alg.num_kappas(); ++b) {
          INFO("l=" << l << " k=" << k << " " << ks[a].str() << " " << ks[b].str());
          CHECK(pairing(vector_p(ks[a]), vector_p(ks[b])) == LaurentPoly::from_dims(alg.block_graded_dim(a, b)));
        }
    }
}

TEST_CASE("projective vectors are unitriangular over standard vectors") {
  for (int l = 1; l <= 4; ++l)
    for (int k = 0; k <= 3; ++k)
      for (const Kappa& kappa : enumerate_kappas(l, k)) {
        if (!kappa.basic()) {
          CHECK(vector_v(kappa).empty());
          continue;
        }
        // p_kappa = v_kappa + terms v_mu with mu strictly above kappa.
        const QVector p = vector_p(kappa), v = vector_v(kappa);
        REQUIRE(v.size() == 1);
        CHECK(p.at(v.begin()->first) == q(0));
        for (const Kappa& mu : enumerate_kappas(l, k)) {
          if (!mu.basic() || mu == kappa) continue;
          const LaurentPoly c = pairing(p, vector_v(mu));
          if (!c.is_zero()) CHECK(kappa.leq(mu));
        }
      }
  CHECK(vector_v(Kappa{2, 2, {1, 1}}).empty());
  CHECK(vector_v(Kappa{2, 2, {0, 0}}).empty());
}

TEST_CASE("Jones polynomials of braid closures") {
  CHECK(jones_polynomial({}, 1) == q(1) + q(-1));
  CHECK(jones_polynomial({1}, 2) == q(1) + q(-1));
  CHECK(jones_polynomial({-1}, 2) == q(1) + q(-1));
  CHECK(jones_polynomial({}, 2) == (q(1) + q(-1)) * (q(1) + q(-1)));
  const LaurentPoly trefoil = q(1) + q(3) + q(5) - q(9);
  CHECK(jones_polynomial({1, 1, 1}, 2) == trefoil);
  CHECK(jones_polynomial({-1, -1, -1}, 2) == trefoil.bar());
  // Hopf link.
  CHECK(jones_polynomial({1, 1}, 2) == q(0) + q(2) + q(4) + q(6));
  // Figure eight: amphichiral.
  const LaurentPoly fig8 = jones_polynomial({1, -2, 1, -2}, 3);
  CHECK(fig8 == fig8.bar());
  CHECK(fig8 == q(-5) + q(5));
}

TEST_CASE("Jones polynomial is invariant under braid relations and Markov moves") {
  const std::vector<std::vector<int>> words = {{1, 2, -1}, {1, 1, 2}, {1, -2, 1, 2, 2}};
  for (const auto& w : words) {
    const LaurentPoly j = jones_polynomial(w, 3);
    // Conjugation.
    std::vector<int> rot(w.begin() + 1, w.end());
    rot.push_back(w.front());
    CHECK(jones_polynomial(rot, 3) == j);
    // Stabilization.
    auto stab = w;
    stab.push_back(3);
    CHECK(jones_polynomial(stab, 4) == j);
    stab.back() = -3;
    CHECK(jones_polynomial(stab, 4) == j);
  }
  // Reidemeister II and III.
  CHECK(jones_polynomial({1, -1, 2}, 3) == jones_polynomial({2}, 3));
  CHECK(jones_polynomial({1, 2, 1, 2}, 3) == jones_polynomial({2, 1, 2, 2}, 3));
}

TEST_CASE("Jones-Wenzl coefficients") {
  // One red strand: the projector is the identity.
  auto one = jw_matrix(1, 1, 6);
  CHECK(one.at({0}) == q(0));
  CHECK(one.count({1}) == 0);  // violating
  auto two = jw_matrix(2, 1, 7);
  CHECK(two.at({0, 0}) == q(0));
  CHECK(two.at({0, 1}) == q(1) - q(3) + q(5) - q(7));
}
