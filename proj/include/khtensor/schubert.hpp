#pragma once

/**
 * @file schubert.hpp
 * @brief Graded quotient rings R/I_kappa with a monomial basis and an
 * explicit reduction map.
 */

#include <map>
#include <vector>

#include "khtensor/combinatorics.hpp"
#include "khtensor/linalg.hpp"
#include "khtensor/poly.hpp"

namespace kht {

/// Generators h_p(Y_1..Y_kappa(q)), p > q - kappa(q) - 1, and
/// h_p(Y_1..Y_k), p > l - k.  Only the finitely many that matter are
/// returned (higher h_p lie in the ideal generated by lower ones).
std::vector<MultiPoly> ideal_generators(const Kappa& kappa);

class QuotientRing {
 public:
  explicit QuotientRing(const Kappa& kappa);

  const Kappa& kappa() const noexcept { return kappa_; }
  int nvars() const noexcept { return kappa_.k; }
  int dim() const noexcept { return static_cast<int>(basis_.size()); }
  bool is_zero() const noexcept { return basis_.empty(); }

  /// Monomial basis, ordered by polynomial degree.
  const std::vector<Exponent>& basis() const noexcept { return basis_; }
  int poly_degree(int idx) const { return degree_[idx]; }
  /// Internal grading: 2 * polynomial degree + grading_offset(kappa).
  int internal_degree(int idx) const { return 2 * degree_[idx] + offset_; }
  /// Dimension of each polynomial degree 0, 1, ...
  std::vector<int> graded_dims() const;

  MultiPoly lift(int idx) const { return MultiPoly::monomial(basis_[idx]); }
  Vec reduce(const MultiPoly& f) const;
  /// Matrix of f -> op(f) from this ring to target.
  template <class Op>
  Matrix induced_map(const QuotientRing& target, Op op) const {
    Matrix m(target.dim(), dim());
    for (int c = 0; c < dim(); ++c) {
      const Vec col = target.reduce(op(lift(c)));
      for (int r = 0; r < target.dim(); ++r) m(r, c) = col[r];
    }
    return m;
  }

 private:
  Kappa kappa_;
  int offset_ = 0;
  std::vector<Exponent> basis_;
  std::vector<int> degree_;
  std::map<Exponent, Vec> normal_form_;  // every monomial of degree <= top
  int top_degree_ = -1;
};

}  // namespace kht
