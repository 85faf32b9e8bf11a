#pragma once

/**
 * @file poly.hpp
 * @brief Sparse multivariate polynomials over Scalar in variables Y_1..Y_k.
 */

#include <map>
#include <string>
#include <vector>

#include "khtensor/scalar.hpp"

namespace kht {

using Exponent = std::vector<int>;

class MultiPoly {
 public:
  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Scalar& c);
  /// Y_i, 1-based index.
  static MultiPoly variable(int nvars, int i);
  static MultiPoly monomial(const Exponent& e, const Scalar& c = Scalar(1));

  int nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Maximum total degree; -1 for the zero polynomial.
  int degree() const;
  const std::map<Exponent, Scalar>& terms() const noexcept { return terms_; }
  Scalar coeff(const Exponent& e) const;

  void add_term(const Exponent& e, const Scalar& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const Scalar& c) const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Multiply by Y_i^p (1-based).
  MultiPoly times_var(int i, int p = 1) const;
  /// Swap Y_i and Y_{i+1}.
  MultiPoly swapped(int i) const;
  /// Homogeneous component of total degree d.
  MultiPoly component(int d) const;

  std::string str() const;

 private:
  int nvars_;
  std::map<Exponent, Scalar> terms_;
};

/// h_p(Y_1..Y_j) inside k[Y_1..Y_k].
MultiPoly complete_symmetric(int p, int j, int k);

/// e_p of the listed 1-based variables inside k[Y_1..Y_k].
MultiPoly elementary_symmetric(int p, const std::vector<int>& vars, int k);

/// Divided difference (f - s_i f) / (Y_{i+1} - Y_i).
MultiPoly demazure(int i, const MultiPoly& f);

/// All exponent vectors of total degree d in n variables, lexicographically
/// descending (Y_1^d first).
std::vector<Exponent> monomials_of_degree(int n, int d);

}  // namespace kht
