#pragma once

/**
 * @file idempotent.hpp
 * @brief Splitting the identity of a small finite-dimensional algebra into
 * primitive orthogonal idempotents.
 *
 * Used on degree zero parts e T_0 e to find the indecomposable graded
 * projectives hiding inside a projective T e.  The splitting element is
 * searched among basis elements and their pairwise products and sums, and
 * only eigenvalues in the ground field are used.
 */

#include <functional>
#include <vector>

#include "khtensor/linalg.hpp"

namespace kht {

/// Univariate polynomial, coefficient i belongs to x^i.
using UPoly = std::vector<Scalar>;

void trim(UPoly& p);
UPoly poly_mul(const UPoly& a, const UPoly& b);
/// Quotient and remainder of a by a nonzero b.
std::pair<UPoly, UPoly> poly_divmod(const UPoly& a, const UPoly& b);
/// Roots lying in the current field, without multiplicity.
std::vector<Scalar> field_roots(const UPoly& p);

struct FiniteAlgebra {
  int dim = 0;
  Vec one;
  std::function<Vec(const Vec&, const Vec&)> mul;
};

/// Minimal polynomial of x inside the corner algebra with unit e.
UPoly minimal_polynomial(const FiniteAlgebra& a, const Vec& e, const Vec& x);

/// Orthogonal idempotents summing to a.one, none of which splits further
/// by an element with two distinct eigenvalues in the field.
std::vector<Vec> primitive_idempotents(const FiniteAlgebra& a);

/// True if z is a unit of the corner e A e (z assumed to lie in it).
bool invertible_in_corner(const FiniteAlgebra& a, const Vec& e, const Vec& z);

}  // namespace kht
