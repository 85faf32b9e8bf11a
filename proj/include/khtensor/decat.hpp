#pragma once

/**
 * @file decat.hpp
 * @brief The Grothendieck group side: (C_q^2)^{(x) l} with the vectors p_kappa
 * and v_kappa, the bilinear form matching graded Hom dimensions, the
 * Kauffman bracket, and the Jones-Wenzl projector as power series.
 *
 * Basis tensors are 0/1 sequences (0 = highest weight vector).  F acts on
 * a tensor factor through the coproduct F (x) K + 1 (x) F, so applying F in
 * slot i picks up q^{weight of the slots right of i}.  The form is the
 * plain bilinear one with orthonormal pure tensors.  Both conventions are
 * the ones for which <p_kappa, p_kappa'> is the graded dimension of
 * e_kappa T e_kappa'.
 */

#include <map>
#include <vector>

#include "khtensor/combinatorics.hpp"
#include "khtensor/laurent.hpp"

namespace kht {

using QVector = std::map<std::vector<int>, LaurentPoly>;

/// F on (C_q^2)^{(x) n}.
QVector apply_F(const QVector& x);

/// The vector of a projective, built by alternately appending a factor and
/// applying F; zero when kappa(1) > 0.
QVector vector_p(const Kappa& kappa);

/// The pure tensor of a standard module; zero when kappa(1) > 0 or some gap
/// holds more than one black.
QVector vector_v(const Kappa& kappa);

LaurentPoly pairing(const QVector& a, const QVector& b);

/// Unreduced Jones polynomial of the trace closure of a braid, normalized
/// so the unknot gives q + q^{-1}: (-1)^{n-} q^{n+ - 2 n-} times the state
/// sum with factor (-q) per 1-smoothing and (q + q^{-1}) per circle.
LaurentPoly jones_polynomial(const std::vector<int>& braid, int strands);

/// Number of circles after smoothing every crossing of a braid closure
/// (true = the horizontal cup-cap smoothing).
int closure_circles(const std::vector<int>& braid, int strands, const std::vector<bool>& horizontal);

/// Coefficients c_kappa of the Jones-Wenzl projection p_kappa -> c_kappa p_0
/// for every valid kappa of (l, k), as power series up to q^max_degree.
/// p_0 is the vector of the idempotent with all blacks right of the reds.
std::map<std::vector<int>, LaurentPoly> jw_matrix(int l, int k, int max_degree);

}  // namespace kht
