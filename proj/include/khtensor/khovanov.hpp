#pragma once

/**
 * @file khovanov.hpp
 * @brief Khovanov homology of braid closures from the cube of resolutions
 * over H*(S^2) = k[t]/(t^2).  Independent of the tensor algebra code.
 *
 * Conventions: the 0-smoothing of a positive braid crossing is the
 * vertical (identity braid) one; for a negative crossing it is the
 * horizontal cup-cap.  Chain groups are C^{r} = sum over |s| = r of
 * V^{(x) circles}{r}, deg 1 = +1, deg t = -1, shifted by [-n_-]{n_+ - 2 n_-}.
 */

#include <string>
#include <vector>

#include "khtensor/linalg.hpp"
#include "khtensor/table.hpp"

namespace kht {

/// The rank two Frobenius algebra with basis {1, t}, t^2 = 0.
struct FrobAlg {
  /// Index 0 is 1, index 1 is t; products as coordinate vectors.
  static Vec multiply(int a, int b);
  /// Delta(1) = 1 (x) t + t (x) 1, Delta(t) = t (x) t; entries indexed 2 a + b.
  static Vec comultiply(int a);
  /// epsilon(1) = 0, epsilon(t) = 1.
  static Scalar counit(int a);
  static int degree(int a) { return a == 0 ? 1 : -1; }
};

struct LinkDiagram {
  std::vector<int> braid;  // signed generators, 1-based
  int strands = 1;

  /// Parses "1 -2 1"; the strand count defaults to the largest generator + 1.
  static LinkDiagram from_braid(const std::string& word, int strands = 0);
  int crossings() const { return static_cast<int>(braid.size()); }
  int positive() const;
  int negative() const;
  int writhe() const { return positive() - negative(); }
  void validate() const;
};

struct Cube {
  int n = 0, n_plus = 0, n_minus = 0;
  std::vector<int> circles;                 // circles[s] for each smoothing s (bit t = crossing t)
  std::vector<std::vector<int>> circle_of;  // circle_of[s][node]: circle containing a braid node
};

/// Throws std::invalid_argument for malformed diagrams or more than
/// max_crossings crossings.
Cube build_cube(const LinkDiagram& d, int max_crossings = 14);

/// The differential C^{h, q} -> C^{h+1, q} in the bases of kh_basis.
struct CubeBasis {
  int state;
  int labels;  // bit c set: circle c carries t
};
std::vector<CubeBasis> kh_basis(const Cube& c, int h, int q);
Matrix kh_differential(const Cube& c, int h, int q);

/// Bigraded ranks over the current field.
BigradedTable kh_cube(const LinkDiagram& d, int max_crossings = 14);

}  // namespace kht
