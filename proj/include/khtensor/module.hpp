#pragma once

/**
 * @file module.hpp
 * @brief Finite-dimensional graded modules over a TensorAlgebra, module
 * maps, projective covers, and complexes of projectives.
 *
 * Homological conventions are cohomological: differentials raise the
 * homological degree by one.  A projective summand P_alpha{s} has its
 * internal grading raised by s.
 */

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "khtensor/algebra.hpp"

namespace kht {

/// A graded left module, stored block by block over the idempotents.
struct Module {
  const TensorAlgebra* alg = nullptr;
  std::vector<std::vector<int>> deg;  // deg[t][i]: internal degree of basis vector i of e_t M
  std::vector<Matrix> act;            // act[g]: e_target M x e_source M

  static Module zero(const TensorAlgebra& alg);
  int dim(int t) const { return static_cast<int>(deg[t].size()); }
  int dim() const;
  bool is_zero() const { return dim() == 0; }
  Module shifted(int s) const;
  /// Matrix of a generator word acting on e_source M.
  Matrix word_action(const std::vector<int>& word, int source) const;
  Vec apply_word(const std::vector<int>& word, int source, Vec v) const;
  /// Graded dimension of e_t M as degree -> dimension.
  std::map<int, int> graded_dim(int t) const;
  /// Sum over t of graded dimensions.
  std::map<int, int> graded_dim() const;
};

/// Module homomorphism, block diagonal over idempotents.
struct ModMap {
  std::vector<Matrix> blocks;  // blocks[t]: e_t N x e_t M
  int degree = 0;

  static ModMap zero(const Module& src, const Module& tgt, int degree = 0);
  static ModMap identity(const Module& m);
  bool is_zero() const;
  ModMap operator*(const ModMap& o) const;  // composition this o o
  ModMap& operator+=(const ModMap& o);
  ModMap& operator-=(const ModMap& o);
  ModMap scaled(const Scalar& s) const;
  friend ModMap operator+(ModMap a, const ModMap& b) { return a += b; }
  friend ModMap operator-(ModMap a, const ModMap& b) { return a -= b; }
};

bool is_module_map(const Module& src, const Module& tgt, const ModMap& f);
bool verify_module(const Module& m);

/// Submodule generated by vectors (per idempotent block); returns spanning
/// echelon forms per block.
std::vector<Echelon> generate_submodule(const Module& m, const std::vector<std::vector<Vec>>& seeds);

struct Quotient {
  Module module;
  ModMap projection;
  ModMap section;  // linear (not a module map): quotient basis -> kept unit vectors
};
Quotient quotient(const Module& m, const std::vector<Echelon>& sub);

struct Kernel {
  Module module;
  ModMap inclusion;
};
Kernel kernel(const Module& m, const Module& n, const ModMap& f);

/// Submodule given by a spanning echelon per block, as a module.
Kernel submodule(const Module& m, const std::vector<Echelon>& sub);

struct DirectSum {
  Module module;
  std::vector<ModMap> inj, proj;
};
DirectSum direct_sum(const std::vector<const Module*>& parts);

/// Image of an idempotent degree zero endomorphism e, with inclusion and
/// retraction (retr o incl = id, incl o retr = e).
struct Retract {
  Module module;
  ModMap incl, retr;
};
Retract retract(const Module& m, const ModMap& e);

/// Homogeneous kernel of a graded linear map.
std::vector<Vec> graded_kernel(const Matrix& m, const std::vector<int>& col_deg, const std::vector<int>& row_deg,
                               int map_degree);

/// Projective modules and the graded basic algebra data used for tops.
class ModuleContext {
 public:
  explicit ModuleContext(const TensorAlgebra& alg);

  const TensorAlgebra& algebra() const { return *alg_; }
  /// Basic idempotents: at most one black strand per gap.
  const std::vector<int>& basic() const { return basic_; }
  bool is_basic(int t) const;
  /// True when every e_a T e_b (a, b basic) sits in degrees >= 0 with the
  /// degree 0 part spanned by the idempotents.
  bool positively_graded() const { return positive_; }

  /// P_t = T e_t; basis vector 0 of block t is e_t.
  const Module& projective(int t) const;
  /// Degree zero map P_t{shift} -> M sending e_t to v, a vector in e_t M
  /// of degree shift.
  ModMap from_projective(int t, const Module& m, const Vec& v, int degree = 0) const;

  struct Arrow {
    int target, source;  // basic idempotents; element of e_target T e_source
    int index;           // basis element in that block
  };
  const std::vector<Arrow>& arrows() const { return arrows_; }

  /// Radical of e_a M for basic a: span of arrow images.
  Echelon radical_block(const Module& m, int a) const;

  struct TopGenerator {
    int alpha;
    int degree;
    Vec vec;  // in e_alpha M
  };
  std::vector<TopGenerator> top(const Module& m) const;

  /// Simple head of P_t (t basic).
  Module simple(int t) const;

  /// Dimension of the top in each (basic idempotent, degree).
  std::map<std::pair<int, int>, int> top_profile(const Module& m) const;

  /// Product of x in e_a T e_b (degree dx) and y in e_b T e_c (degree dy).
  Vec multiply(int a, int b, int c, const Vec& x, int dx, const Vec& y, int dy) const;

  /// Indecomposable projective T eps, eps a primitive idempotent of the
  /// degree zero part of e_kappa T e_kappa.  One type per isomorphism class
  /// up to grading shift.
  struct ProjType {
    int kappa;
    Vec idem;    // in block (kappa, kappa)
    bool whole;  // eps = e_kappa
  };
  int num_types() const;
  const ProjType& type(int a) const;
  /// The type with eps = e_kappa, or -1 if P_kappa splits or is a shifted
  /// copy of an earlier type.
  int type_of(int kappa) const;
  /// T eps_a as a retract of P_kappa; basis vector of eps is retr(eps).
  const Retract& type_module(int a) const;
  /// Degree zero map T eps_a {shift} -> M sending eps_a to v in eps_a M.
  ModMap type_map(int a, const Module& m, const Vec& v) const;

  /// Every primitive idempotent eps of e_kappa T_0 e_kappa, with an element
  /// y of eps_c T eps of the given degree which, together with some x,
  /// identifies T eps with T eps_c up to shift.
  struct Piece {
    int kappa;
    Vec idem;
    int type;
    Vec to_type;  // in block (type kappa, kappa)
    int degree;
  };
  const std::vector<Piece>& pieces() const;

 private:
  const TensorAlgebra* alg_;
  std::vector<int> basic_;
  bool positive_ = true;
  mutable std::map<int, std::unique_ptr<Module>> proj_;
  std::vector<Arrow> arrows_;

  void build_types() const;
  mutable bool typed_ = false;
  mutable std::vector<ProjType> types_;
  mutable std::vector<Piece> pieces_;
  mutable std::map<int, std::unique_ptr<Retract>> type_modules_;
};

}  // namespace kht
