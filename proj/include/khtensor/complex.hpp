#pragma once

/**
 * @file complex.hpp
 * @brief Bounded complexes of graded modules and of shifted projectives.
 *
 * Differentials raise the homological degree.  Summands are shifted
 * indecomposable projectives T eps_a.  A morphism P_a{s} -> P_b{t} is right
 * multiplication by an element x of eps_a T eps_b
 * of degree s - t, stored in the block basis of (a, b).  Composition of
 * x followed by y is the product x y.
 */

#include <map>
#include <utility>
#include <vector>

#include "khtensor/module.hpp"

namespace kht {

/// Products, units and inverses of homogeneous elements between projective
/// types, in the block coordinates of their idempotents.
class HomSpaces {
 public:
  explicit HomSpaces(const ModuleContext& ctx) : ctx_(&ctx) {}

  const ModuleContext& context() const { return *ctx_; }
  /// x in eps_a T eps_b of degree dx times y in eps_b T eps_c of degree dy.
  Vec multiply(int a, int b, int c, const Vec& x, int dx, const Vec& y, int dy) const;
  Vec unit(int a) const;
  /// Two-sided inverse of a degree zero element of eps_a T eps_a, if any.
  std::optional<Vec> inverse(int a, const Vec& x) const;

 private:
  const ModuleContext* ctx_;
};

struct Summand {
  int alpha;  // projective type index
  int shift;  // internal grading shift
  friend bool operator==(const Summand&, const Summand&) = default;
  friend auto operator<=>(const Summand&, const Summand&) = default;
};

using Entries = std::map<std::pair<int, int>, Vec>;  // (row in n+1, column in n) -> element

/// Bounded complex of graded shifted projectives.
struct ProjComplex {
  const TensorAlgebra* alg = nullptr;
  int lo = 0;                              // homological degree of terms[0]
  std::vector<std::vector<Summand>> terms;
  std::vector<Entries> diff;               // diff[i]: terms[i] -> terms[i+1]

  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  const std::vector<Summand>& at(int n) const;
  int size() const;  // number of summands
  /// Degree of the element stored at an entry of diff[i].
  int entry_degree(int i, int row, int col) const;
  /// Homological shift [h] (term n moves to n - h) and internal shift.
  ProjComplex shifted(int h, int q) const;
  void trim();  // drop empty terms at both ends
};

/// Graded class of a complex: (type, shift) -> alternating multiplicity.
std::map<Summand, int> euler_class(const ProjComplex& c);

/// Total differential squared is zero.
bool is_complex(const HomSpaces& hom, const ProjComplex& c);

/// Bounded complex of graded modules.
struct ModComplex {
  const TensorAlgebra* alg = nullptr;
  int lo = 0;
  std::vector<Module> terms;
  std::vector<ModMap> diff;  // diff[i]: terms[i] -> terms[i+1]

  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
};

bool is_complex(const ModComplex& c);

/// Mapping cone of a chain map f : a -> b between complexes with the same
/// range; cone^n = a^{n+1} + b^n.
ModComplex cone(const ModComplex& a, const ModComplex& b, const std::vector<ModMap>& f);

/// Module of a list of shifted projectives.
Module projective_sum(const ModuleContext& ctx, const std::vector<Summand>& sums);
/// Module map realizing a matrix of elements between two projective sums.
ModMap projective_map(const ModuleContext& ctx, const std::vector<Summand>& src, const std::vector<Summand>& tgt,
                      const Entries& entries);
ModComplex to_modules(const ModuleContext& ctx, const ProjComplex& c);

/// Homology ranks: (homological degree, internal degree) -> dimension,
/// summed over idempotents.
std::map<std::pair<int, int>, int> homology(const ModComplex& c);

/// Graded dual twisted by the anti-involution; exchanges projectives and
/// injectives and negates both gradings.
Module dual(const Module& m);
ModComplex dual(const ModComplex& c);

/// Generators of m modulo the submodule spanned by base, chosen greedily in
/// increasing degree.  alpha is a projective type and vec lies in
/// eps_alpha M.
/// With allowed set, only idempotents kappa with allowed[kappa] are covered.
std::vector<ModuleContext::TopGenerator> generators(const ModuleContext& ctx, const Module& m,
                                                    std::vector<Echelon> base,
                                                    const std::vector<bool>* allowed = nullptr);

/// Projective complex quasi-isomorphic to c.  Throws if the resolution does
/// not terminate within max_length steps below the bottom of c.
ProjComplex resolve(const ModuleContext& ctx, const ModComplex& c, int max_length = 40);
/// Minimal projective resolution of a single module placed in degree 0.
ProjComplex resolve(const ModuleContext& ctx, const Module& m, int max_length = 40);

struct ResolveOptions {
  int max_length = 40;
  /// Resolve relative to e = sum of the allowed e_kappa: only projectives
  /// T eps with eps under e are used, and only e applied to the result is
  /// exact.  Empty means all idempotents.
  std::vector<bool> allowed;
  /// Return the first max_length steps instead of throwing.
  bool truncate = false;
};
ProjComplex resolve(const ModuleContext& ctx, const ModComplex& c, const ResolveOptions& opt);

/// Cancel invertible degree zero entries between equal summands.
ProjComplex gaussian_eliminate(const HomSpaces& hom, const ProjComplex& c);

/// Number of entries that gaussian_eliminate would still cancel.
int removable_entries(const HomSpaces& hom, const ProjComplex& c);

/// Action of an element x of e_a T e_b on e_b M.
Matrix element_action(const Module& m, int a, int b, const Vec& x);

/// Bigraded ranks of Ext^n(l, m) keyed by (n, internal degree), computed from
/// a minimized projective resolution of l.
std::map<std::pair<int, int>, int> ext_bigraded(const ModuleContext& ctx, const Module& l, const Module& m);

}  // namespace kht
