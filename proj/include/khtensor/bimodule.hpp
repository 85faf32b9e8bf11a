#pragma once

/**
 * @file bimodule.hpp
 * @brief Graded bimodules between tensor product algebras and the functors
 * they induce on complexes of projectives.
 *
 * A bimodule B over (L, R) is stored column by column: cols[r] is the left
 * L-module B e_r, and the right action of an R-generator g in e_t R e_s is
 * the L-module map rho[g] : B e_t -> B e_s.
 */

#include <vector>

#include "khtensor/complex.hpp"

namespace kht {

struct Bimodule {
  const TensorAlgebra* left = nullptr;
  const TensorAlgebra* right = nullptr;
  std::vector<Module> cols;
  std::vector<ModMap> rho;

  int dim() const;
  /// Right action of a generator word (word[0] acts first).
  ModMap word_action(const std::vector<int>& word, int target) const;
  /// Right action of an element of e_t R e_s in block coordinates.
  ModMap element_action(int t, int s, const Vec& x) const;
  Bimodule shifted(int q) const;
};

/// Left modules, module maps and the relations of the right algebra.
bool verify_bimodule(const Bimodule& b);

/// R as an (R, R)-bimodule.
Bimodule identity_bimodule(const ModuleContext& ctx);

/// The bimodule with left and right exchanged through the anti-involution.
Bimodule mirror(const Bimodule& b);

/// a (L, M) tensor b (M, R) over M.
Bimodule tensor(const Bimodule& a, const Bimodule& b);

/// B tensor_M N for a left M-module N.
struct TensorModule {
  Module module;
  ModMap projection;  // from the free tensor space
  ModMap section;
  std::vector<std::vector<int>> offset;  // offset[u][m]: start of e_u B e_m x e_m N in block u
};
TensorModule tensor_module(const Bimodule& b, const Module& n);
/// id tensor f for an M-module map f : n -> n2.
ModMap tensor_map(const Bimodule& b, const TensorModule& src, const Module& n, const TensorModule& tgt,
                  const Module& n2, const ModMap& f);

/// Bimodule maps are lists of column maps commuting with rho.
bool is_bimodule_map(const Bimodule& src, const Bimodule& tgt, const std::vector<ModMap>& f);

/// Basis of the space of bimodule maps src -> tgt of the given degree.
std::vector<std::vector<ModMap>> bimodule_homs(const Bimodule& src, const Bimodule& tgt, int degree = 0);

/// Kernel of a bimodule map with the restricted right action.
Bimodule bimodule_kernel(const Bimodule& src, const Bimodule& tgt, const std::vector<ModMap>& f);

/// B eps_a for a projective type a of the right algebra.
Retract type_column(const Bimodule& b, const ModuleContext& right, int a);

/// B applied term by term to a complex of right projectives.
ModComplex apply(const Bimodule& b, const ModuleContext& right, const ProjComplex& c);
/// The chain map apply(a, c) -> apply(b, c) induced by a bimodule map.
std::vector<ModMap> apply_map(const Bimodule& a, const Bimodule& b, const std::vector<ModMap>& f,
                              const ModuleContext& right, const ProjComplex& c);

}  // namespace kht
