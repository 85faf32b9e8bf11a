#pragma once

/**
 * @file functors.hpp
 * @brief Graded Hom dimensions between projectives, standard modules, and
 * the functors adding a black strand (F, with adjoint E) or a red strand
 * (I) at the far right.
 */

#include <vector>

#include "khtensor/bimodule.hpp"
#include "khtensor/laurent.hpp"
#include "khtensor/module.hpp"

namespace kht {

/// Graded dimension of Hom(P_kappa, P_kappa') = e_kappa T e_kappa'.
LaurentPoly hom_dim_graded(const TensorAlgebra& alg, int kappa, int kappa_prime);

/// P_kappa modulo the images of every P_kappa' with kappa' > kappa pointwise.
Quotient standard_module(const ModuleContext& ctx, int kappa);

/// A non-unital embedding small -> big that adds one strand at the far
/// right: kappa[s] is the image of idempotent s, gen[g] the image of
/// generator g.
struct StrandEmbedding {
  const TensorAlgebra* small = nullptr;
  const TensorAlgebra* big = nullptr;
  std::vector<int> kappa;
  std::vector<int> gen;
};

/// Adds a black strand right of everything: (l, k) -> (l, k + 1).
StrandEmbedding black_embedding(const TensorAlgebra& small, const TensorAlgebra& big);
/// Adds a red strand right of everything: (l, k) -> (l + 1, k).
StrandEmbedding red_embedding(const TensorAlgebra& small, const TensorAlgebra& big);

/// big e as a (big, small) bimodule, e the image of the identity.
Bimodule induction_bimodule(const ModuleContext& big, const StrandEmbedding& emb);

/// Extension of scalars along the embedding.
Module induce(const ModuleContext& big, const StrandEmbedding& emb, const Module& m);
/// e M with the small algebra acting through the embedding.
Module restrict_module(const StrandEmbedding& emb, const Module& m);

/// F over T^l_k, landing in T^l_{k+1}.
Module functor_F(const ModuleContext& big, const Module& m);
/// E over T^l_{k+1}, landing in T^l_k.
Module functor_E(const TensorAlgebra& small, const Module& m);
/// I over T^l_k, landing in T^{l+1}_k.
Module functor_I(const ModuleContext& big, const Module& m);

}  // namespace kht
