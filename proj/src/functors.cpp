#include "khtensor/functors.hpp"

#include <stdexcept>

namespace kht {

LaurentPoly hom_dim_graded(const TensorAlgebra& alg, int kappa, int kappa_prime) {
  return LaurentPoly::from_dims(alg.block_graded_dim(kappa, kappa_prime));
}

Quotient standard_module(const ModuleContext& ctx, int kappa) {
  const TensorAlgebra& alg = ctx.algebra();
  const Module& p = ctx.projective(kappa);
  const Kappa& base = alg.kappa(kappa);
  std::vector<std::vector<Vec>> seeds(alg.num_kappas());
  for (int u = 0; u < alg.num_kappas(); ++u) {
    if (u == kappa || !base.leq(alg.kappa(u))) continue;
    for (int i = 0; i < p.dim(u); ++i) {
      Vec e(p.dim(u));
      e[i] = Scalar(1);
      seeds[u].push_back(std::move(e));
    }
  }
  return quotient(p, generate_submodule(p, seeds));
}

namespace {

StrandEmbedding embed(const TensorAlgebra& small, const TensorAlgebra& big, bool red) {
  StrandEmbedding emb{&small, &big, {}, {}};
  for (const Kappa& kappa : small.kappas()) {
    Kappa image{big.l(), big.k(), kappa.v};
    if (red) image.v.push_back(small.k());
    emb.kappa.push_back(big.kappa_index(image));
  }
  for (const auto& g : small.generators()) {
    auto h = big.find_generator(g.kind, g.i, emb.kappa[g.source]);
    if (!h || big.generator(*h).target != emb.kappa[g.target] || big.generator(*h).degree != g.degree)
      throw std::logic_error("strand embedding: generator has no image");
    emb.gen.push_back(*h);
  }
  return emb;
}

}  // namespace

StrandEmbedding black_embedding(const TensorAlgebra& small, const TensorAlgebra& big) {
  if (big.l() != small.l() || big.k() != small.k() + 1) throw std::invalid_argument("black_embedding: weights");
  return embed(small, big, false);
}

StrandEmbedding red_embedding(const TensorAlgebra& small, const TensorAlgebra& big) {
  if (big.l() != small.l() + 1 || big.k() != small.k()) throw std::invalid_argument("red_embedding: weights");
  return embed(small, big, true);
}

Bimodule induction_bimodule(const ModuleContext& ctx, const StrandEmbedding& emb) {
  const TensorAlgebra& big = ctx.algebra();
  Bimodule b;
  b.left = &big;
  b.right = emb.small;
  for (int s : emb.kappa) b.cols.push_back(ctx.projective(s));
  for (size_t g = 0; g < emb.gen.size(); ++g) {
    const Generator& gen = big.generator(emb.gen[g]);
    ModMap f = ModMap::zero(ctx.projective(gen.target), ctx.projective(gen.source), gen.degree);
    for (int u = 0; u < big.num_kappas(); ++u) {
      const Block& blk = big.block(u, gen.target);
      for (int i = 0; i < blk.dim(); ++i) {
        const auto& x = blk.elems[i];
        auto c = big.express(u, gen.source, x.degree + gen.degree, x.mat * gen.mat);
        if (!c) throw std::logic_error("induction_bimodule: product outside the block basis");
        for (size_t j = 0; j < c->size(); ++j) f.blocks[u](static_cast<int>(j), i) = (*c)[j];
      }
    }
    b.rho.push_back(std::move(f));
  }
  return b;
}

Module induce(const ModuleContext& big, const StrandEmbedding& emb, const Module& m) {
  return tensor_module(induction_bimodule(big, emb), m).module;
}

Module restrict_module(const StrandEmbedding& emb, const Module& m) {
  Module r = Module::zero(*emb.small);
  for (size_t s = 0; s < emb.kappa.size(); ++s) r.deg[s] = m.deg[emb.kappa[s]];
  for (size_t g = 0; g < emb.gen.size(); ++g) r.act[g] = m.act[emb.gen[g]];
  return r;
}

Module functor_F(const ModuleContext& big, const Module& m) {
  return induce(big, black_embedding(*m.alg, big.algebra()), m);
}

Module functor_E(const TensorAlgebra& small, const Module& m) {
  return restrict_module(black_embedding(small, *m.alg), m);
}

Module functor_I(const ModuleContext& big, const Module& m) {
  return induce(big, red_embedding(*m.alg, big.algebra()), m);
}

}  // namespace kht
