#include <stdexcept>

#include "khtensor/idempotent.hpp"
#include "khtensor/module.hpp"

namespace kht {

Retract retract(const Module& m, const ModMap& e) {
  Retract r;
  r.module = Module::zero(*m.alg);
  for (size_t t = 0; t < e.blocks.size(); ++t) {
    const Matrix& b = e.blocks[t];
    Echelon ech(b.rows(), true);
    std::vector<int> kept;
    for (int c = 0; c < b.cols(); ++c)
      if (ech.add(b.column(c))) kept.push_back(c);
    Matrix incl(b.rows(), static_cast<int>(kept.size())), retr(static_cast<int>(kept.size()), b.cols());
    for (size_t j = 0; j < kept.size(); ++j) {
      for (int i = 0; i < b.rows(); ++i) incl(i, static_cast<int>(j)) = b(i, kept[j]);
      r.module.deg[t].push_back(m.deg[t][kept[j]]);
    }
    for (int c = 0; c < b.cols(); ++c) {
      auto x = ech.express(b.column(c));
      for (size_t j = 0; j < kept.size(); ++j) retr(static_cast<int>(j), c) = (*x)[j];
    }
    r.incl.blocks.push_back(std::move(incl));
    r.retr.blocks.push_back(std::move(retr));
  }
  for (size_t g = 0; g < m.act.size(); ++g) {
    const Generator& gen = m.alg->generator(static_cast<int>(g));
    r.module.act[g] = r.retr.blocks[gen.target] * m.act[g] * r.incl.blocks[gen.source];
  }
  return r;
}

Vec ModuleContext::multiply(int a, int b, int c, const Vec& x, int dx, const Vec& y, int dy) const {
  const TensorAlgebra& alg = *alg_;
  if (is_zero(x) || is_zero(y)) return Vec(alg.block_dim(a, c));
  auto mat = [&](int s, int t, const Vec& v) {
    const Block& blk = alg.block(s, t);
    Matrix m(alg.ring(s).dim(), alg.ring(t).dim());
    for (int i = 0; i < blk.dim(); ++i)
      if (!v[i].is_zero()) m += blk.elems[i].mat.scaled(v[i]);
    return m;
  };
  auto out = alg.express(a, c, dx + dy, mat(a, b, x) * mat(b, c, y));
  if (!out) throw std::logic_error("multiply: product outside the block basis");
  return *out;
}

namespace {

// Degree zero part of e_k T e_k in compressed coordinates.
struct Corner {
  std::vector<int> members;
  FiniteAlgebra alg;
  Vec expand(const Vec& v, int dim) const {
    Vec out(dim);
    for (size_t i = 0; i < members.size(); ++i) out[members[i]] = v[i];
    return out;
  }
  Vec compress(const Vec& v) const {
    Vec out(members.size());
    for (size_t i = 0; i < members.size(); ++i) out[i] = v[members[i]];
    return out;
  }
};

// Solves z w = e inside the corner e A e.
Vec corner_inverse(const FiniteAlgebra& a, const Vec& e, const Vec& z) {
  Matrix sys(a.dim, a.dim);
  for (int k = 0; k < a.dim; ++k) {
    Vec b(a.dim);
    b[k] = Scalar(1);
    const Vec p = a.mul(z, b);
    for (int r = 0; r < a.dim; ++r) sys(r, k) = p[r];
  }
  auto w = solve(sys, e);
  if (!w) throw std::logic_error("corner_inverse: not invertible");
  return a.mul(a.mul(e, *w), e);
}

}  // namespace

void ModuleContext::build_types() const {
  if (typed_) return;
  typed_ = true;
  const TensorAlgebra& alg = *alg_;
  const int nk = alg.num_kappas();
  std::vector<Corner> corners(nk);
  for (int k = 0; k < nk; ++k) {
    const Block& blk = alg.block(k, k);
    Corner& c = corners[k];
    auto it = blk.members.find(0);
    if (blk.dim() == 0 || it == blk.members.end()) continue;
    c.members = it->second;
    const int full = blk.dim();
    c.alg.dim = static_cast<int>(c.members.size());
    c.alg.one = Vec(c.members.size());
    for (size_t i = 0; i < c.members.size(); ++i)
      if (c.members[i] == 0) c.alg.one[i] = Scalar(1);
    c.alg.mul = [this, k, full, &c](const Vec& x, const Vec& y) {
      return c.compress(multiply(k, k, k, c.expand(x, full), 0, c.expand(y, full), 0));
    };
  }
  auto sandwich = [&](int s, int t, const Vec& es, const Vec& x, int dx, const Vec& et) {
    return multiply(s, s, t, es, 0, multiply(s, t, t, x, dx, et, 0), dx);
  };
  for (int k = 0; k < nk; ++k) {
    const Corner& ck = corners[k];
    if (ck.alg.dim == 0) continue;
    const int full = alg.block_dim(k, k);
    const auto idems = primitive_idempotents(ck.alg);
    for (const Vec& small : idems) {
      const Vec eps = ck.expand(small, full);
      Piece piece{k, eps, -1, {}, 0};
      for (int a = 0; a < static_cast<int>(types_.size()) && piece.type < 0; ++a) {
        const ProjType& ty = types_[a];
        const int c = ty.kappa;
        const Block& there = alg.block(k, c);
        const Block& back = alg.block(c, k);
        for (const auto& [s, xs] : there.members) {
          auto it = back.members.find(-s);
          if (it == back.members.end()) continue;
          for (int xi : xs) {
            Vec bx(there.dim());
            bx[xi] = Scalar(1);
            const Vec x = sandwich(k, c, eps, bx, s, ty.idem);
            if (is_zero(x)) continue;
            for (int yi : it->second) {
              Vec by(back.dim());
              by[yi] = Scalar(1);
              const Vec y = sandwich(c, k, ty.idem, by, -s, eps);
              if (is_zero(y)) continue;
              const Vec u = ck.compress(multiply(k, c, k, x, s, y, -s));
              if (!invertible_in_corner(ck.alg, small, u)) continue;
              const Vec uinv = ck.expand(corner_inverse(ck.alg, small, u), full);
              piece.type = a;
              piece.to_type = multiply(c, k, k, y, -s, uinv, 0);
              piece.degree = -s;
              break;
            }
            if (piece.type >= 0) break;
          }
          if (piece.type >= 0) break;
        }
      }
      if (piece.type < 0) {
        piece.type = static_cast<int>(types_.size());
        piece.to_type = eps;
        types_.push_back({k, eps, idems.size() == 1});
      }
      pieces_.push_back(std::move(piece));
    }
  }
}

int ModuleContext::num_types() const {
  build_types();
  return static_cast<int>(types_.size());
}

const ModuleContext::ProjType& ModuleContext::type(int a) const {
  build_types();
  return types_.at(a);
}

int ModuleContext::type_of(int kappa) const {
  build_types();
  for (size_t a = 0; a < types_.size(); ++a)
    if (types_[a].kappa == kappa && types_[a].whole) return static_cast<int>(a);
  return -1;
}

const std::vector<ModuleContext::Piece>& ModuleContext::pieces() const {
  build_types();
  return pieces_;
}

const Retract& ModuleContext::type_module(int a) const {
  auto it = type_modules_.find(a);
  if (it != type_modules_.end()) return *it->second;
  const ProjType& ty = type(a);
  const Module& p = projective(ty.kappa);
  auto r = std::make_unique<Retract>();
  if (ty.whole) {
    r->module = p;
    r->incl = r->retr = ModMap::identity(p);
  } else {
    *r = retract(p, from_projective(ty.kappa, p, ty.idem));
  }
  return *type_modules_.emplace(a, std::move(r)).first->second;
}

ModMap ModuleContext::type_map(int a, const Module& m, const Vec& v) const {
  const Retract& r = type_module(a);
  return from_projective(type(a).kappa, m, v) * r.incl;
}

}  // namespace kht
