#include "khtensor/bimodule.hpp"

#include <stdexcept>

namespace kht {

int Bimodule::dim() const {
  int d = 0;
  for (const auto& c : cols) d += c.dim();
  return d;
}

ModMap Bimodule::word_action(const std::vector<int>& word, int target) const {
  ModMap r = ModMap::identity(cols[target]);
  int cur = target;
  for (int g : word) {
    const Generator& gen = right->generator(g);
    if (gen.target != cur) throw std::invalid_argument("Bimodule::word_action: idempotents do not chain");
    r = rho[g] * r;
    cur = gen.source;
  }
  return r;
}

ModMap Bimodule::element_action(int t, int s, const Vec& x) const {
  const Block& blk = right->block(t, s);
  ModMap r = ModMap::zero(cols[t], cols[s]);
  bool first = true;
  for (int k = 0; k < blk.dim(); ++k) {
    if (x[k].is_zero()) continue;
    ModMap w = word_action(blk.elems[k].word, t).scaled(x[k]);
    if (first) r.degree = w.degree;
    first = false;
    r += w;
  }
  return r;
}

Bimodule Bimodule::shifted(int q) const {
  Bimodule b = *this;
  for (auto& c : b.cols) c = c.shifted(q);
  return b;
}

bool verify_bimodule(const Bimodule& b) {
  const TensorAlgebra& r = *b.right;
  for (const auto& c : b.cols)
    if (!verify_module(c)) return false;
  for (size_t g = 0; g < r.generators().size(); ++g) {
    const Generator& gen = r.generator(static_cast<int>(g));
    if (b.rho[g].degree != gen.degree) return false;
    if (!is_module_map(b.cols[gen.target], b.cols[gen.source], b.rho[g])) return false;
  }
  // Every relation of R follows from rewriting h * x for basis elements x.
  for (int t = 0; t < r.num_kappas(); ++t)
    for (int s = 0; s < r.num_kappas(); ++s) {
      const Block& blk = r.block(t, s);
      std::vector<ModMap> act;
      for (const auto& x : blk.elems) act.push_back(b.word_action(x.word, t));
      for (int g : r.generators_from(t)) {
        const Generator& gen = r.generator(g);
        const Block& tb = r.block(gen.target, s);
        std::vector<ModMap> tact;
        for (const auto& x : tb.elems) tact.push_back(b.word_action(x.word, gen.target));
        for (int k = 0; k < blk.dim(); ++k) {
          const auto& x = blk.elems[k];
          int d = x.degree + gen.degree;
          auto c = r.express(gen.target, s, d, gen.mat * x.mat);
          if (!c) return false;
          ModMap lhs = act[k] * b.rho[g];
          ModMap rhs = ModMap::zero(b.cols[gen.target], b.cols[s], d);
          for (int j = 0; j < tb.dim(); ++j)
            if (!(*c)[j].is_zero()) rhs += tact[j].scaled((*c)[j]);
          if (!(lhs - rhs).is_zero()) return false;
        }
      }
    }
  return true;
}

Bimodule identity_bimodule(const ModuleContext& ctx) {
  const TensorAlgebra& alg = ctx.algebra();
  Bimodule b;
  b.left = b.right = &alg;
  for (int r = 0; r < alg.num_kappas(); ++r) b.cols.push_back(ctx.projective(r));
  for (const auto& gen : alg.generators()) {
    ModMap f = ModMap::zero(b.cols[gen.target], b.cols[gen.source], gen.degree);
    for (int u = 0; u < alg.num_kappas(); ++u) {
      const Block& blk = alg.block(u, gen.target);
      for (int i = 0; i < blk.dim(); ++i) {
        const auto& x = blk.elems[i];
        auto c = alg.express(u, gen.source, x.degree + gen.degree, x.mat * gen.mat);
        if (!c) throw std::logic_error("identity_bimodule: product outside the block basis");
        for (size_t j = 0; j < c->size(); ++j) f.blocks[u](static_cast<int>(j), i) = (*c)[j];
      }
    }
    b.rho.push_back(std::move(f));
  }
  return b;
}

Bimodule mirror(const Bimodule& b) {
  const TensorAlgebra& l = *b.left;
  const TensorAlgebra& r = *b.right;
  Bimodule m;
  m.left = &r;
  m.right = &l;
  for (int u = 0; u < l.num_kappas(); ++u) {
    Module c = Module::zero(r);
    for (int t = 0; t < r.num_kappas(); ++t) c.deg[t] = b.cols[t].deg[u];
    for (size_t g = 0; g < r.generators().size(); ++g) c.act[g] = b.rho[r.generator(static_cast<int>(g)).star].blocks[u];
    m.cols.push_back(std::move(c));
  }
  for (size_t h = 0; h < l.generators().size(); ++h) {
    const Generator& gen = l.generator(static_cast<int>(h));
    ModMap f;
    f.degree = gen.degree;
    for (int t = 0; t < r.num_kappas(); ++t) f.blocks.push_back(b.cols[t].act[gen.star]);
    m.rho.push_back(std::move(f));
  }
  return m;
}

TensorModule tensor_module(const Bimodule& b, const Module& n) {
  const TensorAlgebra& l = *b.left;
  const TensorAlgebra& mid = *b.right;
  const int nl = l.num_kappas(), nm = mid.num_kappas();
  TensorModule out;
  out.offset.assign(nl, std::vector<int>(nm + 1, 0));
  Module free = Module::zero(l);
  for (int u = 0; u < nl; ++u) {
    int off = 0;
    for (int m = 0; m < nm; ++m) {
      out.offset[u][m] = off;
      for (int i = 0; i < b.cols[m].dim(u); ++i)
        for (int j = 0; j < n.dim(m); ++j) free.deg[u].push_back(b.cols[m].deg[u][i] + n.deg[m][j]);
      off += b.cols[m].dim(u) * n.dim(m);
    }
    out.offset[u][nm] = off;
  }
  for (size_t g = 0; g < l.generators().size(); ++g) {
    const Generator& gen = l.generator(static_cast<int>(g));
    Matrix a(free.dim(gen.target), free.dim(gen.source));
    for (int m = 0; m < nm; ++m) {
      const Matrix& bm = b.cols[m].act[g];
      const int nd = n.dim(m);
      for (int r = 0; r < bm.rows(); ++r)
        for (int c = 0; c < bm.cols(); ++c) {
          if (bm(r, c).is_zero()) continue;
          for (int j = 0; j < nd; ++j)
            a(out.offset[gen.target][m] + r * nd + j, out.offset[gen.source][m] + c * nd + j) = bm(r, c);
        }
    }
    free.act[g] = std::move(a);
  }
  // (x h) (x) v - x (x) (h v) for every middle generator h.
  std::vector<Echelon> rel;
  for (int u = 0; u < nl; ++u) {
    rel.emplace_back(free.dim(u));
    for (size_t h = 0; h < mid.generators().size(); ++h) {
      const Generator& gen = mid.generator(static_cast<int>(h));
      const int t = gen.target, s = gen.source;
      const Matrix& xr = b.rho[h].blocks[u];  // e_u B e_t -> e_u B e_s
      const Matrix& hn = n.act[h];            // e_s N -> e_t N
      for (int i = 0; i < b.cols[t].dim(u); ++i)
        for (int j = 0; j < n.dim(s); ++j) {
          Vec v(free.dim(u));
          for (int k = 0; k < xr.rows(); ++k)
            if (!xr(k, i).is_zero()) v[out.offset[u][s] + k * n.dim(s) + j] += xr(k, i);
          for (int k = 0; k < hn.rows(); ++k)
            if (!hn(k, j).is_zero()) v[out.offset[u][t] + i * n.dim(t) + k] -= hn(k, j);
          if (!is_zero(v)) rel.back().add(v);
        }
    }
  }
  Quotient q = quotient(free, rel);
  out.module = std::move(q.module);
  out.projection = std::move(q.projection);
  out.section = std::move(q.section);
  return out;
}

ModMap tensor_map(const Bimodule& b, const TensorModule& src, const Module& n, const TensorModule& tgt,
                  const Module& n2, const ModMap& f) {
  const int nl = b.left->num_kappas(), nm = b.right->num_kappas();
  ModMap out;
  out.degree = f.degree;
  for (int u = 0; u < nl; ++u) {
    Matrix big(tgt.offset[u][nm], src.offset[u][nm]);
    for (int m = 0; m < nm; ++m) {
      const Matrix& fm = f.blocks[m];
      for (int i = 0; i < b.cols[m].dim(u); ++i)
        for (int r = 0; r < fm.rows(); ++r)
          for (int c = 0; c < fm.cols(); ++c)
            if (!fm(r, c).is_zero())
              big(tgt.offset[u][m] + i * n2.dim(m) + r, src.offset[u][m] + i * n.dim(m) + c) = fm(r, c);
    }
    out.blocks.push_back(tgt.projection.blocks[u] * big * src.section.blocks[u]);
  }
  return out;
}

Bimodule tensor(const Bimodule& a, const Bimodule& b) {
  if (a.right != b.left) throw std::invalid_argument("tensor: algebras do not match");
  Bimodule out;
  out.left = a.left;
  out.right = b.right;
  std::vector<TensorModule> tm;
  for (const auto& c : b.cols) tm.push_back(tensor_module(a, c));
  for (const auto& t : tm) out.cols.push_back(t.module);
  for (size_t g = 0; g < b.right->generators().size(); ++g) {
    const Generator& gen = b.right->generator(static_cast<int>(g));
    out.rho.push_back(tensor_map(a, tm[gen.target], b.cols[gen.target], tm[gen.source], b.cols[gen.source], b.rho[g]));
  }
  return out;
}

bool is_bimodule_map(const Bimodule& src, const Bimodule& tgt, const std::vector<ModMap>& f) {
  for (size_t r = 0; r < src.cols.size(); ++r)
    if (!is_module_map(src.cols[r], tgt.cols[r], f[r])) return false;
  for (size_t g = 0; g < src.rho.size(); ++g) {
    const Generator& gen = src.right->generator(static_cast<int>(g));
    if (!(f[gen.source] * src.rho[g] - tgt.rho[g] * f[gen.target]).is_zero()) return false;
  }
  return true;
}

std::vector<std::vector<ModMap>> bimodule_homs(const Bimodule& src, const Bimodule& tgt, int degree) {
  const int nr = static_cast<int>(src.cols.size());
  const int nl = src.left->num_kappas();
  // var[r][t](i, j) for entries with matching degrees, -1 otherwise.
  std::vector<std::vector<std::vector<std::vector<int>>>> var(nr, std::vector<std::vector<std::vector<int>>>(nl));
  int n = 0;
  for (int r = 0; r < nr; ++r)
    for (int t = 0; t < nl; ++t) {
      var[r][t].assign(tgt.cols[r].dim(t), std::vector<int>(src.cols[r].dim(t), -1));
      for (int i = 0; i < tgt.cols[r].dim(t); ++i)
        for (int j = 0; j < src.cols[r].dim(t); ++j)
          if (tgt.cols[r].deg[t][i] == src.cols[r].deg[t][j] + degree) var[r][t][i][j] = n++;
    }
  Echelon cons(n);
  // a F_s - F_t b = 0 where a : tgt block s -> t and b : src block s -> t, for
  // maps between the columns ra (source side) and rb.
  auto add_commutator = [&](int ra, int rb, int s, int t, const Matrix& a, const Matrix& b) {
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) {
        Vec row(n);
        for (int k = 0; k < a.cols(); ++k)
          if (!a(i, k).is_zero() && var[rb][s][k][j] >= 0) row[var[rb][s][k][j]] += a(i, k);
        for (int k = 0; k < b.rows(); ++k)
          if (!b(k, j).is_zero() && var[ra][t][i][k] >= 0) row[var[ra][t][i][k]] -= b(k, j);
        if (!is_zero(row)) cons.add(row);
      }
  };
  for (int r = 0; r < nr; ++r)
    for (size_t g = 0; g < src.left->generators().size(); ++g) {
      const Generator& gen = src.left->generator(static_cast<int>(g));
      add_commutator(r, r, gen.source, gen.target, tgt.cols[r].act[g], src.cols[r].act[g]);
    }
  // F_source rho_src = rho_tgt F_target, block by block.
  for (size_t h = 0; h < src.rho.size(); ++h) {
    const Generator& gen = src.right->generator(static_cast<int>(h));
    for (int u = 0; u < nl; ++u) {
      const Matrix& a = tgt.rho[h].blocks[u];
      const Matrix& b = src.rho[h].blocks[u];
      for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
          Vec row(n);
          for (int k = 0; k < a.cols(); ++k)
            if (!a(i, k).is_zero() && var[gen.target][u][k][j] >= 0) row[var[gen.target][u][k][j]] += a(i, k);
          for (int k = 0; k < b.rows(); ++k)
            if (!b(k, j).is_zero() && var[gen.source][u][i][k] >= 0) row[var[gen.source][u][i][k]] -= b(k, j);
          if (!is_zero(row)) cons.add(row);
        }
    }
  }
  std::vector<Vec> sol;
  if (cons.rank() == 0) {
    for (int v = 0; v < n; ++v) {
      Vec e(n);
      e[v] = Scalar(1);
      sol.push_back(std::move(e));
    }
  } else {
    sol = nullspace(Matrix::from_columns(cons.rows(), n).transpose());
  }
  std::vector<std::vector<ModMap>> out;
  for (const Vec& x : sol) {
    std::vector<ModMap> f;
    for (int r = 0; r < nr; ++r) {
      ModMap m = ModMap::zero(src.cols[r], tgt.cols[r], degree);
      for (int t = 0; t < nl; ++t)
        for (size_t i = 0; i < var[r][t].size(); ++i)
          for (size_t j = 0; j < var[r][t][i].size(); ++j)
            if (var[r][t][i][j] >= 0) m.blocks[t](static_cast<int>(i), static_cast<int>(j)) = x[var[r][t][i][j]];
      f.push_back(std::move(m));
    }
    out.push_back(std::move(f));
  }
  return out;
}

Bimodule bimodule_kernel(const Bimodule& src, const Bimodule& tgt, const std::vector<ModMap>& f) {
  Bimodule out;
  out.left = src.left;
  out.right = src.right;
  std::vector<ModMap> incl;
  std::vector<std::vector<Echelon>> ech;
  for (size_t r = 0; r < src.cols.size(); ++r) {
    Kernel k = kernel(src.cols[r], tgt.cols[r], f[r]);
    std::vector<Echelon> e;
    for (const auto& blk : k.inclusion.blocks) {
      e.emplace_back(blk.rows(), true);
      for (int c = 0; c < blk.cols(); ++c) e.back().add(blk.column(c));
    }
    out.cols.push_back(std::move(k.module));
    incl.push_back(std::move(k.inclusion));
    ech.push_back(std::move(e));
  }
  for (size_t g = 0; g < src.rho.size(); ++g) {
    const Generator& gen = src.right->generator(static_cast<int>(g));
    ModMap m = ModMap::zero(out.cols[gen.target], out.cols[gen.source], src.rho[g].degree);
    ModMap img = src.rho[g] * incl[gen.target];
    for (size_t u = 0; u < m.blocks.size(); ++u)
      for (int c = 0; c < img.blocks[u].cols(); ++c) {
        auto co = ech[gen.source][u].express(img.blocks[u].column(c));
        if (!co) throw std::logic_error("bimodule_kernel: right action leaves the kernel");
        for (size_t j = 0; j < co->size(); ++j) m.blocks[u](static_cast<int>(j), c) = (*co)[j];
      }
    out.rho.push_back(std::move(m));
  }
  return out;
}

Retract type_column(const Bimodule& b, const ModuleContext& right, int a) {
  const auto& ty = right.type(a);
  const Module& col = b.cols[ty.kappa];
  if (ty.whole) return Retract{col, ModMap::identity(col), ModMap::identity(col)};
  ModMap e = b.element_action(ty.kappa, ty.kappa, ty.idem);
  e.degree = 0;
  return retract(col, e);
}

namespace {

const Retract& cached_column(std::map<int, Retract>& cache, const Bimodule& b, const ModuleContext& right, int a) {
  auto it = cache.find(a);
  if (it == cache.end()) it = cache.emplace(a, type_column(b, right, a)).first;
  return it->second;
}

}  // namespace

ModComplex apply(const Bimodule& b, const ModuleContext& right, const ProjComplex& c) {
  ModComplex out;
  out.alg = b.left;
  out.lo = c.lo;
  std::map<int, Retract> cols;
  std::vector<DirectSum> sums;
  for (const auto& term : c.terms) {
    std::vector<Module> parts;
    for (const auto& s : term) parts.push_back(cached_column(cols, b, right, s.alpha).module.shifted(s.shift));
    if (parts.empty()) {
      out.terms.push_back(Module::zero(*b.left));
      sums.emplace_back();
      continue;
    }
    std::vector<const Module*> ptr;
    for (const auto& p : parts) ptr.push_back(&p);
    sums.push_back(direct_sum(ptr));
    out.terms.push_back(sums.back().module);
  }
  for (size_t i = 0; i < c.diff.size(); ++i) {
    ModMap d = ModMap::zero(out.terms[i], out.terms[i + 1]);
    for (const auto& [rc, x] : c.diff[i]) {
      const auto [row, col] = rc;
      const int a = c.terms[i][col].alpha, bb = c.terms[i + 1][row].alpha;
      ModMap e = b.element_action(right.type(a).kappa, right.type(bb).kappa, x);
      e = cols.at(bb).retr * e * cols.at(a).incl;
      e.degree = 0;
      d += sums[i + 1].inj[row] * e * sums[i].proj[col];
    }
    out.diff.push_back(std::move(d));
  }
  return out;
}

std::vector<ModMap> apply_map(const Bimodule& a, const Bimodule& b, const std::vector<ModMap>& f,
                              const ModuleContext& right, const ProjComplex& c) {
  const int nl = a.left->num_kappas();
  std::map<int, Retract> acols, bcols;
  std::vector<ModMap> out;
  for (const auto& term : c.terms) {
    std::vector<ModMap> pieces;
    for (const auto& s : term) {
      const Retract& ra = cached_column(acols, a, right, s.alpha);
      const Retract& rb = cached_column(bcols, b, right, s.alpha);
      pieces.push_back(rb.retr * f[right.type(s.alpha).kappa] * ra.incl);
    }
    ModMap m;
    for (int t = 0; t < nl; ++t) {
      int rows = 0, cols = 0;
      for (const auto& p : pieces) {
        rows += p.blocks[t].rows();
        cols += p.blocks[t].cols();
      }
      Matrix blk(rows, cols);
      int r0 = 0, c0 = 0;
      for (const auto& p : pieces) {
        const Matrix& x = p.blocks[t];
        for (int r = 0; r < x.rows(); ++r)
          for (int cc = 0; cc < x.cols(); ++cc) blk(r0 + r, c0 + cc) = x(r, cc);
        r0 += x.rows();
        c0 += x.cols();
      }
      m.blocks.push_back(std::move(blk));
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace kht
