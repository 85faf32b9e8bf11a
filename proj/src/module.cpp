#include "khtensor/module.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace kht {

Module Module::zero(const TensorAlgebra& alg) {
  Module m;
  m.alg = &alg;
  m.deg.assign(alg.num_kappas(), {});
  m.act.assign(alg.generators().size(), Matrix());
  return m;
}

int Module::dim() const {
  int d = 0;
  for (const auto& v : deg) d += static_cast<int>(v.size());
  return d;
}

Module Module::shifted(int s) const {
  Module m = *this;
  for (auto& v : m.deg)
    for (int& d : v) d += s;
  return m;
}

Matrix Module::word_action(const std::vector<int>& word, int source) const {
  Matrix m = Matrix::identity(dim(source));
  int cur = source;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const Generator& g = alg->generator(*it);
    if (g.source != cur) throw std::invalid_argument("word_action: idempotents do not chain");
    m = act[*it] * m;
    cur = g.target;
  }
  return m;
}

Vec Module::apply_word(const std::vector<int>& word, int source, Vec v) const {
  int cur = source;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const Generator& g = alg->generator(*it);
    if (g.source != cur) throw std::invalid_argument("apply_word: idempotents do not chain");
    v = act[*it].apply(v);
    cur = g.target;
  }
  return v;
}

std::map<int, int> Module::graded_dim(int t) const {
  std::map<int, int> out;
  for (int d : deg[t]) ++out[d];
  return out;
}

std::map<int, int> Module::graded_dim() const {
  std::map<int, int> out;
  for (const auto& v : deg)
    for (int d : v) ++out[d];
  return out;
}

ModMap ModMap::zero(const Module& src, const Module& tgt, int degree) {
  ModMap f;
  f.degree = degree;
  for (size_t t = 0; t < src.deg.size(); ++t) f.blocks.emplace_back(tgt.dim(t), src.dim(t));
  return f;
}

ModMap ModMap::identity(const Module& m) {
  ModMap f;
  for (size_t t = 0; t < m.deg.size(); ++t) f.blocks.push_back(Matrix::identity(m.dim(t)));
  return f;
}

bool ModMap::is_zero() const {
  for (const auto& b : blocks)
    if (!b.is_zero()) return false;
  return true;
}

ModMap ModMap::operator*(const ModMap& o) const {
  ModMap f;
  f.degree = degree + o.degree;
  for (size_t t = 0; t < blocks.size(); ++t) f.blocks.push_back(blocks[t] * o.blocks[t]);
  return f;
}

ModMap& ModMap::operator+=(const ModMap& o) {
  for (size_t t = 0; t < blocks.size(); ++t) blocks[t] += o.blocks[t];
  return *this;
}

ModMap& ModMap::operator-=(const ModMap& o) {
  for (size_t t = 0; t < blocks.size(); ++t) blocks[t] -= o.blocks[t];
  return *this;
}

ModMap ModMap::scaled(const Scalar& s) const {
  ModMap f = *this;
  for (auto& b : f.blocks) b = b.scaled(s);
  return f;
}

namespace {

bool homogeneous(const Matrix& m, const std::vector<int>& col_deg, const std::vector<int>& row_deg, int d) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero() && row_deg[r] != col_deg[c] + d) return false;
  return true;
}

}  // namespace

bool is_module_map(const Module& src, const Module& tgt, const ModMap& f) {
  for (int t = 0; t < static_cast<int>(src.deg.size()); ++t)
    if (!homogeneous(f.blocks[t], src.deg[t], tgt.deg[t], f.degree)) return false;
  for (size_t g = 0; g < src.act.size(); ++g) {
    const Generator& gen = src.alg->generator(static_cast<int>(g));
    if (!(f.blocks[gen.target] * src.act[g] == tgt.act[g] * f.blocks[gen.source])) return false;
  }
  return true;
}

bool verify_module(const Module& m) {
  for (size_t g = 0; g < m.act.size(); ++g) {
    const Generator& gen = m.alg->generator(static_cast<int>(g));
    const Matrix& a = m.act[g];
    if (a.rows() != m.dim(gen.target) || a.cols() != m.dim(gen.source)) return false;
    if (!homogeneous(a, m.deg[gen.source], m.deg[gen.target], gen.degree)) return false;
  }
  return true;
}

std::vector<Echelon> generate_submodule(const Module& m, const std::vector<std::vector<Vec>>& seeds) {
  std::vector<Echelon> span;
  for (size_t t = 0; t < m.deg.size(); ++t) span.emplace_back(m.dim(static_cast<int>(t)));
  std::deque<std::pair<int, Vec>> queue;
  for (size_t t = 0; t < seeds.size(); ++t)
    for (const auto& v : seeds[t])
      if (span[t].add(v)) queue.emplace_back(static_cast<int>(t), v);
  const auto& alg = *m.alg;
  while (!queue.empty()) {
    auto [t, v] = std::move(queue.front());
    queue.pop_front();
    for (int g : alg.generators_from(t)) {
      const int tgt = alg.generator(g).target;
      if (m.dim(tgt) == 0) continue;
      Vec w = m.act[g].apply(v);
      if (span[tgt].add(w)) queue.emplace_back(tgt, std::move(w));
    }
  }
  return span;
}

Quotient quotient(const Module& m, const std::vector<Echelon>& sub) {
  Quotient q;
  q.module = Module::zero(*m.alg);
  const int nk = static_cast<int>(m.deg.size());
  std::vector<Matrix> section(nk);
  for (int t = 0; t < nk; ++t) {
    std::vector<bool> pivot(m.dim(t), false);
    for (int p : sub[t].pivots()) pivot[p] = true;
    std::vector<int> keep;
    for (int i = 0; i < m.dim(t); ++i)
      if (!pivot[i]) keep.push_back(i);
    Matrix proj(static_cast<int>(keep.size()), m.dim(t));
    section[t] = Matrix(m.dim(t), static_cast<int>(keep.size()));
    for (size_t j = 0; j < keep.size(); ++j) {
      section[t](keep[j], static_cast<int>(j)) = Scalar(1);
      q.module.deg[t].push_back(m.deg[t][keep[j]]);
    }
    for (int i = 0; i < m.dim(t); ++i) {
      Vec e(m.dim(t));
      e[i] = Scalar(1);
      const Vec r = pivot[i] ? sub[t].reduce(e) : e;
      for (size_t j = 0; j < keep.size(); ++j) proj(static_cast<int>(j), i) = r[keep[j]];
    }
    q.projection.blocks.push_back(std::move(proj));
  }
  for (size_t g = 0; g < m.act.size(); ++g) {
    const Generator& gen = m.alg->generator(static_cast<int>(g));
    q.module.act[g] = q.projection.blocks[gen.target] * m.act[g] * section[gen.source];
  }
  q.section.blocks = std::move(section);
  return q;
}

Kernel submodule(const Module& m, const std::vector<Echelon>& sub) {
  Kernel k;
  k.module = Module::zero(*m.alg);
  const int nk = static_cast<int>(m.deg.size());
  for (int t = 0; t < nk; ++t) {
    const auto& rows = sub[t].rows();
    Matrix inc(m.dim(t), static_cast<int>(rows.size()));
    for (size_t j = 0; j < rows.size(); ++j) {
      for (int i = 0; i < m.dim(t); ++i) inc(i, static_cast<int>(j)) = rows[j][i];
      k.module.deg[t].push_back(m.deg[t][sub[t].pivots()[j]]);
    }
    k.inclusion.blocks.push_back(std::move(inc));
  }
  for (size_t g = 0; g < m.act.size(); ++g) {
    const Generator& gen = m.alg->generator(static_cast<int>(g));
    const int s = gen.source, t = gen.target;
    Matrix a(k.module.dim(t), k.module.dim(s));
    for (int c = 0; c < k.module.dim(s); ++c) {
      auto coords = sub[t].coordinates(m.act[g].apply(k.inclusion.blocks[s].column(c)));
      if (!coords) throw std::logic_error("submodule: span is not closed under the action");
      for (int r = 0; r < a.rows(); ++r) a(r, c) = (*coords)[r];
    }
    k.module.act[g] = std::move(a);
  }
  return k;
}

std::vector<Vec> graded_kernel(const Matrix& m, const std::vector<int>& col_deg, const std::vector<int>& row_deg,
                               int map_degree) {
  std::map<int, std::vector<int>> cols_by_deg, rows_by_deg;
  for (int c = 0; c < m.cols(); ++c) cols_by_deg[col_deg[c]].push_back(c);
  for (int r = 0; r < m.rows(); ++r) rows_by_deg[row_deg[r]].push_back(r);
  std::vector<Vec> out;
  for (const auto& [d, cols] : cols_by_deg) {
    auto it = rows_by_deg.find(d + map_degree);
    const std::vector<int> none;
    const auto& rows = it == rows_by_deg.end() ? none : it->second;
    Matrix sub(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t c = 0; c < cols.size(); ++c) sub(static_cast<int>(r), static_cast<int>(c)) = m(rows[r], cols[c]);
    for (const auto& v : nullspace(sub)) {
      Vec full(m.cols());
      for (size_t c = 0; c < cols.size(); ++c) full[cols[c]] = v[c];
      out.push_back(std::move(full));
    }
  }
  return out;
}

Kernel kernel(const Module& m, const Module& n, const ModMap& f) {
  std::vector<Echelon> sub;
  for (int t = 0; t < static_cast<int>(m.deg.size()); ++t) {
    sub.emplace_back(m.dim(t));
    for (const auto& v : graded_kernel(f.blocks[t], m.deg[t], n.deg[t], f.degree)) sub.back().add(v);
  }
  return submodule(m, sub);
}

DirectSum direct_sum(const std::vector<const Module*>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum: no summands");
  DirectSum ds;
  const TensorAlgebra& alg = *parts[0]->alg;
  ds.module = Module::zero(alg);
  const int nk = alg.num_kappas();
  std::vector<std::vector<int>> offset(parts.size(), std::vector<int>(nk, 0));
  for (int t = 0; t < nk; ++t) {
    int off = 0;
    for (size_t p = 0; p < parts.size(); ++p) {
      offset[p][t] = off;
      off += parts[p]->dim(t);
      ds.module.deg[t].insert(ds.module.deg[t].end(), parts[p]->deg[t].begin(), parts[p]->deg[t].end());
    }
  }
  for (size_t g = 0; g < alg.generators().size(); ++g) {
    const Generator& gen = alg.generator(static_cast<int>(g));
    Matrix a(ds.module.dim(gen.target), ds.module.dim(gen.source));
    for (size_t p = 0; p < parts.size(); ++p) {
      const Matrix& b = parts[p]->act[g];
      for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c)
          if (!b(r, c).is_zero()) a(offset[p][gen.target] + r, offset[p][gen.source] + c) = b(r, c);
    }
    ds.module.act[g] = std::move(a);
  }
  for (size_t p = 0; p < parts.size(); ++p) {
    ModMap inj, proj;
    for (int t = 0; t < nk; ++t) {
      Matrix i(ds.module.dim(t), parts[p]->dim(t));
      for (int c = 0; c < parts[p]->dim(t); ++c) i(offset[p][t] + c, c) = Scalar(1);
      proj.blocks.push_back(i.transpose());
      inj.blocks.push_back(std::move(i));
    }
    ds.inj.push_back(std::move(inj));
    ds.proj.push_back(std::move(proj));
  }
  return ds;
}

ModuleContext::ModuleContext(const TensorAlgebra& alg) : alg_(&alg) {
  for (int t = 0; t < alg.num_kappas(); ++t)
    if (alg.kappa(t).basic() && !alg.ring(t).is_zero()) basic_.push_back(t);
  for (int a : basic_)
    for (int b : basic_)
      for (const auto& [d, n] : alg.block_graded_dim(a, b))
        if (d < 0 || (d == 0 && (a != b || n != 1))) positive_ = false;

  // Arrows: positive-degree basis elements of the basic algebra not in the
  // span of products of two positive-degree elements.
  auto flatten = [](const Matrix& m) {
    Vec v;
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
    return v;
  };
  for (int a : basic_)
    for (int c : basic_) {
      const Block& target = alg.block(a, c);
      if (target.dim() == 0) continue;
      const int size = alg.ring(a).dim() * alg.ring(c).dim();
      std::map<int, Echelon> span;
      for (int b : basic_) {
        const Block& left = alg.block(a, b);
        const Block& right = alg.block(b, c);
        for (const auto& x : left.elems) {
          if (x.degree <= 0) continue;
          for (const auto& y : right.elems) {
            if (y.degree <= 0) continue;
            auto [it, fresh] = span.try_emplace(x.degree + y.degree, size);
            it->second.add(flatten(x.mat * y.mat));
          }
        }
      }
      for (int i = 0; i < target.dim(); ++i) {
        const auto& z = target.elems[i];
        if (z.degree <= 0) continue;
        auto [it, fresh] = span.try_emplace(z.degree, size);
        if (it->second.add(flatten(z.mat))) arrows_.push_back(Arrow{a, c, i});
      }
    }
}

bool ModuleContext::is_basic(int t) const { return std::find(basic_.begin(), basic_.end(), t) != basic_.end(); }

const Module& ModuleContext::projective(int t) const {
  auto it = proj_.find(t);
  if (it != proj_.end()) return *it->second;
  const TensorAlgebra& alg = *alg_;
  auto m = std::make_unique<Module>(Module::zero(alg));
  for (int u = 0; u < alg.num_kappas(); ++u)
    for (const auto& el : alg.block(u, t).elems) m->deg[u].push_back(el.degree);
  for (size_t g = 0; g < alg.generators().size(); ++g) {
    const Generator& gen = alg.generator(static_cast<int>(g));
    const Block& src = alg.block(gen.source, t);
    Matrix a(m->dim(gen.target), m->dim(gen.source));
    for (int c = 0; c < src.dim(); ++c) {
      const auto& el = src.elems[c];
      auto coords = alg.express(gen.target, t, el.degree + gen.degree, gen.mat * el.mat);
      if (!coords) throw std::logic_error("projective: block basis not closed");
      for (int r = 0; r < a.rows(); ++r) a(r, c) = (*coords)[r];
    }
    m->act[g] = std::move(a);
  }
  return *proj_.emplace(t, std::move(m)).first->second;
}

ModMap ModuleContext::from_projective(int t, const Module& m, const Vec& v, int degree) const {
  const TensorAlgebra& alg = *alg_;
  (void)degree;  // the map has degree zero out of the shifted projective
  ModMap f;
  for (int u = 0; u < alg.num_kappas(); ++u) {
    const Block& b = alg.block(u, t);
    f.blocks.emplace_back(m.dim(u), b.dim());
  }
  // Images follow the breadth-first construction: element = gen * parent.
  std::vector<std::vector<Vec>> image(alg.num_kappas());
  for (int u = 0; u < alg.num_kappas(); ++u) image[u].resize(alg.block(u, t).dim());
  // Elements were discovered in BFS order, and every parent lies in the
  // block of its generator's source; resolve lazily by recursion.
  std::function<const Vec&(int, int)> img = [&](int u, int i) -> const Vec& {
    Vec& slot = image[u][i];
    if (!slot.empty() || m.dim(u) == 0) return slot;
    const auto& el = alg.block(u, t).elems[i];
    if (el.gen < 0) {
      slot = v;
    } else {
      const Generator& gen = alg.generator(el.gen);
      slot = m.act[el.gen].apply(img(gen.source, el.parent));
    }
    return slot;
  };
  for (int u = 0; u < alg.num_kappas(); ++u)
    for (int i = 0; i < alg.block(u, t).dim(); ++i) {
      const Vec& w = img(u, i);
      for (int r = 0; r < m.dim(u); ++r) f.blocks[u](r, i) = w[r];
    }
  return f;
}

Echelon ModuleContext::radical_block(const Module& m, int a) const {
  Echelon rad(m.dim(a));
  for (const auto& arrow : arrows_) {
    if (arrow.target != a || m.dim(arrow.source) == 0) continue;
    const auto& x = alg_->block(arrow.target, arrow.source).elems[arrow.index];
    const Matrix img = m.word_action(x.word, arrow.source);
    for (int c = 0; c < img.cols(); ++c) rad.add(img.column(c));
    if (rad.rank() == m.dim(a)) break;
  }
  return rad;
}

std::vector<ModuleContext::TopGenerator> ModuleContext::top(const Module& m) const {
  std::vector<TopGenerator> out;
  for (int a : basic_) {
    if (m.dim(a) == 0) continue;
    Echelon rad = radical_block(m, a);
    std::vector<bool> pivot(m.dim(a), false);
    for (int p : rad.pivots()) pivot[p] = true;
    for (int i = 0; i < m.dim(a); ++i) {
      if (pivot[i]) continue;
      Vec e(m.dim(a));
      e[i] = Scalar(1);
      out.push_back(TopGenerator{a, m.deg[a][i], std::move(e)});
    }
  }
  return out;
}

Module ModuleContext::simple(int t) const {
  const TensorAlgebra& alg = *alg_;
  const Module& p = projective(t);
  // x lies in the radical iff no y in e_t T brings it back to e_t.
  std::vector<Echelon> rad;
  for (int u = 0; u < alg.num_kappas(); ++u) {
    rad.emplace_back(p.dim(u));
    const Block& back = alg.block(t, u);
    for (int d : std::set<int>(p.deg[u].begin(), p.deg[u].end())) {
      std::vector<int> cols;
      for (int i = 0; i < p.dim(u); ++i)
        if (p.deg[u][i] == d) cols.push_back(i);
      std::vector<const BasisElement*> ys;
      for (const auto& y : back.elems)
        if (y.degree == -d) ys.push_back(&y);
      Matrix pairing(static_cast<int>(ys.size()), static_cast<int>(cols.size()));
      for (size_t r = 0; r < ys.size(); ++r) {
        const Matrix w = p.word_action(ys[r]->word, u);
        for (size_t c = 0; c < cols.size(); ++c) pairing(static_cast<int>(r), static_cast<int>(c)) = w(0, cols[c]);
      }
      for (const auto& v : nullspace(pairing)) {
        Vec full(p.dim(u));
        for (size_t c = 0; c < cols.size(); ++c) full[cols[c]] = v[c];
        rad.back().add(full);
      }
    }
  }
  return quotient(p, rad).module;
}

std::map<std::pair<int, int>, int> ModuleContext::top_profile(const Module& m) const {
  std::map<std::pair<int, int>, int> out;
  for (const auto& g : top(m)) ++out[{g.alpha, g.degree}];
  return out;
}

}  // namespace kht
