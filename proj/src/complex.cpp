#include "khtensor/complex.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace kht {

Vec HomSpaces::multiply(int a, int b, int c, const Vec& x, int dx, const Vec& y, int dy) const {
  return ctx_->multiply(ctx_->type(a).kappa, ctx_->type(b).kappa, ctx_->type(c).kappa, x, dx, y, dy);
}

Vec HomSpaces::unit(int a) const { return ctx_->type(a).idem; }

std::optional<Vec> HomSpaces::inverse(int a, const Vec& x) const {
  const auto& ty = ctx_->type(a);
  const int k = ty.kappa;
  const Block& blk = ctx_->algebra().block(k, k);
  auto it = blk.members.find(0);
  if (it == blk.members.end()) return std::nullopt;
  const auto& zero = it->second;
  for (int i = 0; i < blk.dim(); ++i)
    if (!x[i].is_zero() && blk.elems[i].degree != 0) return std::nullopt;
  if (ty.whole && zero.size() == 1) {
    if (x[0].is_zero()) return std::nullopt;
    Vec inv(blk.dim());
    inv[0] = x[0].inverse();
    return inv;
  }
  // Solve x z = eps over the degree zero part, then confirm z x = eps.
  Matrix sys(static_cast<int>(zero.size()), static_cast<int>(zero.size()));
  for (size_t j = 0; j < zero.size(); ++j) {
    Vec z(blk.dim());
    z[zero[j]] = Scalar(1);
    const Vec p = ctx_->multiply(k, k, k, x, 0, z, 0);
    for (size_t r = 0; r < zero.size(); ++r) sys(static_cast<int>(r), static_cast<int>(j)) = p[zero[r]];
  }
  Vec rhs(zero.size());
  for (size_t r = 0; r < zero.size(); ++r) rhs[r] = ty.idem[zero[r]];
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  Vec z(blk.dim());
  for (size_t j = 0; j < zero.size(); ++j) z[zero[j]] = (*sol)[j];
  z = ctx_->multiply(k, k, k, ty.idem, 0, ctx_->multiply(k, k, k, z, 0, ty.idem, 0), 0);
  if (ctx_->multiply(k, k, k, z, 0, x, 0) != ty.idem) return std::nullopt;
  return z;
}

const std::vector<Summand>& ProjComplex::at(int n) const {
  static const std::vector<Summand> none;
  if (n < lo || n > hi()) return none;
  return terms[n - lo];
}

int ProjComplex::size() const {
  int s = 0;
  for (const auto& t : terms) s += static_cast<int>(t.size());
  return s;
}

int ProjComplex::entry_degree(int i, int row, int col) const {
  return terms[i][col].shift - terms[i + 1][row].shift;
}

ProjComplex ProjComplex::shifted(int h, int q) const {
  ProjComplex c = *this;
  c.lo -= h;
  for (auto& t : c.terms)
    for (auto& s : t) s.shift += q;
  // [h] with h odd flips the differential.
  if (h % 2 != 0)
    for (auto& d : c.diff)
      for (auto& [key, x] : d)
        for (auto& v : x) v = -v;
  return c;
}

void ProjComplex::trim() {
  while (!terms.empty() && terms.back().empty()) {
    terms.pop_back();
    if (!diff.empty()) diff.pop_back();
  }
  while (!terms.empty() && terms.front().empty()) {
    terms.erase(terms.begin());
    if (!diff.empty()) diff.erase(diff.begin());
    ++lo;
  }
  diff.resize(terms.empty() ? 0 : terms.size() - 1);
}

std::map<Summand, int> euler_class(const ProjComplex& c) {
  std::map<Summand, int> out;
  for (size_t i = 0; i < c.terms.size(); ++i) {
    const int sign = (c.lo + static_cast<int>(i)) % 2 == 0 ? 1 : -1;
    for (const auto& s : c.terms[i]) out[s] += sign;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

bool is_complex(const HomSpaces& hom, const ProjComplex& c) {
  for (size_t i = 0; i + 1 < c.diff.size(); ++i) {
    std::map<std::pair<int, int>, Vec> sq;
    for (const auto& [k1, x] : c.diff[i])
      for (const auto& [k2, y] : c.diff[i + 1]) {
        if (k2.second != k1.first) continue;
        const int a = c.terms[i][k1.second].alpha;
        const int b = c.terms[i + 1][k1.first].alpha;
        const int z = c.terms[i + 2][k2.first].alpha;
        const Vec p = hom.multiply(a, b, z, x, c.entry_degree(static_cast<int>(i), k1.first, k1.second), y,
                                   c.entry_degree(static_cast<int>(i) + 1, k2.first, k2.second));
        auto [it, fresh] = sq.try_emplace({k2.first, k1.second}, p.size());
        axpy(it->second, Scalar(1), p);
      }
    for (const auto& [key, v] : sq)
      if (!is_zero(v)) return false;
  }
  return true;
}

bool is_complex(const ModComplex& c) {
  for (size_t i = 0; i + 1 < c.diff.size(); ++i)
    if (!(c.diff[i + 1] * c.diff[i]).is_zero()) return false;
  return true;
}

Module projective_sum(const ModuleContext& ctx, const std::vector<Summand>& sums) {
  if (sums.empty()) return Module::zero(ctx.algebra());
  std::vector<Module> parts;
  parts.reserve(sums.size());
  for (const auto& s : sums) parts.push_back(ctx.type_module(s.alpha).module.shifted(s.shift));
  std::vector<const Module*> ptrs;
  for (const auto& p : parts) ptrs.push_back(&p);
  return direct_sum(ptrs).module;
}

namespace {

// offsets[i][u]: first index of summand i inside e_u of the sum.
std::vector<std::vector<int>> summand_offsets(const ModuleContext& ctx, const std::vector<Summand>& sums) {
  const int nk = ctx.algebra().num_kappas();
  std::vector<std::vector<int>> off(sums.size(), std::vector<int>(nk, 0));
  std::vector<int> run(nk, 0);
  for (size_t i = 0; i < sums.size(); ++i)
    for (int u = 0; u < nk; ++u) {
      off[i][u] = run[u];
      run[u] += ctx.type_module(sums[i].alpha).module.dim(u);
    }
  return off;
}

std::vector<int> block_totals(const ModuleContext& ctx, const std::vector<Summand>& sums) {
  const int nk = ctx.algebra().num_kappas();
  std::vector<int> tot(nk, 0);
  for (const auto& s : sums)
    for (int u = 0; u < nk; ++u) tot[u] += ctx.type_module(s.alpha).module.dim(u);
  return tot;
}

}  // namespace

ModMap projective_map(const ModuleContext& ctx, const std::vector<Summand>& src, const std::vector<Summand>& tgt,
                      const Entries& entries) {
  const TensorAlgebra& alg = ctx.algebra();
  const auto so = summand_offsets(ctx, src), to = summand_offsets(ctx, tgt);
  const auto st = block_totals(ctx, src), tt = block_totals(ctx, tgt);
  ModMap f;
  for (int u = 0; u < alg.num_kappas(); ++u) f.blocks.emplace_back(tt[u], st[u]);
  for (const auto& [key, x] : entries) {
    const auto [row, col] = key;
    const Retract& target = ctx.type_module(tgt[row].alpha);
    const ModMap piece = target.retr * ctx.type_map(src[col].alpha, ctx.projective(ctx.type(tgt[row].alpha).kappa), x);
    for (int u = 0; u < alg.num_kappas(); ++u) {
      const Matrix& b = piece.blocks[u];
      for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c)
          if (!b(r, c).is_zero()) f.blocks[u](to[row][u] + r, so[col][u] + c) += b(r, c);
    }
  }
  return f;
}

ModComplex to_modules(const ModuleContext& ctx, const ProjComplex& c) {
  ModComplex m;
  m.alg = &ctx.algebra();
  m.lo = c.lo;
  for (const auto& t : c.terms) m.terms.push_back(projective_sum(ctx, t));
  for (size_t i = 0; i < c.diff.size(); ++i) m.diff.push_back(projective_map(ctx, c.terms[i], c.terms[i + 1], c.diff[i]));
  return m;
}

namespace {

// Rank of the part of m sending source degree d to target degree d + delta.
std::map<int, int> ranks_by_degree(const Matrix& m, const std::vector<int>& col_deg, const std::vector<int>& row_deg,
                                   int delta) {
  std::map<int, std::vector<int>> cols, rows;
  for (int c = 0; c < m.cols(); ++c) cols[col_deg[c]].push_back(c);
  for (int r = 0; r < m.rows(); ++r) rows[row_deg[r]].push_back(r);
  std::map<int, int> out;
  for (const auto& [d, cs] : cols) {
    auto it = rows.find(d + delta);
    if (it == rows.end()) continue;
    Matrix sub(static_cast<int>(it->second.size()), static_cast<int>(cs.size()));
    for (size_t r = 0; r < it->second.size(); ++r)
      for (size_t c = 0; c < cs.size(); ++c) sub(static_cast<int>(r), static_cast<int>(c)) = m(it->second[r], cs[c]);
    if (int rk = rank(sub); rk > 0) out[d] = rk;
  }
  return out;
}

}  // namespace

std::map<std::pair<int, int>, int> homology(const ModComplex& c) {
  std::map<std::pair<int, int>, int> out;
  const int nk = c.alg->num_kappas();
  for (size_t i = 0; i < c.terms.size(); ++i) {
    const int n = c.lo + static_cast<int>(i);
    for (int u = 0; u < nk; ++u) {
      std::map<int, int> dims = c.terms[i].graded_dim(u);
      if (i < c.diff.size()) {
        const ModMap& d = c.diff[i];
        for (const auto& [deg, r] : ranks_by_degree(d.blocks[u], c.terms[i].deg[u], c.terms[i + 1].deg[u], d.degree))
          dims[deg] -= r;
      }
      if (i > 0) {
        const ModMap& d = c.diff[i - 1];
        for (const auto& [deg, r] : ranks_by_degree(d.blocks[u], c.terms[i - 1].deg[u], c.terms[i].deg[u], d.degree))
          dims[deg + d.degree] -= r;
      }
      for (const auto& [deg, v] : dims)
        if (v != 0) out[{n, deg}] += v;
    }
  }
  return out;
}

ModComplex cone(const ModComplex& a, const ModComplex& b, const std::vector<ModMap>& f) {
  if (a.lo != b.lo || a.terms.size() != b.terms.size() || f.size() != a.terms.size())
    throw std::invalid_argument("cone: complexes do not match");
  const int len = static_cast<int>(a.terms.size());
  ModComplex c;
  c.alg = a.alg;
  c.lo = a.lo - 1;
  std::vector<DirectSum> sums;
  // Term j holds a.terms[j] (slot 0) and b.terms[j - 1] (slot 1).
  for (int j = 0; j <= len; ++j) {
    const Module& pa = j < len ? a.terms[j] : Module::zero(*a.alg);
    const Module& pb = j >= 1 ? b.terms[j - 1] : Module::zero(*a.alg);
    sums.push_back(direct_sum({&pa, &pb}));
    c.terms.push_back(sums.back().module);
  }
  for (int j = 0; j < len; ++j) {
    ModMap d = ModMap::zero(c.terms[j], c.terms[j + 1]);
    if (j + 1 < len) d -= sums[j + 1].inj[0] * a.diff[j] * sums[j].proj[0];
    d += sums[j + 1].inj[1] * f[j] * sums[j].proj[0];
    if (j >= 1) d += sums[j + 1].inj[1] * b.diff[j - 1] * sums[j].proj[1];
    c.diff.push_back(std::move(d));
  }
  return c;
}

Module dual(const Module& m) {
  Module d = Module::zero(*m.alg);
  for (size_t t = 0; t < m.deg.size(); ++t)
    for (int x : m.deg[t]) d.deg[t].push_back(-x);
  for (size_t g = 0; g < m.act.size(); ++g) d.act[g] = m.act[m.alg->generator(static_cast<int>(g)).star].transpose();
  return d;
}

ModComplex dual(const ModComplex& c) {
  ModComplex d;
  d.alg = c.alg;
  d.lo = -c.hi();
  for (auto it = c.terms.rbegin(); it != c.terms.rend(); ++it) d.terms.push_back(dual(*it));
  for (auto it = c.diff.rbegin(); it != c.diff.rend(); ++it) {
    ModMap t;
    t.degree = it->degree;
    for (const auto& b : it->blocks) t.blocks.push_back(b.transpose());
    d.diff.push_back(std::move(t));
  }
  return d;
}

namespace {

// Adds v to span[t] and closes the span under the action.
void close_with(const Module& m, std::vector<Echelon>& span, int t, const Vec& v) {
  if (!span[t].add(v)) return;
  std::deque<std::pair<int, Vec>> queue;
  queue.emplace_back(t, v);
  const TensorAlgebra& alg = *m.alg;
  while (!queue.empty()) {
    auto [s, w] = std::move(queue.front());
    queue.pop_front();
    for (int g : alg.generators_from(s)) {
      const int tgt = alg.generator(g).target;
      if (m.dim(tgt) == 0) continue;
      Vec x = m.act[g].apply(w);
      if (span[tgt].add(x)) queue.emplace_back(tgt, std::move(x));
    }
  }
}

}  // namespace

std::vector<ModuleContext::TopGenerator> generators(const ModuleContext& ctx, const Module& m,
                                                    std::vector<Echelon> base, const std::vector<bool>* allowed) {
  struct Candidate {
    int degree, piece, index;
  };
  const auto& pieces = ctx.pieces();
  std::vector<Matrix> proj, to;
  std::vector<Candidate> cand;
  for (size_t p = 0; p < pieces.size(); ++p) {
    const auto& pc = pieces[p];
    const int target = ctx.type(pc.type).kappa;
    if (allowed && !(*allowed)[pc.kappa]) {
      proj.emplace_back();
      to.emplace_back();
      continue;
    }
    proj.push_back(element_action(m, pc.kappa, pc.kappa, pc.idem));
    to.push_back(element_action(m, target, pc.kappa, pc.to_type));
    for (int i = 0; i < m.dim(pc.kappa); ++i) cand.push_back({m.deg[pc.kappa][i], static_cast<int>(p), i});
  }
  std::stable_sort(cand.begin(), cand.end(), [](const Candidate& a, const Candidate& b) { return a.degree < b.degree; });
  std::vector<ModuleContext::TopGenerator> out;
  for (const auto& c : cand) {
    const auto& pc = pieces[c.piece];
    if (base[pc.kappa].rank() == m.dim(pc.kappa)) continue;
    const Vec w = proj[c.piece].column(c.index);
    if (is_zero(w) || base[pc.kappa].contains(w)) continue;
    const int target = ctx.type(pc.type).kappa;
    Vec g = to[c.piece].apply(w);
    close_with(m, base, target, g);
    if (!base[pc.kappa].contains(w)) throw std::logic_error("generators: piece does not return to its type");
    out.push_back({pc.type, c.degree + pc.degree, std::move(g)});
  }
  return out;
}

namespace {

// Stacks blocks of a 2x2 block module map between direct sums.
ModMap block_map(const std::vector<std::vector<const ModMap*>>& parts, const std::vector<const Module*>& src,
                 const std::vector<const Module*>& tgt, int nk) {
  ModMap f;
  for (int u = 0; u < nk; ++u) {
    int rows = 0, cols = 0;
    for (const auto* m : tgt) rows += m->dim(u);
    for (const auto* m : src) cols += m->dim(u);
    Matrix b(rows, cols);
    int r0 = 0;
    for (size_t i = 0; i < tgt.size(); ++i) {
      int c0 = 0;
      for (size_t j = 0; j < src.size(); ++j) {
        if (const ModMap* p = parts[i][j]) {
          const Matrix& blk = p->blocks[u];
          for (int r = 0; r < blk.rows(); ++r)
            for (int c = 0; c < blk.cols(); ++c)
              if (!blk(r, c).is_zero()) b(r0 + r, c0 + c) = blk(r, c);
        }
        c0 += src[j]->dim(u);
      }
      r0 += tgt[i]->dim(u);
    }
    f.blocks.push_back(std::move(b));
  }
  return f;
}

}  // namespace

ProjComplex resolve(const ModuleContext& ctx, const ModComplex& c, int max_length) {
  ResolveOptions opt;
  opt.max_length = max_length;
  return resolve(ctx, c, opt);
}

ProjComplex resolve(const ModuleContext& ctx, const ModComplex& c, const ResolveOptions& opt) {
  const int max_length = opt.max_length;
  const std::vector<bool>* allowed = opt.allowed.empty() ? nullptr : &opt.allowed;
  const TensorAlgebra& alg = ctx.algebra();
  const int nk = alg.num_kappas();
  const Module zero = Module::zero(alg);
  auto term = [&](int n) -> const Module& { return n < c.lo || n > c.hi() ? zero : c.terms[n - c.lo]; };
  auto dm = [&](int n) -> ModMap {
    if (n < c.lo || n >= c.hi()) return ModMap::zero(term(n), term(n + 1));
    return c.diff[n - c.lo];
  };

  struct Level {
    std::vector<Summand> sums;
    Module mod;
    ModMap f;        // to the module complex
    ModMap d;        // to the level above
    Entries entries;  // same differential as element matrix
  };
  std::map<int, Level> levels;
  auto level_mod = [&](int n) -> const Module& {
    auto it = levels.find(n);
    return it == levels.end() ? zero : it->second.mod;
  };

  for (int n = c.hi();; --n) {
    if (n < c.lo - max_length) {
      if (opt.truncate) break;
      throw std::runtime_error("resolve: resolution does not terminate");
    }
    const Module& p1 = level_mod(n + 1);
    const Module& p2 = level_mod(n + 2);
    const Module& mn = term(n);
    const Module& mn1 = term(n + 1);
    if (n < c.lo && p1.dim() == 0) break;
    const ModMap zero_f1 = ModMap::zero(p1, mn1), zero_d1 = ModMap::zero(p1, p2);
    const ModMap& f1 = levels.count(n + 1) ? levels[n + 1].f : zero_f1;
    const ModMap d1 = (levels.count(n + 1) ? levels[n + 1].d : zero_d1).scaled(Scalar(-1));
    const ModMap dmn = dm(n);
    // Cone^n = P^{n+1} + M^n -> P^{n+2} + M^{n+1}
    auto cone_n = direct_sum({&p1, &mn});
    auto cone_n1 = direct_sum({&p2, &mn1});
    ModMap big = block_map({{&d1, nullptr}, {&f1, &dmn}}, {&p1, &mn}, {&p2, &mn1}, nk);
    big.degree = 0;
    Kernel z = kernel(cone_n.module, cone_n1.module, big);
    // Boundaries (0, d c) expressed in the basis of Z.
    std::vector<Echelon> zbasis, base;
    for (int u = 0; u < nk; ++u) {
      zbasis.emplace_back(cone_n.module.dim(u));
      for (int j = 0; j < z.module.dim(u); ++j) zbasis[u].add(z.inclusion.blocks[u].column(j));
      base.emplace_back(z.module.dim(u));
    }
    if (n - 1 >= c.lo) {
      const Module& mprev = term(n - 1);
      const ModMap dprev = dm(n - 1);
      for (int u = 0; u < nk; ++u)
        for (int j = 0; j < mprev.dim(u); ++j) {
          Vec v(cone_n.module.dim(u));
          const Vec w = dprev.blocks[u].column(j);
          for (int r = 0; r < mn.dim(u); ++r) v[p1.dim(u) + r] = w[r];
          auto coords = zbasis[u].coordinates(v);
          if (!coords) throw std::logic_error("resolve: boundary outside the cycles");
          base[u].add(*coords);
        }
    }
    auto gens = generators(ctx, z.module, base, allowed);
    if (gens.empty() && n < c.lo) break;
    Level lev;
    const auto p1_off = summand_offsets(ctx, levels.count(n + 1) ? levels[n + 1].sums : std::vector<Summand>{});
    const auto& p1_sums = levels.count(n + 1) ? levels[n + 1].sums : std::vector<Summand>{};
    std::vector<ModMap> f_cols;
    for (size_t j = 0; j < gens.size(); ++j) {
      const auto& g = gens[j];
      lev.sums.push_back({g.alpha, g.degree});
      const int k = ctx.type(g.alpha).kappa;
      const Vec full = z.inclusion.blocks[k].apply(g.vec);
      for (size_t i = 0; i < p1_sums.size(); ++i) {
        const Matrix& incl = ctx.type_module(p1_sums[i].alpha).incl.blocks[k];
        Vec coords(incl.cols());
        bool nz = false;
        for (int r = 0; r < incl.cols(); ++r) {
          coords[r] = -full[p1_off[i][k] + r];
          nz = nz || !coords[r].is_zero();
        }
        if (nz) lev.entries.emplace(std::make_pair(static_cast<int>(i), static_cast<int>(j)), incl.apply(coords));
      }
      Vec cpart(mn.dim(k));
      for (int r = 0; r < mn.dim(k); ++r) cpart[r] = full[p1.dim(k) + r];
      f_cols.push_back(ctx.type_map(g.alpha, mn, cpart));
    }
    lev.mod = projective_sum(ctx, lev.sums);
    // Assemble f^n column by column.
    const auto off = summand_offsets(ctx, lev.sums);
    lev.f = ModMap::zero(lev.mod, mn);
    for (size_t j = 0; j < f_cols.size(); ++j)
      for (int u = 0; u < nk; ++u) {
        const Matrix& b = f_cols[j].blocks[u];
        for (int r = 0; r < b.rows(); ++r)
          for (int cc = 0; cc < b.cols(); ++cc) lev.f.blocks[u](r, off[j][u] + cc) = b(r, cc);
      }
    lev.d = projective_map(ctx, lev.sums, p1_sums, lev.entries);
    levels[n] = std::move(lev);
  }

  ProjComplex out;
  out.alg = &alg;
  if (levels.empty()) return out;
  out.lo = levels.begin()->first;
  const int top = levels.rbegin()->first;
  for (int n = out.lo; n <= top; ++n) {
    auto it = levels.find(n);
    out.terms.push_back(it == levels.end() ? std::vector<Summand>{} : it->second.sums);
  }
  for (int n = out.lo; n < top; ++n) {
    auto it = levels.find(n);
    out.diff.push_back(it == levels.end() ? Entries{} : it->second.entries);
  }
  out.trim();
  return out;
}

ProjComplex resolve(const ModuleContext& ctx, const Module& m, int max_length) {
  ModComplex c;
  c.alg = &ctx.algebra();
  c.lo = 0;
  c.terms.push_back(m);
  return resolve(ctx, c, max_length);
}

namespace {

bool cancellable(const HomSpaces& hom, const ProjComplex& c, int i, int row, int col, const Vec& x, Vec* inv) {
  const Summand& s = c.terms[i][col];
  if (!(s == c.terms[i + 1][row])) return false;
  auto z = hom.inverse(s.alpha, x);
  if (!z) return false;
  if (inv) *inv = std::move(*z);
  return true;
}

}  // namespace

int removable_entries(const HomSpaces& hom, const ProjComplex& c) {
  int count = 0;
  for (size_t i = 0; i < c.diff.size(); ++i)
    for (const auto& [key, x] : c.diff[i])
      if (cancellable(hom, c, static_cast<int>(i), key.first, key.second, x, nullptr)) ++count;
  return count;
}

ProjComplex gaussian_eliminate(const HomSpaces& hom, const ProjComplex& in) {
  ProjComplex c = in;
  std::vector<std::vector<bool>> alive;
  for (const auto& t : c.terms) alive.emplace_back(t.size(), true);
  for (size_t i = 0; i < c.diff.size(); ++i) {
    bool again = true;
    while (again) {
      again = false;
      for (const auto& [key, x] : c.diff[i]) {
        Vec inv;
        if (!cancellable(hom, c, static_cast<int>(i), key.first, key.second, x, &inv)) continue;
        const int b = key.second, c1 = key.first;
        const int a = c.terms[i][b].alpha;
        Entries& d = c.diff[i];
        std::vector<std::pair<int, Vec>> delta, gamma;  // delta: columns into c1; gamma: rows out of b
        for (const auto& [k, v] : d) {
          if (k.first == c1 && k.second != b) delta.emplace_back(k.second, v);
          if (k.second == b && k.first != c1) gamma.emplace_back(k.first, v);
        }
        for (const auto& [col, xv] : delta) {
          const int dx = c.entry_degree(static_cast<int>(i), c1, col);
          const int ac = c.terms[i][col].alpha;
          const Vec xi = hom.multiply(ac, a, a, xv, dx, inv, 0);
          for (const auto& [row, yv] : gamma) {
            const int dy = c.entry_degree(static_cast<int>(i), row, b);
            const int ar = c.terms[i + 1][row].alpha;
            const Vec p = hom.multiply(ac, a, ar, xi, dx, yv, dy);
            auto [it, fresh] = d.try_emplace({row, col}, p.size());
            axpy(it->second, Scalar(-1), p);
            if (is_zero(it->second)) d.erase(it);
          }
        }
        for (auto it = d.begin(); it != d.end();)
          it = (it->first.first == c1 || it->first.second == b) ? d.erase(it) : std::next(it);
        if (i > 0)
          for (auto it = c.diff[i - 1].begin(); it != c.diff[i - 1].end();)
            it = it->first.first == b ? c.diff[i - 1].erase(it) : std::next(it);
        if (i + 1 < c.diff.size())
          for (auto it = c.diff[i + 1].begin(); it != c.diff[i + 1].end();)
            it = it->first.second == c1 ? c.diff[i + 1].erase(it) : std::next(it);
        alive[i][b] = false;
        alive[i + 1][c1] = false;
        again = true;
        break;
      }
    }
  }
  // Compact the surviving summands.
  std::vector<std::vector<int>> index(c.terms.size());
  ProjComplex out;
  out.alg = c.alg;
  out.lo = c.lo;
  for (size_t n = 0; n < c.terms.size(); ++n) {
    index[n].assign(c.terms[n].size(), -1);
    std::vector<Summand> t;
    for (size_t j = 0; j < c.terms[n].size(); ++j)
      if (alive[n][j]) {
        index[n][j] = static_cast<int>(t.size());
        t.push_back(c.terms[n][j]);
      }
    out.terms.push_back(std::move(t));
  }
  for (size_t n = 0; n < c.diff.size(); ++n) {
    Entries e;
    for (const auto& [k, v] : c.diff[n]) {
      const int r = index[n + 1][k.first], col = index[n][k.second];
      if (r >= 0 && col >= 0) e.emplace(std::make_pair(r, col), v);
    }
    out.diff.push_back(std::move(e));
  }
  out.trim();
  return out;
}

}  // namespace kht

namespace kht {

Matrix element_action(const Module& m, int a, int b, const Vec& x) {
  const Block& blk = m.alg->block(a, b);
  Matrix out(m.dim(a), m.dim(b));
  for (int k = 0; k < blk.dim(); ++k)
    if (!x[k].is_zero()) out += m.word_action(blk.elems[k].word, b).scaled(x[k]);
  return out;
}

std::map<std::pair<int, int>, int> ext_bigraded(const ModuleContext& ctx, const Module& l, const Module& m) {
  const HomSpaces hom(ctx);
  const ProjComplex res = gaussian_eliminate(hom, resolve(ctx, l));
  // Hom(T eps_a, m) = eps_a m, split off the block by eps_a.
  struct Part {
    Matrix incl, retr;
    std::vector<int> deg;
  };
  std::map<int, Part> parts;
  auto part = [&](int a) -> const Part& {
    auto it = parts.find(a);
    if (it != parts.end()) return it->second;
    const int k = ctx.type(a).kappa;
    const Matrix e = element_action(m, k, k, ctx.type(a).idem);
    Echelon ech(e.rows(), true);
    std::vector<int> kept;
    for (int c = 0; c < e.cols(); ++c)
      if (ech.add(e.column(c))) kept.push_back(c);
    Part p{Matrix(e.rows(), static_cast<int>(kept.size())), Matrix(static_cast<int>(kept.size()), e.cols()), {}};
    for (size_t j = 0; j < kept.size(); ++j) {
      for (int i = 0; i < e.rows(); ++i) p.incl(i, static_cast<int>(j)) = e(i, kept[j]);
      p.deg.push_back(m.deg[k][kept[j]]);
    }
    for (int c = 0; c < e.cols(); ++c) {
      auto x = ech.express(e.column(c));
      for (size_t j = 0; j < kept.size(); ++j) p.retr(static_cast<int>(j), c) = (*x)[j];
    }
    return parts.emplace(a, std::move(p)).first->second;
  };
  // Hom(P^{-n}, m) sits in cohomological degree n.
  auto hom_term = [&](int n, std::vector<int>& degs, std::vector<int>& offs) {
    const auto& sums = res.at(-n);
    for (const auto& s : sums) {
      offs.push_back(static_cast<int>(degs.size()));
      for (int d : part(s.alpha).deg) degs.push_back(d - s.shift);
    }
  };
  std::map<std::pair<int, int>, int> out;
  const int top = -res.lo;
  std::vector<std::vector<int>> degs(top + 2), offs(top + 2);
  for (int n = 0; n <= top + 1; ++n) hom_term(n, degs[n], offs[n]);
  std::vector<Matrix> d(top + 1);
  for (int n = 0; n <= top; ++n) {
    d[n] = Matrix(static_cast<int>(degs[n + 1].size()), static_cast<int>(degs[n].size()));
    if (res.at(-n - 1).empty()) continue;
    const Entries& e = res.diff[-n - 1 - res.lo];
    const auto& src = res.at(-n - 1);
    const auto& tgt = res.at(-n);
    for (const auto& [key, x] : e) {
      const auto [row, col] = key;  // P^{-n-1}[col] -> P^{-n}[row]
      const Matrix a = part(src[col].alpha).retr *
                       element_action(m, ctx.type(src[col].alpha).kappa, ctx.type(tgt[row].alpha).kappa, x) *
                       part(tgt[row].alpha).incl;
      for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
          if (!a(r, c).is_zero()) d[n](offs[n + 1][col] + r, offs[n][row] + c) = a(r, c);
    }
  }
  for (int n = 0; n <= top; ++n) {
    std::map<int, int> dims;
    for (int x : degs[n]) ++dims[x];
    for (const auto& [deg, r] : ranks_by_degree(d[n], degs[n], degs[n + 1], 0)) dims[deg] -= r;
    if (n > 0)
      for (const auto& [deg, r] : ranks_by_degree(d[n - 1], degs[n - 1], degs[n], 0)) dims[deg] -= r;
    for (const auto& [deg, v] : dims)
      if (v != 0) out[{n, deg}] = v;
  }
  return out;
}

}  // namespace kht
