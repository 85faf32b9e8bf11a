#include "khtensor/cupcap.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace kht {

namespace {

int value_at(const Kappa& k, int h) { return h == 0 ? 0 : k(h); }

struct Step {
  GenKind kind;
  int strand;
};

// Generator word (top first) for a path of steps listed bottom first.
std::optional<std::pair<std::vector<int>, int>> lift(const TensorAlgebra& alg, int start, const std::vector<Step>& steps) {
  std::vector<int> word;
  int cur = start;
  for (const auto& st : steps) {
    auto g = alg.find_generator(st.kind, st.strand, cur);
    if (!g) return std::nullopt;
    word.insert(word.begin(), *g);
    cur = alg.generator(*g).target;
  }
  return std::pair{word, cur};
}

// Steps realizing the image of a small generator under the cup, with sign.
std::pair<std::vector<Step>, int> cup_image(const Generator& gen, const Kappa& src, int i) {
  const int b = value_at(src, i) + 1;  // the cup's black strand
  const int j = gen.i;
  auto shift = [&](int s) { return s < b ? s : s + 1; };
  switch (gen.kind) {
    case GenKind::Y:
    case GenKind::Psi:
      return {{{gen.kind, shift(j)}}, 1};
    case GenKind::IotaPlus: {
      int h = 0;
      for (int p = src.l; p >= 1; --p)
        if (src(p) == j - 1) {
          h = p;
          break;
        }
      if (h == i)  // the first black of gap i leaves over both legs and red i
        return {{{GenKind::IotaPlus, b + 1}, {GenKind::Psi, b}, {GenKind::IotaPlus, b}, {GenKind::IotaPlus, b}}, -1};
      return {{{GenKind::IotaPlus, shift(j)}}, 1};
    }
    case GenKind::IotaMinus: {
      int h = 0;
      for (int p = 1; p <= src.l; ++p)
        if (src(p) == j) {
          h = p;
          break;
        }
      if (h == i)  // the last black of gap i-1 enters gap i and passes the cup
        return {{{GenKind::IotaMinus, j}, {GenKind::IotaMinus, j}, {GenKind::Psi, j}, {GenKind::IotaMinus, j + 1}}, 1};
      return {{{GenKind::IotaMinus, shift(j)}}, 1};
    }
  }
  throw std::logic_error("cup_image: unknown generator");
}

}  // namespace

Kappa insert_cup(const Kappa& kappa, int i) {
  Kappa r{kappa.l + 2, kappa.k + 1, {}};
  for (int h = 1; h <= kappa.l + 2; ++h) {
    if (h <= i)
      r.v.push_back(kappa(h));
    else if (h == i + 1)
      r.v.push_back(value_at(kappa, i));
    else if (h == i + 2)
      r.v.push_back(value_at(kappa, i) + 1);
    else
      r.v.push_back(kappa(h - 2) + 1);
  }
  return r;
}

std::optional<Kappa> remove_cup(const Kappa& kappa, int i) {
  if (kappa.l < i + 2) return std::nullopt;
  if (kappa(i + 1) != value_at(kappa, i) || kappa(i + 2) != kappa(i + 1) + 1) return std::nullopt;
  Kappa r{kappa.l - 2, kappa.k - 1, {}};
  for (int h = 1; h <= r.l; ++h) r.v.push_back(h <= i ? kappa(h) : kappa(h + 2) - 1);
  return r;
}

CupBimodule cup_bimodule(const ModuleContext& big, const TensorAlgebra& small, int i) {
  const TensorAlgebra& alg = big.algebra();
  if (alg.l() != small.l() + 2 || alg.k() != small.k() + 1 || i < 0 || i > small.l())
    throw std::invalid_argument("cup_bimodule: incompatible algebras");
  const int nb = alg.num_kappas(), ns = small.num_kappas();
  CupBimodule out;
  Bimodule& k = out.bimodule;
  k.left = &alg;
  k.right = &small;
  std::vector<Quotient> quo(ns);
  std::vector<std::vector<Echelon>> rel(ns);
  out.image.assign(ns, -1);
  out.generator.assign(ns, Vec());
  for (int r = 0; r < ns; ++r) {
    if (small.ring(r).dim() == 0) {
      k.cols.push_back(Module::zero(alg));
      continue;
    }
    const Kappa kp = small.kappa(r);
    const int idx = alg.kappa_index(insert_cup(kp, i));
    out.image[r] = idx;
    const int b = value_at(kp, i) + 1;
    std::vector<std::vector<Vec>> seeds(nb);
    for (GenKind kind : {GenKind::Y, GenKind::IotaPlus, GenKind::IotaMinus}) {
      auto g = alg.find_generator(kind, b, idx);
      if (!g) continue;
      const Generator& gen = alg.generator(*g);
      auto c = alg.express(gen.target, idx, gen.degree, gen.mat);
      if (c) seeds[gen.target].push_back(*c);
    }
    const Module& p = big.projective(idx);
    rel[r] = generate_submodule(p, seeds);
    quo[r] = quotient(p, rel[r]);
    out.generator[r] = quo[r].projection.blocks[idx].column(0);
    k.cols.push_back(quo[r].module);
  }
  for (const auto& gen : small.generators()) {
    const int t = gen.target, s = gen.source;
    ModMap f = ModMap::zero(k.cols[t], k.cols[s], gen.degree);
    if (out.image[t] >= 0 && out.image[s] >= 0) {
      auto [steps, sign] = cup_image(gen, small.kappa(s), i);
      auto w = lift(alg, out.image[s], steps);
      if (!w || w->second != out.image[t]) throw std::logic_error("cup_bimodule: cannot lift a generator");
      Matrix mat = alg.word_matrix(w->first, out.image[s]).scaled(Scalar(sign));
      auto x = alg.express(out.image[t], out.image[s], gen.degree, mat);
      if (!x) throw std::logic_error("cup_bimodule: lifted word outside the block basis");
      ModMap right = big.from_projective(out.image[t], big.projective(out.image[s]), *x);
      for (int u = 0; u < nb; ++u) {
        f.blocks[u] = quo[s].projection.blocks[u] * right.blocks[u] * quo[t].section.blocks[u];
        for (const auto& row : rel[t][u].rows())
          if (!is_zero(quo[s].projection.blocks[u].apply(right.blocks[u].apply(row)))) out.descends = false;
      }
    }
    k.rho.push_back(std::move(f));
  }
  return out;
}

Unit cup_unit(const ModuleContext& big, const CupBimodule& cup) {
  const TensorAlgebra& alg = big.algebra();
  const Bimodule& k = cup.bimodule;
  Unit out;
  out.target = tensor(k, mirror(k));
  const Bimodule& x = out.target;
  const int nb = alg.num_kappas();

  // Degree zero z in the sum of e_c X e_c with g z = z g for every generator.
  std::vector<std::vector<std::pair<int, int>>> unknown(nb);  // (basis index, variable)
  int n = 0;
  for (int c = 0; c < nb; ++c)
    for (int j = 0; j < x.cols[c].dim(c); ++j)
      if (x.cols[c].deg[c][j] == 0) unknown[c].emplace_back(j, n++);
  Echelon cons(n);
  for (size_t g = 0; g < alg.generators().size(); ++g) {
    const Generator& gen = alg.generator(static_cast<int>(g));
    const int s = gen.source, t = gen.target;
    const Matrix& left = x.cols[s].act[g];     // column s, block s -> block t
    const Matrix& right = x.rho[g].blocks[t];  // block t, column t -> column s
    for (int r = 0; r < left.rows(); ++r) {
      Vec row(n);
      for (const auto& [j, var] : unknown[s]) row[var] += left(r, j);
      for (const auto& [j, var] : unknown[t]) row[var] -= right(r, j);
      if (!is_zero(row)) cons.add(row);
    }
  }
  std::vector<Vec> sol;
  if (cons.rank() == 0) {
    for (int v = 0; v < n; ++v) {
      Vec e(n);
      e[v] = Scalar(1);
      sol.push_back(e);
    }
  } else {
    sol = nullspace(Matrix::from_columns(cons.rows(), n).transpose());
  }
  out.solutions = static_cast<int>(sol.size());
  for (int c = 0; c < nb; ++c) out.map.push_back(ModMap::zero(big.projective(c), x.cols[c]));
  if (sol.size() != 1) return out;

  // Normalize so that the first cup idempotent receives exactly c (x) c-dot.
  Vec z = sol[0];
  for (int m = 0; m < static_cast<int>(cup.image.size()); ++m) {
    const int c = cup.image[m];
    if (c < 0) continue;
    const Vec& gvec = cup.generator[m];
    TensorModule tm = tensor_module(k, mirror(k).cols[c]);
    const int dm = k.cols[m].dim(c);
    Vec free(tm.offset[c].back());
    for (int a = 0; a < dm; ++a)
      for (int b = 0; b < dm; ++b) free[tm.offset[c][m] + a * dm + b] = gvec[a] * gvec[b];
    const Vec canon = tm.projection.blocks[c].apply(free);
    Vec zc(x.cols[c].dim(c));
    for (const auto& [j, var] : unknown[c]) zc[j] = z[var];
    for (size_t j = 0; j < canon.size(); ++j)
      if (!canon[j].is_zero() && !zc[j].is_zero()) {
        const Scalar f = canon[j] / zc[j];
        for (Scalar& y : z) y = y * f;
        break;
      }
    break;
  }
  for (int c = 0; c < nb; ++c) {
    Vec zc(x.cols[c].dim(c));
    for (const auto& [j, var] : unknown[c]) zc[j] = z[var];
    out.map[c] = big.from_projective(c, x.cols[c], zc);
  }
  return out;
}

namespace {

std::vector<ModMap> raw_zigzag_left(const Bimodule& k, const Bimodule& kd, const Unit& unit,
                                    const std::vector<ModMap>& eps) {
  const int nb = k.left->num_kappas(), ns = k.right->num_kappas();
  std::vector<TensorModule> tx, ty;
  for (int u = 0; u < nb; ++u) tx.push_back(tensor_module(k, kd.cols[u]));
  for (int r = 0; r < ns; ++r) ty.push_back(tensor_module(kd, k.cols[r]));
  std::vector<ModMap> out;
  for (int r = 0; r < ns; ++r) {
    const Module& n = k.cols[r];
    ModMap f = ModMap::zero(n, n);
    for (int u = 0; u < nb; ++u) {
      if (n.dim(u) == 0) continue;
      const Vec z = tx[u].section.blocks[u].apply(unit.map[u].blocks[u].column(0));
      for (int m = 0; m < ns; ++m) {
        const int dj = kd.cols[u].dim(m);
        for (int i = 0; i < k.cols[m].dim(u); ++i)
          for (int j = 0; j < dj; ++j) {
            const Scalar& c = z[tx[u].offset[u][m] + i * dj + j];
            if (c.is_zero()) continue;
            for (int v = 0; v < n.dim(u); ++v) {
              Vec free(ty[r].offset[m].back());
              free[ty[r].offset[m][u] + j * n.dim(u) + v] = Scalar(1);
              const Vec y = eps[r].blocks[m].apply(ty[r].projection.blocks[m].apply(free));
              if (is_zero(y)) continue;
              const Vec w = k.element_action(m, r, y).blocks[u].column(i);
              for (int a = 0; a < n.dim(u); ++a) f.blocks[u](a, v) += c * w[a];
            }
          }
      }
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<ModMap> raw_zigzag_right(const Bimodule& k, const Bimodule& kd, const Unit& unit,
                                     const std::vector<ModMap>& eps) {
  const int nb = k.left->num_kappas(), ns = k.right->num_kappas();
  std::vector<TensorModule> tx, ty;
  for (int u = 0; u < nb; ++u) tx.push_back(tensor_module(k, kd.cols[u]));
  for (int r = 0; r < ns; ++r) ty.push_back(tensor_module(kd, k.cols[r]));
  std::vector<ModMap> out;
  for (int u = 0; u < nb; ++u) {
    const Module& md = kd.cols[u];
    ModMap f = ModMap::zero(md, md);
    const Vec z = tx[u].section.blocks[u].apply(unit.map[u].blocks[u].column(0));
    for (int mp = 0; mp < ns; ++mp) {
      const int dj = md.dim(mp), di = k.cols[mp].dim(u);
      for (int i = 0; i < di; ++i)
        for (int j = 0; j < dj; ++j) {
          const Scalar& c = z[tx[u].offset[u][mp] + i * dj + j];
          if (c.is_zero()) continue;
          for (int m = 0; m < ns; ++m)
            for (int x = 0; x < md.dim(m); ++x) {
              Vec free(ty[mp].offset[m].back());
              free[ty[mp].offset[m][u] + x * di + i] = Scalar(1);
              const Vec y = eps[mp].blocks[m].apply(ty[mp].projection.blocks[m].apply(free));
              if (is_zero(y)) continue;
              const Vec w = element_action(md, m, mp, y).column(j);
              for (int a = 0; a < md.dim(m); ++a) f.blocks[m](a, x) += c * w[a];
            }
        }
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

Counit cup_counit(const ModuleContext& small, const CupBimodule& cup, const Unit& unit) {
  const Bimodule& k = cup.bimodule;
  const Bimodule kd = mirror(k);
  Counit out;
  out.source = tensor(kd, k);
  const Bimodule id = identity_bimodule(small);
  auto homs = bimodule_homs(out.source, id, 0);
  out.solutions = static_cast<int>(homs.size());
  if (homs.size() != 1) return out;
  out.map = std::move(homs[0]);
  // Scale so that the first triangle composite is the identity.
  const auto left = raw_zigzag_left(k, kd, unit, out.map);
  for (const auto& f : left)
    for (const auto& b : f.blocks)
      for (int c = 0; c < b.cols(); ++c)
        if (!b(c, c).is_zero()) {
          const Scalar s = b(c, c).inverse();
          for (auto& m : out.map) m = m.scaled(s);
          return out;
        }
  return out;
}

Zigzag zigzag(const CupBimodule& cup, const Unit& unit, const Counit& counit) {
  const Bimodule kd = mirror(cup.bimodule);
  return {raw_zigzag_left(cup.bimodule, kd, unit, counit.map), raw_zigzag_right(cup.bimodule, kd, unit, counit.map)};
}

Crossing crossing_bimodule(const ModuleContext& big, const TensorAlgebra& small, int i) {
  CupBimodule cup = cup_bimodule(big, small, i);
  if (!cup.descends) throw std::logic_error("crossing_bimodule: cup bimodule is not well defined");
  Unit u = cup_unit(big, cup);
  if (u.solutions != 1) throw std::logic_error("crossing_bimodule: unit not determined");
  Crossing out;
  const Bimodule id = identity_bimodule(big);
  out.surjective = true;
  for (size_t c = 0; c < u.map.size(); ++c)
    for (size_t t = 0; t < u.map[c].blocks.size(); ++t)
      if (rank(u.map[c].blocks[t]) != u.target.cols[c].dim(static_cast<int>(t))) out.surjective = false;
  out.bimodule = bimodule_kernel(id, u.target, u.map);
  return out;
}

}  // namespace kht

namespace kht {

std::vector<Token> parse_tangle(const std::string& text) {
  std::vector<Token> out;
  std::string cur;
  auto flush = [&] {
    std::istringstream in(cur);
    std::string name;
    int i = 0;
    cur.clear();
    if (!(in >> name)) return;
    if (!(in >> i)) throw std::invalid_argument("tangle token without position: " + name);
    TokenKind kind;
    if (name == "cup")
      kind = TokenKind::Cup;
    else if (name == "cap")
      kind = TokenKind::Cap;
    else if (name == "pos")
      kind = TokenKind::Pos;
    else if (name == "neg")
      kind = TokenKind::Neg;
    else
      throw std::invalid_argument("unknown tangle token: " + name);
    std::string extra;
    if (in >> extra) throw std::invalid_argument("trailing input in tangle token: " + extra);
    out.push_back({kind, i});
  };
  for (char ch : text) {
    if (ch == ',' || ch == '\n' || ch == ';')
      flush();
    else
      cur.push_back(ch);
  }
  flush();
  return out;
}

std::vector<Token> trace_closure(const std::vector<int>& braid, int strands) {
  std::vector<Token> out;
  for (int j = 0; j < strands; ++j) out.push_back({TokenKind::Cup, j});
  for (int s : braid) {
    if (s == 0 || std::abs(s) >= strands) throw std::invalid_argument("braid generator out of range");
    out.push_back({s > 0 ? TokenKind::Pos : TokenKind::Neg, std::abs(s) - 1});
  }
  for (int j = strands - 1; j >= 0; --j) out.push_back({TokenKind::Cap, j});
  return out;
}

int check_arity(const std::vector<Token>& word) {
  int width = 0, widest = 0;
  for (const auto& t : word) {
    switch (t.kind) {
      case TokenKind::Cup:
        if (t.i < 0 || t.i > width) throw std::invalid_argument("cup position out of range");
        width += 2;
        break;
      case TokenKind::Cap:
        if (t.i < 0 || t.i + 2 > width) throw std::invalid_argument("cap position out of range");
        width -= 2;
        break;
      case TokenKind::Pos:
      case TokenKind::Neg:
        if (t.i < 0 || t.i + 2 > width) throw std::invalid_argument("crossing position out of range");
        break;
    }
    widest = std::max(widest, width);
  }
  if (width != 0) throw std::invalid_argument("tangle does not close up");
  return widest;
}

const TensorAlgebra& FunctorEngine::algebra(int l, int k) {
  auto& slot = algebras_[{l, k}];
  if (!slot) slot = std::make_unique<TensorAlgebra>(l, k);
  return *slot;
}

const ModuleContext& FunctorEngine::context(int l, int k) {
  auto& slot = contexts_[{l, k}];
  if (!slot) slot = std::make_unique<ModuleContext>(algebra(l, k));
  return *slot;
}

const CupBimodule& FunctorEngine::cup(int l, int k, int i) {
  auto& slot = cups_[{l, k, i}];
  if (!slot) {
    const ModuleContext& big = context(l + 2, k + 1);
    slot = std::make_unique<CupBimodule>(cup_bimodule(big, algebra(l, k), i));
    if (!slot->descends) throw std::logic_error("presentation incomplete: cup right action does not descend");
  }
  return *slot;
}

const Unit& FunctorEngine::unit(int l, int k, int i) {
  auto& slot = units_[{l, k, i}];
  if (!slot) {
    const CupBimodule& c = cup(l, k, i);
    slot = std::make_unique<Unit>(cup_unit(context(l + 2, k + 1), c));
    if (slot->solutions != 1) throw std::logic_error("adjunction unit is not unique");
  }
  return *slot;
}

ProjComplex FunctorEngine::ground() {
  ProjComplex c;
  c.alg = &algebra(0, 0);
  c.lo = 0;
  c.terms = {{{0, 0}}};
  return c;
}

ProjComplex FunctorEngine::minimize(const ModuleContext& ctx, const ModComplex& m) {
  ProjComplex p = gaussian_eliminate(HomSpaces(ctx), resolve(ctx, m));
  p.trim();
  return p;
}

ProjComplex FunctorEngine::apply_cup(const ProjComplex& c, int i) {
  const int l = c.alg->l(), k = c.alg->k();
  const ModuleContext& big = context(l + 2, k + 1);
  return minimize(big, apply(cup(l, k, i).bimodule, context(l, k), c)).shifted(norm_.cup_h, norm_.cup_q);
}

ProjComplex FunctorEngine::apply_cap(const ProjComplex& c, int i) {
  const int l = c.alg->l(), k = c.alg->k();
  const ModuleContext& small = context(l - 2, k - 1);
  return minimize(small, apply(mirror(cup(l - 2, k - 1, i).bimodule), context(l, k), c)).shifted(norm_.cap_h, norm_.cap_q);
}

ModComplex FunctorEngine::unit_cone(const ProjComplex& c, int i) {
  const int l = c.alg->l(), k = c.alg->k();
  const Unit& u = unit(l - 2, k - 1, i);
  const ModuleContext& ctx = context(l, k);
  const Bimodule id = identity_bimodule(ctx);
  return cone(apply(id, ctx, c), apply(u.target, ctx, c), apply_map(id, u.target, u.map, ctx, c));
}

ProjComplex FunctorEngine::apply_crossing(const ProjComplex& c, int i, int sign) {
  const int l = c.alg->l(), k = c.alg->k();
  const ModuleContext& ctx = context(l, k);
  if (sign > 0) return minimize(ctx, unit_cone(c, i)).shifted(norm_.pos_h, norm_.pos_q);
  ProjComplex d = minimize(ctx, dual(to_modules(ctx, c)));
  return minimize(ctx, dual(unit_cone(d, i))).shifted(norm_.neg_h, norm_.neg_q);
}

ProjComplex FunctorEngine::run(const std::vector<Token>& word) {
  check_arity(word);
  ProjComplex c = ground();
  for (const auto& t : word) {
    switch (t.kind) {
      case TokenKind::Cup:
        c = apply_cup(c, t.i);
        break;
      case TokenKind::Cap:
        c = apply_cap(c, t.i);
        break;
      case TokenKind::Pos:
        c = apply_crossing(c, t.i, 1);
        break;
      case TokenKind::Neg:
        c = apply_crossing(c, t.i, -1);
        break;
    }
  }
  return c;
}

std::map<std::pair<int, int>, int> ground_ranks(const ProjComplex& c) {
  if (c.alg->l() != 0) throw std::invalid_argument("ground_ranks: complex is not over T^0");
  for (const auto& d : c.diff)
    for (const auto& [key, x] : d)
      if (!is_zero(x)) throw std::logic_error("ground_ranks: complex is not minimal");
  std::map<std::pair<int, int>, int> out;
  for (int n = c.lo; n <= c.hi(); ++n)
    for (const auto& s : c.at(n)) ++out[{n, s.shift}];
  return out;
}

std::map<std::pair<int, int>, int> khovanov_ranks(const ProjComplex& c) {
  std::map<std::pair<int, int>, int> out;
  for (const auto& [key, v] : ground_ranks(c)) out[{key.first + key.second, key.second}] += v;
  return out;
}

}  // namespace kht

namespace kht {

ProjComplex jw_projection(const ModuleContext& ctx, const ModComplex& c, int cutoff) {
  const TensorAlgebra& alg = ctx.algebra();
  ResolveOptions opt;
  opt.max_length = cutoff;
  opt.truncate = true;
  opt.allowed.assign(alg.num_kappas(), false);
  opt.allowed[alg.kappa_index(Kappa{alg.l(), alg.k(), std::vector<int>(alg.l(), 0)})] = true;
  return gaussian_eliminate(HomSpaces(ctx), resolve(ctx, c, opt));
}

ProjComplex jw_projection(const ModuleContext& ctx, const Module& m, int cutoff) {
  ModComplex c;
  c.alg = &ctx.algebra();
  c.terms.push_back(m);
  return jw_projection(ctx, c, cutoff);
}

}  // namespace kht
