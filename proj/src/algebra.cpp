#include "khtensor/algebra.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace kht {

std::string to_string(GenKind kind) {
  switch (kind) {
    case GenKind::Y: return "y";
    case GenKind::Psi: return "psi";
    case GenKind::IotaPlus: return "iota+";
    case GenKind::IotaMinus: return "iota-";
  }
  return "?";
}

namespace {

Vec flatten(const Matrix& m) {
  Vec v;
  v.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

}  // namespace

bool Element::is_zero() const {
  for (const auto& [key, m] : blocks)
    if (!m.is_zero()) return false;
  return true;
}

Element Element::operator*(const Element& o) const {
  Element r;
  for (const auto& [ka, a] : blocks)
    for (const auto& [kb, b] : o.blocks) {
      if (ka.second != kb.first) continue;
      const auto key = std::make_pair(ka.first, kb.second);
      auto it = r.blocks.find(key);
      if (it == r.blocks.end())
        r.blocks.emplace(key, a * b);
      else
        it->second += a * b;
    }
  return r;
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [key, m] : o.blocks) {
    auto it = blocks.find(key);
    if (it == blocks.end())
      blocks.emplace(key, m);
    else
      it->second += m;
  }
  return *this;
}

Element& Element::operator-=(const Element& o) { return *this += o.scaled(Scalar(-1)); }

Element Element::scaled(const Scalar& s) const {
  Element r;
  for (const auto& [key, m] : blocks) r.blocks.emplace(key, m.scaled(s));
  return r;
}

TensorAlgebra::TensorAlgebra(int l, int k) : l_(l), k_(k) {
  if (l < 0 || k < 0 || k > l) throw std::invalid_argument("TensorAlgebra: need 0 <= k <= l");
  kappas_ = enumerate_kappas(l, k);
  for (int t = 0; t < num_kappas(); ++t) {
    index_[kappas_[t].v] = t;
    rings_.emplace_back(kappas_[t]);
  }
  build_generators();
  build_blocks();
}

int TensorAlgebra::kappa_index(const Kappa& kappa) const {
  auto it = index_.find(kappa.v);
  if (it == index_.end() || kappa.k != k_) throw std::out_of_range("unknown kappa " + kappa.str());
  return it->second;
}

void TensorAlgebra::build_generators() {
  from_.assign(num_kappas(), {});
  std::map<std::tuple<int, int, int>, int> lookup;
  auto add = [&](GenKind kind, int i, int s, int t, int degree, Matrix m) {
    lookup[{static_cast<int>(kind), i, s}] = static_cast<int>(gens_.size());
    from_[s].push_back(static_cast<int>(gens_.size()));
    gens_.push_back(Generator{kind, i, s, t, degree, std::move(m), -1});
  };
  for (int s = 0; s < num_kappas(); ++s) {
    const Kappa& kap = kappas_[s];
    const QuotientRing& src = rings_[s];
    for (int i = 1; i <= k_; ++i)
      add(GenKind::Y, i, s, s, 2, src.induced_map(src, [i](const MultiPoly& f) { return f.times_var(i); }));
    for (int i = 1; i < k_; ++i)
      if (!kap.in_image(i))
        add(GenKind::Psi, i, s, s, -2, src.induced_map(src, [i](const MultiPoly& f) { return demazure(i, f); }));
    for (int j = 1; j <= k_; ++j) {
      if (kap.in_image(j - 1)) {
        const int t = kappa_index(kappa_shift(kap, j, +1));
        add(GenKind::IotaPlus, j, s, t, 1, src.induced_map(rings_[t], [](const MultiPoly& f) { return f; }));
      }
      if (kap.in_image(j)) {
        const int t = kappa_index(kappa_shift(kap, j, -1));
        add(GenKind::IotaMinus, j, s, t, 1,
            src.induced_map(rings_[t], [j](const MultiPoly& f) { return f.times_var(j); }));
      }
    }
  }
  for (auto& g : gens_) {
    switch (g.kind) {
      case GenKind::Y:
      case GenKind::Psi: g.star = lookup.at({static_cast<int>(g.kind), g.i, g.source}); break;
      case GenKind::IotaPlus: g.star = lookup.at({static_cast<int>(GenKind::IotaMinus), g.i, g.target}); break;
      case GenKind::IotaMinus: g.star = lookup.at({static_cast<int>(GenKind::IotaPlus), g.i, g.target}); break;
    }
  }
}

std::optional<int> TensorAlgebra::find_generator(GenKind kind, int i, int source) const {
  for (int g : from_.at(source))
    if (gens_[g].kind == kind && gens_[g].i == i) return g;
  return std::nullopt;
}

Element TensorAlgebra::idempotent(int idx) const {
  Element e;
  e.blocks.emplace(std::make_pair(idx, idx), Matrix::identity(rings_[idx].dim()));
  return e;
}

Element TensorAlgebra::generator_element(int g) const {
  Element e;
  e.blocks.emplace(std::make_pair(gens_[g].target, gens_[g].source), gens_[g].mat);
  return e;
}

Matrix TensorAlgebra::psi_across(int i, int source) const {
  const Kappa& kap = kappas_.at(source);
  const int r = static_cast<int>(std::count(kap.v.begin(), kap.v.end(), i));
  const QuotientRing& ring = rings_[source];
  return ring.induced_map(ring, [i, r](const MultiPoly& f) { return demazure(i, f.times_var(i, r)); });
}

int TensorAlgebra::psi_across_degree(int i, int source) const {
  const Kappa& kap = kappas_.at(source);
  return 2 * static_cast<int>(std::count(kap.v.begin(), kap.v.end(), i)) - 2;
}

Matrix TensorAlgebra::word_matrix(const std::vector<int>& word, int source) const {
  Matrix m = Matrix::identity(rings_.at(source).dim());
  int cur = source;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const Generator& g = gens_.at(*it);
    if (g.source != cur) throw std::invalid_argument("word_matrix: idempotents do not chain");
    m = g.mat * m;
    cur = g.target;
  }
  return m;
}

std::vector<int> TensorAlgebra::star_word(const std::vector<int>& word) const {
  std::vector<int> out(word.rbegin(), word.rend());
  for (int& g : out) g = gens_.at(g).star;
  return out;
}

void TensorAlgebra::build_blocks() {
  for (int s = 0; s < num_kappas(); ++s) {
    if (rings_[s].is_zero()) continue;
    std::deque<std::pair<int, int>> queue;  // (target, element index)
    auto insert = [&](int t, BasisElement el) {
      Block& b = blocks_[{t, s}];
      b.target = t;
      b.source = s;
      const Vec flat = flatten(el.mat);
      auto [it, fresh] = b.echelon.try_emplace(el.degree, static_cast<int>(flat.size()), true);
      if (!it->second.add(flat)) return;
      b.members[el.degree].push_back(b.dim());
      queue.emplace_back(t, b.dim());
      b.elems.push_back(std::move(el));
    };
    BasisElement unit;
    unit.mat = Matrix::identity(rings_[s].dim());
    insert(s, std::move(unit));
    while (!queue.empty()) {
      auto [t, idx] = queue.front();
      queue.pop_front();
      for (int g : from_[t]) {
        const Generator& gen = gens_[g];
        if (rings_[gen.target].is_zero()) continue;
        const BasisElement& x = blocks_.at({t, s}).elems[idx];
        BasisElement y;
        y.mat = gen.mat * x.mat;
        if (y.mat.is_zero()) continue;
        y.degree = x.degree + gen.degree;
        y.gen = g;
        y.parent = idx;
        y.word.reserve(x.word.size() + 1);
        y.word.push_back(g);
        y.word.insert(y.word.end(), x.word.begin(), x.word.end());
        insert(gen.target, std::move(y));
      }
    }
  }
}

const Block& TensorAlgebra::block(int target, int source) const {
  static const Block empty;
  auto it = blocks_.find({target, source});
  return it == blocks_.end() ? empty : it->second;
}

int TensorAlgebra::dim() const {
  int d = 0;
  for (const auto& [key, b] : blocks_) d += b.dim();
  return d;
}

std::optional<Vec> TensorAlgebra::express(int target, int source, int degree, const Matrix& m) const {
  const Block& b = block(target, source);
  Vec out(b.dim());
  if (m.is_zero()) return out;
  auto it = b.echelon.find(degree);
  if (it == b.echelon.end()) return std::nullopt;
  auto coords = it->second.express(flatten(m));
  if (!coords) return std::nullopt;
  const auto& mem = b.members.at(degree);
  for (size_t j = 0; j < mem.size(); ++j) out[mem[j]] = (*coords)[j];
  return out;
}

std::map<int, int> TensorAlgebra::block_graded_dim(int target, int source) const {
  std::map<int, int> out;
  for (const auto& [d, mem] : block(target, source).members) out[d] = static_cast<int>(mem.size());
  return out;
}

bool TensorAlgebra::is_homogeneous(int target, int source, const Matrix& m, int degree) const {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero() && ring_degree(target, r) != ring_degree(source, c) + degree) return false;
  return true;
}

}  // namespace kht
