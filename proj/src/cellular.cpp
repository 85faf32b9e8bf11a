#include <algorithm>
#include <stdexcept>

#include "khtensor/algebra.hpp"

namespace kht {

namespace {

Vec flatten(const Matrix& m) {
  Vec v;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

Kappa kappa_of_configuration(const std::vector<int>& tokens, int l, int k) {
  Kappa kap{l, k, {}};
  int blacks = 0;
  for (int t : tokens) {
    if (t < 0)
      kap.v.push_back(blacks);
    else
      ++blacks;
  }
  return kap;
}

}  // namespace

BackdropDiagram realize_backdrop(const TensorAlgebra& alg, const Backdrop& b) {
  const int l = alg.l(), k = alg.k();
  if (b.l != l || static_cast<int>(b.partition.size()) != k || !b.valid())
    throw std::invalid_argument("realize_backdrop: backdrop does not fit the algebra");
  // Tokens: -1 for a red strand, otherwise the row carried by a black strand.
  std::vector<int> tokens;
  for (int gap = 0; gap <= l; ++gap) {
    if (gap > 0) tokens.push_back(-1);
    for (int j = 1; j <= k; ++j)
      if (j + b.partition[j - 1] == gap) tokens.push_back(j - 1);
  }
  BackdropDiagram out;
  out.bottom = alg.kappa_index(kappa_of_configuration(tokens, l, k));
  const auto rank = b.top_rank();
  std::vector<int> order(k);
  for (int j = 0; j < k; ++j) order[rank[j]] = j;
  std::vector<bool> done(k, false);
  int cur = out.bottom;
  auto step = [&](GenKind kind, int i) {
    auto g = alg.find_generator(kind, i, cur);
    if (!g) throw std::logic_error("realize_backdrop: move not available");
    out.word.insert(out.word.begin(), *g);
    out.degree += alg.generator(*g).degree;
    cur = alg.generator(*g).target;
  };
  for (int r = k - 1; r >= 0; --r) {
    const int row = order[r];
    int p = static_cast<int>(std::find(tokens.begin(), tokens.end(), row) - tokens.begin());
    for (;;) {
      if (p + 1 >= static_cast<int>(tokens.size())) break;
      const int next = tokens[p + 1];
      int reds_left = 0, blacks_left = 0;
      for (int q = 0; q < p; ++q) (tokens[q] < 0 ? reds_left : blacks_left)++;
      if (next < 0) {
        if (reds_left == b.labels[row]) break;
        step(GenKind::IotaMinus, blacks_left + 1);
      } else if (!done[next]) {
        step(GenKind::Psi, blacks_left + 1);
      } else {
        break;
      }
      std::swap(tokens[p], tokens[p + 1]);
      ++p;
    }
    done[row] = true;
  }
  out.top = cur;
  if (!(alg.kappa(out.top) == kappa_of_backdrop(b))) throw std::logic_error("realize_backdrop: wrong top");
  out.mat = alg.word_matrix(out.word, out.bottom);
  return out;
}

std::vector<CellularElement> cellular_basis(const TensorAlgebra& alg) {
  std::vector<CellularElement> out;
  for (const auto& [part, list] : enumerate_backdrops(alg.l(), alg.k())) {
    std::vector<BackdropDiagram> diagrams;
    for (const auto& b : list) diagrams.push_back(realize_backdrop(alg, b));
    for (size_t a = 0; a < list.size(); ++a)
      for (size_t c = 0; c < list.size(); ++c) {
        CellularElement e;
        e.s = list[a];
        e.t = list[c];
        e.target = diagrams[a].top;
        e.source = diagrams[c].top;
        e.degree = diagrams[a].degree + diagrams[c].degree;
        e.word = diagrams[a].word;
        const auto starred = alg.star_word(diagrams[c].word);
        e.word.insert(e.word.end(), starred.begin(), starred.end());
        e.mat = alg.word_matrix(e.word, e.source);
        out.push_back(std::move(e));
      }
  }
  return out;
}

int cellular_rank(const TensorAlgebra& alg, const std::vector<CellularElement>& cells) {
  std::map<std::tuple<int, int, int>, Echelon> spans;
  int rank = 0;
  for (const auto& c : cells) {
    const int size = alg.ring(c.target).dim() * alg.ring(c.source).dim();
    auto [it, fresh] = spans.try_emplace({c.target, c.source, c.degree}, size);
    if (it->second.add(flatten(c.mat))) ++rank;
  }
  return rank;
}

int idempotent_subalgebra_dim(const TensorAlgebra& alg, const std::vector<int>& kappas) {
  int d = 0;
  for (int t : kappas)
    for (int s : kappas) d += alg.block_dim(t, s);
  return d;
}

}  // namespace kht
