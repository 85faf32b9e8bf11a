#include "khtensor/khovanov.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kht {

Vec FrobAlg::multiply(int a, int b) {
  Vec v(2);
  if (a + b <= 1) v[a + b] = Scalar(1);
  return v;
}

Vec FrobAlg::comultiply(int a) {
  Vec v(4);
  if (a == 0) {
    v[1] = Scalar(1);
    v[2] = Scalar(1);
  } else {
    v[3] = Scalar(1);
  }
  return v;
}

Scalar FrobAlg::counit(int a) { return Scalar(a == 1 ? 1 : 0); }

LinkDiagram LinkDiagram::from_braid(const std::string& word, int strands) {
  LinkDiagram d;
  std::istringstream in(word);
  std::string tok;
  int top = 0;
  while (in >> tok) {
    std::size_t used = 0;
    int g = 0;
    try {
      g = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("braid word: bad token '" + tok + "'");
    }
    if (used != tok.size() || g == 0) throw std::invalid_argument("braid word: bad token '" + tok + "'");
    d.braid.push_back(g);
    top = std::max(top, std::abs(g));
  }
  d.strands = strands > 0 ? strands : top + 1;
  d.validate();
  return d;
}

int LinkDiagram::positive() const {
  return static_cast<int>(std::count_if(braid.begin(), braid.end(), [](int g) { return g > 0; }));
}

int LinkDiagram::negative() const { return crossings() - positive(); }

void LinkDiagram::validate() const {
  if (strands < 1) throw std::invalid_argument("braid: need at least one strand");
  for (int g : braid)
    if (g == 0 || std::abs(g) >= strands) throw std::invalid_argument("braid: generator out of range");
}

namespace {

// Nodes (t, p) sit above crossing t; level n is identified with level 0.
std::vector<int> smooth(const LinkDiagram& d, int state, int& count) {
  const int m = d.crossings(), w = d.strands;
  std::vector<int> parent((m + 1) * w);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  auto node = [&](int t, int p) { return t * w + p; };
  for (int t = 0; t < m; ++t) {
    const int i = std::abs(d.braid[t]) - 1;
    for (int p = 0; p < w; ++p)
      if (p != i && p != i + 1) unite(node(t, p), node(t + 1, p));
    const bool one = (state >> t) & 1;
    const bool horizontal = d.braid[t] > 0 ? one : !one;
    if (horizontal) {
      unite(node(t, i), node(t, i + 1));
      unite(node(t + 1, i), node(t + 1, i + 1));
    } else {
      unite(node(t, i), node(t + 1, i));
      unite(node(t, i + 1), node(t + 1, i + 1));
    }
  }
  for (int p = 0; p < w; ++p) unite(node(m, p), node(0, p));
  std::map<int, int> label;
  std::vector<int> out(parent.size());
  for (size_t x = 0; x < parent.size(); ++x) {
    auto [it, fresh] = label.try_emplace(find(static_cast<int>(x)), static_cast<int>(label.size()));
    out[x] = it->second;
  }
  count = static_cast<int>(label.size());
  return out;
}

int qdegree(const Cube& c, int state, int labels) {
  const int circles = c.circles[state];
  const int ts = std::popcount(static_cast<unsigned>(labels));
  return (circles - 2 * ts) + std::popcount(static_cast<unsigned>(state)) + c.n_plus - 2 * c.n_minus;
}

}  // namespace

Cube build_cube(const LinkDiagram& d, int max_crossings) {
  d.validate();
  if (d.crossings() > max_crossings) throw std::invalid_argument("build_cube: too many crossings");
  Cube c;
  c.n = d.crossings();
  c.n_plus = d.positive();
  c.n_minus = d.negative();
  for (int s = 0; s < (1 << c.n); ++s) {
    int count = 0;
    c.circle_of.push_back(smooth(d, s, count));
    c.circles.push_back(count);
  }
  return c;
}

std::vector<CubeBasis> kh_basis(const Cube& c, int h, int q) {
  std::vector<CubeBasis> out;
  const int r = h + c.n_minus;
  if (r < 0 || r > c.n) return out;
  for (int s = 0; s < (1 << c.n); ++s) {
    if (std::popcount(static_cast<unsigned>(s)) != r) continue;
    for (int lab = 0; lab < (1 << c.circles[s]); ++lab)
      if (qdegree(c, s, lab) == q) out.push_back({s, lab});
  }
  return out;
}

Matrix kh_differential(const Cube& c, int h, int q) {
  const auto src = kh_basis(c, h, q), tgt = kh_basis(c, h + 1, q);
  std::map<std::pair<int, int>, int> index;
  for (size_t j = 0; j < tgt.size(); ++j) index[{tgt[j].state, tgt[j].labels}] = static_cast<int>(j);
  Matrix d(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
  for (size_t col = 0; col < src.size(); ++col) {
    const int s = src[col].state, lab = src[col].labels;
    for (int t = 0; t < c.n; ++t) {
      if ((s >> t) & 1) continue;
      const int s2 = s | (1 << t);
      const int sign = std::popcount(static_cast<unsigned>(s & ((1 << t) - 1))) % 2 == 0 ? 1 : -1;
      const auto& from = c.circle_of[s];
      const auto& to = c.circle_of[s2];
      // Circles of s2 hit by each circle of s (through shared nodes).
      std::vector<std::vector<int>> image(c.circles[s]);
      std::vector<std::vector<int>> preimage(c.circles[s2]);
      for (size_t x = 0; x < from.size(); ++x) {
        auto& im = image[from[x]];
        if (std::find(im.begin(), im.end(), to[x]) == im.end()) im.push_back(to[x]);
        auto& pre = preimage[to[x]];
        if (std::find(pre.begin(), pre.end(), from[x]) == pre.end()) pre.push_back(from[x]);
      }
      // Unchanged circles carry their label; the active ones merge or split.
      int base = 0;
      std::vector<int> active_src, active_tgt;
      for (int a = 0; a < c.circles[s]; ++a) {
        if (image[a].size() == 1 && preimage[image[a][0]].size() == 1) {
          if ((lab >> a) & 1) base |= 1 << image[a][0];
        } else {
          active_src.push_back(a);
          for (int b : image[a])
            if (std::find(active_tgt.begin(), active_tgt.end(), b) == active_tgt.end()) active_tgt.push_back(b);
        }
      }
      std::vector<std::pair<int, Scalar>> terms;
      if (active_src.size() == 2 && active_tgt.size() == 1) {
        const Vec m = FrobAlg::multiply((lab >> active_src[0]) & 1, (lab >> active_src[1]) & 1);
        for (int u = 0; u < 2; ++u)
          if (!m[u].is_zero()) terms.emplace_back(base | (u << active_tgt[0]), m[u]);
      } else if (active_src.size() == 1 && active_tgt.size() == 2) {
        const Vec dl = FrobAlg::comultiply((lab >> active_src[0]) & 1);
        for (int u = 0; u < 4; ++u)
          if (!dl[u].is_zero()) terms.emplace_back(base | ((u >> 1) << active_tgt[0]) | ((u & 1) << active_tgt[1]), dl[u]);
      } else {
        throw std::logic_error("kh_differential: edge is neither a merge nor a split");
      }
      for (const auto& [lab2, coef] : terms) {
        auto it = index.find({s2, lab2});
        if (it == index.end()) throw std::logic_error("kh_differential: degree mismatch");
        d(it->second, static_cast<int>(col)) += sign > 0 ? coef : -coef;
      }
    }
  }
  return d;
}

BigradedTable kh_cube(const LinkDiagram& d, int max_crossings) {
  const Cube c = build_cube(d, max_crossings);
  std::map<std::pair<int, int>, int> ranks;
  int qmin = 0, qmax = 0;
  for (int s = 0; s < (1 << c.n); ++s) {
    qmin = std::min(qmin, qdegree(c, s, (1 << c.circles[s]) - 1));
    qmax = std::max(qmax, qdegree(c, s, 0));
  }
  for (int q = qmin; q <= qmax; ++q) {
    std::vector<int> dims, ranks_out;
    for (int h = -c.n_minus; h <= c.n_plus; ++h) {
      dims.push_back(static_cast<int>(kh_basis(c, h, q).size()));
      ranks_out.push_back(rank(kh_differential(c, h, q)));
    }
    for (size_t i = 0; i < dims.size(); ++i) {
      const int in = i > 0 ? ranks_out[i - 1] : 0;
      const int r = dims[i] - ranks_out[i] - in;
      if (r > 0) ranks[{static_cast<int>(i) - c.n_minus, q}] = r;
    }
  }
  return BigradedTable(ranks);
}

}  // namespace kht
