#include "khtensor/decat.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace kht {

namespace {

void add_to(QVector& x, const std::vector<int>& b, const LaurentPoly& c) {
  if (c.is_zero()) return;
  LaurentPoly& slot = x[b];
  slot += c;
  if (slot.is_zero()) x.erase(b);
}

QVector append_top(const QVector& x) {
  QVector out;
  for (const auto& [b, c] : x) {
    auto nb = b;
    nb.push_back(0);
    out.emplace(std::move(nb), c);
  }
  return out;
}

}  // namespace

QVector apply_F(const QVector& x) {
  QVector out;
  for (const auto& [b, c] : x) {
    const int n = static_cast<int>(b.size());
    int right = 0;  // weight of the slots right of i
    for (int i = n - 1; i >= 0; --i) {
      if (b[i] == 0) {
        auto nb = b;
        nb[i] = 1;
        add_to(out, nb, c.shifted(right));
      }
      right += 1 - 2 * b[i];
    }
  }
  return out;
}

QVector vector_p(const Kappa& kappa) {
  QVector x;
  if (kappa.l == 0) {
    if (kappa.k == 0) x[{}] = LaurentPoly::monomial(0);
    return x;
  }
  if (kappa(1) > 0) return x;
  x[{}] = LaurentPoly::monomial(0);
  for (int h = 1; h <= kappa.l; ++h) {
    x = append_top(x);
    const int next = h < kappa.l ? kappa(h + 1) : kappa.k;
    for (int j = kappa(h); j < next; ++j) x = apply_F(x);
  }
  return x;
}

QVector vector_v(const Kappa& kappa) {
  QVector x;
  std::vector<int> b;
  if (kappa.l > 0 && kappa(1) > 0) return x;
  if (kappa.l == 0 && kappa.k > 0) return x;
  for (int h = 1; h <= kappa.l; ++h) {
    const int gap = (h < kappa.l ? kappa(h + 1) : kappa.k) - kappa(h);
    if (gap > 1) return x;
    b.push_back(gap);
  }
  x[b] = LaurentPoly::monomial(0);
  return x;
}

LaurentPoly pairing(const QVector& a, const QVector& b) {
  LaurentPoly s;
  for (const auto& [basis, c] : a) {
    auto it = b.find(basis);
    if (it != b.end()) s += c * it->second;
  }
  return s;
}

int closure_circles(const std::vector<int>& braid, int strands, const std::vector<bool>& horizontal) {
  const int m = static_cast<int>(braid.size());
  // Node (t, p): position p on the level above crossing t; level m wraps to 0.
  std::vector<int> parent(static_cast<size_t>(m + 1) * strands);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto node = [&](int t, int p) { return t * strands + p; };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int t = 0; t < m; ++t) {
    const int i = std::abs(braid[t]) - 1;
    if (i < 0 || i + 1 >= strands) throw std::invalid_argument("braid generator out of range");
    for (int p = 0; p < strands; ++p)
      if (p != i && p != i + 1) unite(node(t, p), node(t + 1, p));
    if (horizontal[t]) {
      unite(node(t, i), node(t, i + 1));
      unite(node(t + 1, i), node(t + 1, i + 1));
    } else {
      unite(node(t, i), node(t + 1, i));
      unite(node(t, i + 1), node(t + 1, i + 1));
    }
  }
  for (int p = 0; p < strands; ++p) unite(node(m, p), node(0, p));
  int circles = 0;
  for (int x = 0; x < static_cast<int>(parent.size()); ++x)
    if (find(x) == x) ++circles;
  return circles;
}

LaurentPoly jones_polynomial(const std::vector<int>& braid, int strands) {
  const int m = static_cast<int>(braid.size());
  if (m > 24) throw std::invalid_argument("jones_polynomial: too many crossings");
  int npos = 0, nneg = 0;
  for (int s : braid) (s > 0 ? npos : nneg)++;
  const LaurentPoly circle = LaurentPoly::monomial(1) + LaurentPoly::monomial(-1);
  LaurentPoly sum;
  std::vector<bool> horizontal(m);
  for (std::uint32_t state = 0; state < (1u << m); ++state) {
    int ones = 0;
    for (int t = 0; t < m; ++t) {
      const bool one = (state >> t) & 1u;
      ones += one;
      // The 0-smoothing of a positive braid crossing is the vertical one.
      horizontal[t] = braid[t] > 0 ? one : !one;
    }
    LaurentPoly term = LaurentPoly::monomial(ones, ones % 2 == 0 ? 1 : -1);
    for (int c = closure_circles(braid, strands, horizontal); c > 0; --c) term = term * circle;
    sum += term;
  }
  return sum.shifted(npos - 2 * nneg) * LaurentPoly::monomial(0, nneg % 2 == 0 ? 1 : -1);
}

std::map<std::vector<int>, LaurentPoly> jw_matrix(int l, int k, int max_degree) {
  std::map<std::vector<int>, LaurentPoly> out;
  Kappa zero{l, k, std::vector<int>(l, 0)};
  const QVector p0 = vector_p(zero);
  const LaurentPoly norm = pairing(p0, p0);
  if (norm.is_zero()) return out;
  for (const Kappa& kappa : enumerate_kappas(l, k)) {
    if (kappa.violating()) continue;
    out[kappa.v] = series_divide(pairing(p0, vector_p(kappa)), norm, max_degree);
  }
  return out;
}

}  // namespace kht
