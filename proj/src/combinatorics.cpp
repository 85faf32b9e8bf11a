#include "khtensor/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kht {

bool Kappa::valid() const {
  if (static_cast<int>(v.size()) != l) return false;
  for (int h = 0; h < l; ++h) {
    if (v[h] < 0 || v[h] > k) return false;
    if (h > 0 && v[h] < v[h - 1]) return false;
  }
  return true;
}

bool Kappa::in_image(int j) const { return std::find(v.begin(), v.end(), j) != v.end(); }

bool Kappa::basic() const {
  if (l == 0) return k == 0;
  if (v[0] != 0 || k - v[l - 1] > 1) return false;
  for (int h = 1; h < l; ++h)
    if (v[h] - v[h - 1] > 1) return false;
  return true;
}

bool Kappa::leq(const Kappa& o) const {
  for (int h = 0; h < l; ++h)
    if (v[h] > o.v[h]) return false;
  return true;
}

std::string Kappa::str() const {
  std::ostringstream os;
  os << "(";
  for (int h = 0; h < l; ++h) os << (h ? "," : "") << v[h];
  os << ")";
  return os.str();
}

namespace {

void kappa_rec(int l, int k, int h, int lo, std::vector<int>& cur, std::vector<Kappa>& out) {
  if (h == l) {
    out.push_back(Kappa{l, k, cur});
    return;
  }
  for (int x = lo; x <= k; ++x) {
    cur[h] = x;
    kappa_rec(l, k, h + 1, x, cur, out);
  }
}

void partition_rec(int k, int cap, int j, int lo, BoxPartition& cur, std::vector<BoxPartition>& out) {
  if (j == k) {
    out.push_back(cur);
    return;
  }
  for (int x = lo; x <= cap; ++x) {
    cur[j] = x;
    partition_rec(k, cap, j + 1, x, cur, out);
  }
}

}  // namespace

std::vector<Kappa> enumerate_kappas(int l, int k) {
  if (l < 0 || k < 0) throw std::invalid_argument("enumerate_kappas: negative size");
  std::vector<Kappa> out;
  std::vector<int> cur(l);
  kappa_rec(l, k, 0, 0, cur, out);
  return out;
}

Kappa kappa_shift(const Kappa& kappa, int i, int dir) {
  Kappa r = kappa;
  if (dir > 0) {
    for (int h = kappa.l; h >= 1; --h)
      if (kappa(h) == i - 1) {
        r.v[h - 1] += 1;
        if (r.valid()) return r;
        break;
      }
  } else {
    for (int h = 1; h <= kappa.l; ++h)
      if (kappa(h) == i) {
        r.v[h - 1] -= 1;
        if (r.valid()) return r;
        break;
      }
  }
  throw std::domain_error("undefined shift of " + kappa.str());
}

int grading_offset(const Kappa& kappa) { return std::accumulate(kappa.v.begin(), kappa.v.end(), 0); }

std::vector<BoxPartition> enumerate_partitions(int l, int k) {
  std::vector<BoxPartition> out;
  if (k > l || k < 0) return out;
  BoxPartition cur(k);
  partition_rec(k, l - k, 0, 0, cur, out);
  return out;
}

std::string sign_sequence(const BoxPartition& p, int l, int k) {
  if (static_cast<int>(p.size()) != k) throw std::invalid_argument("sign_sequence: wrong number of parts");
  std::string s(l, '-');
  for (int j = 1; j <= k; ++j) s.at(j + p[j - 1] - 1) = '+';
  return s;
}

BoxPartition partition_of_signs(const std::string& signs) {
  BoxPartition p;
  for (size_t pos = 0; pos < signs.size(); ++pos)
    if (signs[pos] == '+') p.push_back(static_cast<int>(pos) + 1 - static_cast<int>(p.size() + 1));
  return p;
}

Kappa bottom_kappa(const BoxPartition& p, int l) {
  const int k = static_cast<int>(p.size());
  Kappa kappa{l, k, std::vector<int>(l, 0)};
  for (int h = 1; h <= l; ++h)
    for (int j = 1; j <= k; ++j)
      if (j + p[j - 1] < h) ++kappa.v[h - 1];
  return kappa;
}

bool Backdrop::valid() const {
  const int k = static_cast<int>(partition.size());
  if (static_cast<int>(labels.size()) != k || static_cast<int>(tie.size()) != k) return false;
  for (int j = 1; j <= k; ++j) {
    const int lab = labels[j - 1];
    if (lab < j + partition[j - 1] || lab > l) return false;
  }
  return true;
}

std::vector<int> Backdrop::top_rank() const {
  const int k = static_cast<int>(labels.size());
  std::vector<int> rows(k);
  std::iota(rows.begin(), rows.end(), 0);
  std::sort(rows.begin(), rows.end(), [&](int a, int b) {
    return std::pair(labels[a], tie[a]) < std::pair(labels[b], tie[b]);
  });
  std::vector<int> rank(k);
  for (int r = 0; r < k; ++r) rank[rows[r]] = r;
  return rank;
}

std::string Backdrop::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t j = 0; j < partition.size(); ++j) os << (j ? "," : "") << partition[j];
  os << "|";
  for (size_t j = 0; j < labels.size(); ++j) os << (j ? "," : "") << labels[j] << "." << tie[j];
  os << "]";
  return os.str();
}

Kappa kappa_of_backdrop(const Backdrop& b) {
  const int k = static_cast<int>(b.labels.size());
  Kappa kappa{b.l, k, std::vector<int>(b.l, 0)};
  for (int p = 1; p <= b.l; ++p)
    for (int lab : b.labels)
      if (lab < p) ++kappa.v[p - 1];
  return kappa;
}

namespace {

void tie_rec(Backdrop& b, const std::vector<std::vector<int>>& groups, size_t g, std::vector<Backdrop>& out) {
  if (g == groups.size()) {
    out.push_back(b);
    return;
  }
  std::vector<int> order(groups[g].size());
  std::iota(order.begin(), order.end(), 0);
  do {
    for (size_t t = 0; t < order.size(); ++t) b.tie[groups[g][t]] = order[t];
    tie_rec(b, groups, g + 1, out);
  } while (std::next_permutation(order.begin(), order.end()));
}

void label_rec(Backdrop& b, int j, std::vector<Backdrop>& out) {
  const int k = static_cast<int>(b.partition.size());
  if (j > k) {
    std::map<int, std::vector<int>> by_label;
    for (int r = 0; r < k; ++r) by_label[b.labels[r]].push_back(r);
    std::vector<std::vector<int>> groups;
    for (auto& [lab, rows] : by_label) groups.push_back(rows);
    tie_rec(b, groups, 0, out);
    return;
  }
  for (int lab = j + b.partition[j - 1]; lab <= b.l; ++lab) {
    b.labels[j - 1] = lab;
    label_rec(b, j + 1, out);
  }
}

}  // namespace

std::map<BoxPartition, std::vector<Backdrop>> enumerate_backdrops(int l, int k) {
  std::map<BoxPartition, std::vector<Backdrop>> out;
  for (const auto& p : enumerate_partitions(l, k)) {
    Backdrop b{l, p, std::vector<int>(k, 0), std::vector<int>(k, 0)};
    label_rec(b, 1, out[p]);
  }
  return out;
}

long long binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  long long c = 1;
  for (int t = 1; t <= r; ++t) c = c * (n - r + t) / t;
  return c;
}

long long factorial(int n) {
  long long f = 1;
  for (int t = 2; t <= n; ++t) f *= t;
  return f;
}

}  // namespace kht
