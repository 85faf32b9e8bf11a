#include "khtensor/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kht {

MultiPoly MultiPoly::constant(int nvars, const Scalar& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  Exponent e(nvars, 0);
  e.at(i - 1) = 1;
  return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Scalar& c) {
  MultiPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

Scalar MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Scalar& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("exponent length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator-() const { return scaled(Scalar(-1)); }

MultiPoly MultiPoly::scaled(const Scalar& c) const {
  MultiPoly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  MultiPoly r(nvars_);
  Exponent e(nvars_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      for (int v = 0; v < nvars_; ++v) e[v] = a[v] + b[v];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::times_var(int i, int p) const {
  MultiPoly r(nvars_);
  for (const auto& [e0, c] : terms_) {
    Exponent e = e0;
    e.at(i - 1) += p;
    r.terms_.emplace(std::move(e), c);
  }
  return r;
}

MultiPoly MultiPoly::swapped(int i) const {
  MultiPoly r(nvars_);
  for (const auto& [e0, c] : terms_) {
    Exponent e = e0;
    std::swap(e.at(i - 1), e.at(i));
    r.terms_.emplace(std::move(e), c);
  }
  return r;
}

MultiPoly MultiPoly::component(int d) const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) == d) r.terms_.emplace(e, c);
  return r;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second;
    for (int v = 0; v < nvars_; ++v) {
      if (it->first[v] == 0) continue;
      os << "*Y" << v + 1;
      if (it->first[v] > 1) os << "^" << it->first[v];
    }
  }
  return os.str();
}

namespace {

void enumerate_monomials(int n, int d, int pos, Exponent& cur,
                         std::vector<Exponent>& out) {
  if (pos == n - 1) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (int a = d; a >= 0; --a) {
    cur[pos] = a;
    enumerate_monomials(n, d - a, pos + 1, cur, out);
  }
}

}  // namespace

std::vector<Exponent> monomials_of_degree(int n, int d) {
  std::vector<Exponent> out;
  if (d < 0) return out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponent cur(n, 0);
  enumerate_monomials(n, d, 0, cur, out);
  return out;
}

MultiPoly complete_symmetric(int p, int j, int k) {
  if (j < 0 || j > k) throw std::invalid_argument("complete_symmetric: need 0<=j<=k");
  MultiPoly r(k);
  if (p < 0) return r;
  if (p == 0) return MultiPoly::constant(k, Scalar(1));
  if (j == 0) return r;
  for (const auto& sub : monomials_of_degree(j, p)) {
    Exponent e(k, 0);
    std::copy(sub.begin(), sub.end(), e.begin());
    r.add_term(e, Scalar(1));
  }
  return r;
}

MultiPoly elementary_symmetric(int p, const std::vector<int>& vars, int k) {
  MultiPoly r(k);
  const int n = static_cast<int>(vars.size());
  if (p < 0 || p > n) return r;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + p, true);
  do {
    Exponent e(k, 0);
    for (int t = 0; t < n; ++t)
      if (pick[t]) e.at(vars[t] - 1) += 1;
    r.add_term(e, Scalar(1));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return r;
}

MultiPoly demazure(int i, const MultiPoly& f) {
  const int k = f.nvars();
  if (i < 1 || i >= k) throw std::invalid_argument("demazure: need 1<=i<k");
  // Term by term: Y_i^a Y_{i+1}^b m  with a > b contributes
  // -(Y_i^{a-1}Y_{i+1}^b + ... + Y_i^b Y_{i+1}^{a-1}) m, and the mirror
  // image with a < b contributes the same sum with a positive sign.
  MultiPoly r(k);
  for (const auto& [e, c] : f.terms()) {
    const int a = e[i - 1], b = e[i];
    if (a == b) continue;
    const int lo = std::min(a, b), hi = std::max(a, b);
    const Scalar sign = a > b ? Scalar(-1) : Scalar(1);
    Exponent t = e;
    for (int s = lo; s < hi; ++s) {
      t[i - 1] = s;
      t[i] = hi - 1 - s + lo;
      r.add_term(t, sign * c);
    }
  }
  return r;
}

}  // namespace kht
