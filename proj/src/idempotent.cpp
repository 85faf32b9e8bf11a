#include "khtensor/idempotent.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "khtensor/scalar.hpp"

namespace kht {

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly poly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

namespace {

UPoly poly_sub(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

Scalar eval(const UPoly& p, const Scalar& x) {
  Scalar r;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  n = std::llabs(n);
  std::vector<std::int64_t> out;
  if (n == 0) return out;
  if (n > 1'000'000'000'000LL) throw std::overflow_error("field_roots: coefficient too large to factor");
  for (std::int64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  return out;
}

// Inverse of a modulo m (gcd 1 assumed).
UPoly inverse_mod(const UPoly& a, const UPoly& m) {
  UPoly r0 = m, r1 = poly_divmod(a, m).second, s0, s1{Scalar(1)};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    UPoly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw std::logic_error("inverse_mod: not coprime");
  const Scalar inv = r0[0].inverse();
  for (auto& c : s0) c *= inv;
  return poly_divmod(s0, m).second;
}

Vec evaluate(const FiniteAlgebra& a, const Vec& e, const UPoly& p, const Vec& x) {
  Vec r(a.dim);
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    r = a.mul(x, r);
    axpy(r, *it, e);
  }
  return r;
}

}  // namespace

std::pair<UPoly, UPoly> poly_divmod(const UPoly& a, const UPoly& b) {
  if (b.empty()) throw std::domain_error("poly_divmod: division by zero");
  UPoly r = a, q;
  trim(r);
  if (r.size() >= b.size()) q.assign(r.size() - b.size() + 1, Scalar());
  const Scalar lead = b.back().inverse();
  while (!r.empty() && r.size() >= b.size()) {
    const size_t shift = r.size() - b.size();
    const Scalar c = r.back() * lead;
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    trim(r);
  }
  trim(q);
  return {q, r};
}

std::vector<Scalar> field_roots(const UPoly& p0) {
  UPoly p = p0;
  trim(p);
  std::vector<Scalar> out;
  if (p.size() <= 1) return out;
  if (p[0].is_zero()) {
    out.push_back(Scalar(0));
    size_t k = 0;
    while (p[k].is_zero()) ++k;
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
    if (p.size() <= 1) return out;
  }
  const int ch = Field::characteristic();
  if (ch != 0) {
    const int range = ch <= 100000 ? ch : 101;
    for (int v = 0; v < range; ++v) {
      const Scalar x(ch <= 100000 ? v : v - 50);
      if (!x.is_zero() && eval(p, x).is_zero()) out.push_back(x);
    }
    return out;
  }
  // Rational root theorem on the integer multiple of p.
  std::int64_t lcm = 1;
  for (const auto& c : p) lcm = std::lcm(lcm, c.denominator());
  std::vector<std::int64_t> ints;
  for (const auto& c : p) ints.push_back((c * Scalar(lcm)).numerator());
  for (std::int64_t num : divisors(ints.front()))
    for (std::int64_t den : divisors(ints.back()))
      for (int sign : {1, -1}) {
        const Scalar x(sign * num, den);
        if (!eval(p, x).is_zero()) continue;
        bool seen = false;
        for (const auto& y : out) seen = seen || y == x;
        if (!seen) out.push_back(x);
      }
  return out;
}

UPoly minimal_polynomial(const FiniteAlgebra& a, const Vec& e, const Vec& x) {
  Echelon ech(a.dim, true);
  std::vector<Vec> powers{e};
  ech.add(e);
  Vec cur = e;
  for (int k = 1; k <= a.dim + 1; ++k) {
    cur = a.mul(x, cur);
    auto c = ech.express(cur);
    if (c) {
      UPoly m(static_cast<size_t>(k) + 1);
      m[k] = Scalar(1);
      for (size_t j = 0; j < c->size(); ++j) m[j] = -(*c)[j];
      return m;
    }
    ech.add(cur);
  }
  throw std::logic_error("minimal_polynomial: powers never became dependent");
}

namespace {

// Splits e by z if z has an eigenvalue in the field and another eigenvalue.
std::optional<Vec> split_by(const FiniteAlgebra& a, const Vec& e, const Vec& z) {
  const UPoly m = minimal_polynomial(a, e, z);
  const auto roots = field_roots(m);
  if (roots.empty()) return std::nullopt;
  const UPoly lin{-roots[0], Scalar(1)};
  UPoly g = m, h{Scalar(1)};
  while (true) {
    auto [q, r] = poly_divmod(g, lin);
    if (!r.empty()) break;
    g = std::move(q);
    h = poly_mul(h, lin);
  }
  if (g.size() <= 1) return std::nullopt;
  // u = 1 mod h and 0 mod g gives the projection onto the roots[0] part.
  const UPoly u = poly_mul(g, inverse_mod(g, h));
  return evaluate(a, e, u, z);
}

}  // namespace

std::vector<Vec> primitive_idempotents(const FiniteAlgebra& a) {
  std::vector<Vec> done, todo{a.one};
  while (!todo.empty()) {
    Vec e = std::move(todo.back());
    todo.pop_back();
    std::vector<Vec> corner;
    for (int i = 0; i < a.dim; ++i) {
      Vec b(a.dim);
      b[i] = Scalar(1);
      Vec c = a.mul(a.mul(e, b), e);
      if (!is_zero(c)) corner.push_back(std::move(c));
    }
    std::vector<Vec> cand = corner;
    for (size_t i = 0; i < corner.size(); ++i)
      for (size_t j = 0; j < corner.size(); ++j) {
        cand.push_back(a.mul(corner[i], corner[j]));
        if (i < j) {
          Vec s = corner[i];
          axpy(s, Scalar(1), corner[j]);
          cand.push_back(std::move(s));
        }
      }
    std::optional<Vec> piece;
    for (const auto& z : cand) {
      if (is_zero(z)) continue;
      piece = split_by(a, e, z);
      if (piece) break;
    }
    if (!piece) {
      done.push_back(std::move(e));
      continue;
    }
    Vec rest = e;
    axpy(rest, Scalar(-1), *piece);
    todo.push_back(std::move(*piece));
    todo.push_back(std::move(rest));
  }
  return done;
}

bool invertible_in_corner(const FiniteAlgebra& a, const Vec& e, const Vec& z) {
  Echelon span(a.dim), image(a.dim);
  for (int i = 0; i < a.dim; ++i) {
    Vec b(a.dim);
    b[i] = Scalar(1);
    const Vec c = a.mul(a.mul(e, b), e);
    if (span.add(c)) image.add(a.mul(z, c));
  }
  return image.rank() == span.rank();
}

}  // namespace kht
