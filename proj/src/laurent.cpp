#include "khtensor/laurent.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace kht {

LaurentPoly LaurentPoly::monomial(int e, std::int64_t c) {
  LaurentPoly p;
  p.add(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_dims(const std::map<int, int>& dims) {
  LaurentPoly p;
  for (const auto& [d, n] : dims) p.add(d, n);
  return p;
}

LaurentPoly LaurentPoly::quantum_integer(int n) {
  LaurentPoly p;
  for (int j = 0; j < n; ++j) p.add(1 - n + 2 * j, 1);
  return p;
}

std::int64_t LaurentPoly::coeff(int e) const {
  auto it = c_.find(e);
  return it == c_.end() ? 0 : it->second;
}

int LaurentPoly::min_degree() const {
  if (c_.empty()) throw std::domain_error("LaurentPoly: zero has no degree");
  return c_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (c_.empty()) throw std::domain_error("LaurentPoly: zero has no degree");
  return c_.rbegin()->first;
}

std::int64_t LaurentPoly::at_one() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : c_) s += c;
  return s;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  for (const auto& [e, c] : c_) p.add(-e, c);
  return p;
}

LaurentPoly LaurentPoly::truncated(int e) const {
  LaurentPoly p;
  for (const auto& [d, c] : c_)
    if (d <= e) p.add(d, c);
  return p;
}

void LaurentPoly::add(int e, std::int64_t c) {
  if (c == 0) return;
  auto [it, fresh] = c_.try_emplace(e, 0);
  if (__builtin_add_overflow(it->second, c, &it->second)) throw std::overflow_error("LaurentPoly: coefficient overflow");
  if (it->second == 0) c_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) add(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) add(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly p;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) {
      std::int64_t c;
      if (__builtin_mul_overflow(c1, c2, &c)) throw std::overflow_error("LaurentPoly: coefficient overflow");
      p.add(e1 + e2, c);
    }
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [e, c] : c_) p.add(e, -c);
  return p;
}

LaurentPoly LaurentPoly::shifted(int e) const {
  LaurentPoly p;
  for (const auto& [d, c] : c_) p.add(d + e, c);
  return p;
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : c_) {
    std::int64_t a = c;
    if (!first) {
      out << (c < 0 ? " - " : " + ");
      a = c < 0 ? -c : c;
    } else if (c < 0 && e != 0) {
      out << "-";
      a = -c;
    }
    first = false;
    if (e == 0) {
      out << a;
      continue;
    }
    if (a != 1) out << a << "*";
    out << "q";
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

LaurentPoly series_divide(const LaurentPoly& a, const LaurentPoly& b, int max_degree) {
  if (b.is_zero()) throw std::domain_error("series_divide: division by zero");
  const int b0 = b.min_degree();
  const std::int64_t lead = b.coeff(b0);
  if (lead != 1 && lead != -1) throw std::domain_error("series_divide: lowest coefficient is not a unit");
  LaurentPoly rest = a, out;
  while (!rest.is_zero()) {
    const int e = rest.min_degree();
    const int d = e - b0;
    if (d > max_degree) break;
    const LaurentPoly term = LaurentPoly::monomial(d, rest.coeff(e) * lead);
    out += term;
    rest -= term * b;
  }
  return out;
}

}  // namespace kht
