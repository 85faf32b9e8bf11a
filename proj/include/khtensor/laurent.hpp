#pragma once

/**
 * @file laurent.hpp
 * @brief Integer Laurent polynomials in q, and truncated power series
 * division for the projector expansions.
 */

#include <cstdint>
#include <map>
#include <string>

namespace kht {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  /// c q^e.
  static LaurentPoly monomial(int e, std::int64_t c = 1);
  /// Graded dimension map degree -> count read as a polynomial.
  static LaurentPoly from_dims(const std::map<int, int>& dims);
  /// [n] = q^{1-n} + q^{3-n} + ... + q^{n-1}.
  static LaurentPoly quantum_integer(int n);

  bool is_zero() const { return c_.empty(); }
  std::int64_t coeff(int e) const;
  const std::map<int, std::int64_t>& terms() const { return c_; }
  int min_degree() const;
  int max_degree() const;
  /// Value at q = 1.
  std::int64_t at_one() const;
  /// q -> q^{-1}.
  LaurentPoly bar() const;
  /// Drop every term of degree above e.
  LaurentPoly truncated(int e) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly shifted(int e) const;  // times q^e
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// "q^-1 + q", "0" for zero; terms in increasing degree.
  std::string str() const;

 private:
  void add(int e, std::int64_t c);
  std::map<int, std::int64_t> c_;
};

/// Power series a / b in q, with every term of degree <= max_degree.  The
/// lowest coefficient of b must be +1 or -1.
LaurentPoly series_divide(const LaurentPoly& a, const LaurentPoly& b, int max_degree);

}  // namespace kht
