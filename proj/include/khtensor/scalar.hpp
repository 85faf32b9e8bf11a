#pragma once

/**
 * @file scalar.hpp
 * @brief Exact coefficients: rationals or a prime field, chosen at runtime.
 *
 * The characteristic is process-global (0 means Q).  Rationals are kept as
 * reduced int64 fractions; any intermediate that leaves the int64 range
 * raises std::overflow_error rather than silently wrapping.
 */

#include <cstdint>
#include <iosfwd>
#include <string>

namespace kht {

/// Global coefficient-field selector.
class Field {
 public:
  /// 0 selects the rationals; otherwise a prime p selects F_p.
  static void set(int characteristic);
  static int characteristic() noexcept { return char_; }
  static bool is_rational() noexcept { return char_ == 0; }
  /// Parses "q", "0", "2", "3", ... into a characteristic.
  static int parse(const std::string& name);
  static std::string name();

 private:
  static inline int char_ = 0;
};

/// Restores the previous field on scope exit.
class FieldScope {
 public:
  explicit FieldScope(int characteristic) : saved_(Field::characteristic()) {
    Field::set(characteristic);
  }
  ~FieldScope() { Field::set(saved_); }
  FieldScope(const FieldScope&) = delete;
  FieldScope& operator=(const FieldScope&) = delete;

 private:
  int saved_;
};

class Scalar {
 public:
  constexpr Scalar() noexcept = default;
  Scalar(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Scalar(std::int64_t num, std::int64_t den);

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_one() const noexcept { return num_ == 1 && den_ == 1; }
  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str() const;

 private:
  void normalize(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace kht
