#include "khtensor/scalar.hpp"

#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace kht {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return t;
}

}  // namespace

void Field::set(int characteristic) {
  if (characteristic != 0 && !is_prime(characteristic))
    throw std::invalid_argument("field characteristic must be 0 or prime");
  char_ = characteristic;
}

int Field::parse(const std::string& name) {
  if (name == "q" || name == "Q" || name == "0") return 0;
  char* end = nullptr;
  long p = std::strtol(name.c_str(), &end, 10);
  if (end == name.c_str() || *end != '\0' || !is_prime(static_cast<int>(p)))
    throw std::invalid_argument("unknown field '" + name + "'");
  return static_cast<int>(p);
}

std::string Field::name() { return char_ == 0 ? "q" : std::to_string(char_); }

Scalar::Scalar(std::int64_t n) { normalize(n, 1); }

Scalar::Scalar(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  normalize(num, den);
}

void Scalar::normalize(__int128 num, __int128 den) {
  const int p = Field::characteristic();
  if (p != 0) {
    __int128 n = num % p;
    if (n < 0) n += p;
    __int128 d = den % p;
    if (d < 0) d += p;
    if (d == 0) throw std::domain_error("denominator vanishes mod p");
    num_ = static_cast<std::int64_t>(n);
    den_ = 1;
    if (d != 1)
      num_ = static_cast<std::int64_t>(
          (n * mod_inverse(static_cast<std::int64_t>(d), p)) % p);
    return;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    return;
  }
  __int128 g = gcd128(num, den);
  num /= g;
  den /= g;
  if (num > kMax || num < -kMax || den > kMax)
    throw std::overflow_error("rational coefficient exceeds int64 range");
  num_ = static_cast<std::int64_t>(num);
  den_ = static_cast<std::int64_t>(den);
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.normalize(-static_cast<__int128>(num_), den_);
  return r;
}

Scalar Scalar::inverse() const {
  if (num_ == 0) throw std::domain_error("inverse of zero");
  Scalar r;
  r.normalize(den_, num_);
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (Field::characteristic() != 0) {
    normalize(static_cast<__int128>(num_) + o.num_, 1);
  } else if (den_ == 1 && o.den_ == 1) {
    normalize(static_cast<__int128>(num_) + o.num_, 1);
  } else {
    normalize(static_cast<__int128>(num_) * o.den_ +
                  static_cast<__int128>(o.num_) * den_,
              static_cast<__int128>(den_) * o.den_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  normalize(static_cast<__int128>(num_) * o.num_,
            static_cast<__int128>(den_) * o.den_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string Scalar::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

}  // namespace kht
