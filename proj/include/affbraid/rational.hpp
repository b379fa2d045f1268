#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace affb {

// Exact rational. Values whose reduced numerator and denominator fit in
// int64 live inline; everything else is promoted to a shared immutable mpq.
// The representation is canonical: a value is "big" iff it does not fit.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : n_(v) {}
  Rational(long v) : n_(v) {}
  Rational(long long v) : n_(v) {}
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q) { *this = from_mpq(q); }

  static Rational parse(std::string_view s);

  bool is_zero() const { return !big_ && n_ == 0; }
  bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
  bool is_integer() const;
  bool is_small() const { return !big_; }
  int sign() const;

  // Only meaningful when is_small().
  std::int64_t small_num() const { return n_; }
  std::int64_t small_den() const { return d_; }

  mpq_class to_mpq() const;
  mpz_class num() const;
  mpz_class den() const;
  double to_double() const;
  std::string str() const;
  void append_key(std::string& out) const;
  std::size_t hash() const;

  Rational operator-() const;
  Rational inv() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  // this += a * k for a small integer k; the hot loop of cyclotomic reduction.
  void add_mul_int(const Rational& a, std::int64_t k);

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend int compare(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }

 private:
  std::int64_t n_ = 0;
  std::int64_t d_ = 1;
  std::shared_ptr<const mpq_class> big_;

  static Rational from_mpq(const mpq_class& q);
  static Rational from_i128(__int128 num, __int128 den);
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace affb
