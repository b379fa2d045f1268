#pragma once

#include <boost/container/small_vector.hpp>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "affbraid/rational.hpp"

namespace affb {

using Coeffs = boost::container::small_vector<Rational, 4>;

// Integer polynomial, lowest degree first.
std::vector<std::int64_t> cyclotomic_polynomial(int N);
int euler_phi(int N);
std::vector<int> divisors(int N);

// Element of Q(zeta_N), zeta_N = exp(2 pi i / N), stored in the power basis
// 1, z, ..., z^(phi(N)-1) reduced modulo Phi_N.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(int v) : Cyclotomic(Rational(v)) {}
  Cyclotomic(long v) : Cyclotomic(Rational(v)) {}
  Cyclotomic(long long v) : Cyclotomic(Rational(v)) {}
  Cyclotomic(const Rational& r);

  // Reduces an arbitrary-length polynomial in zeta_N.
  static Cyclotomic from_poly(int N, const std::vector<Rational>& poly);
  static Cyclotomic zeta(int N, long long k = 1);

  int conductor() const { return N_; }
  const Coeffs& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational rational_part() const { return c_[0]; }
  int nonzero_terms() const;

  Cyclotomic promote(int M) const;

  Cyclotomic operator-() const;
  Cyclotomic inv() const;
  Cyclotomic pow(long long e) const;
  Cyclotomic conj() const;
  Cyclotomic galois(long long k) const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  std::complex<double> to_complex() const;
  std::string str() const;
  // Conductor-tagged key; only comparable between elements of equal conductor.
  void append_key(std::string& out) const;

 private:
  int N_ = 1;
  Coeffs c_;

  Cyclotomic(int N, Coeffs c) : N_(N), c_(std::move(c)) {}
  friend Cyclotomic mul_same(const Cyclotomic& a, const Cyclotomic& b);
};

std::optional<long long> order_of_root(const Cyclotomic& x);
Cyclotomic sqrt_of_root(const Cyclotomic& x);
Cyclotomic parse_cyclo(std::string_view text);

int lcm_conductor(int a, int b);

inline Cyclotomic inv(const Cyclotomic& x) { return x.inv(); }
inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline Rational inv(const Rational& x) { return x.inv(); }
// Pivot preference in elimination: cheaper elements first.
inline int pivot_cost(const Rational&) { return 0; }
inline int pivot_cost(const Cyclotomic& x) { return x.nonzero_terms(); }

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

}  // namespace affb
