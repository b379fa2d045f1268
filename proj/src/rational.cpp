#include "affbraid/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>

#include "affbraid/error.hpp"

namespace affb {

namespace {

using u128 = unsigned __int128;
constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(__int128 v) { return v > kMin && v <= kMax; }

mpz_class mpz_from_i128(__int128 v) {
  bool neg = v < 0;
  u128 m = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  mpz_class hi(static_cast<unsigned long>(m >> 64));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ParseError: return "ParseError";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::IndexError: return "IndexError";
    case Errc::NotRootOfUnity: return "NotRootOfUnity";
    case Errc::NotPureWord: return "NotPureWord";
    case Errc::ZeroScale: return "ZeroScale";
    case Errc::LinearPartFirstTrivial: return "LinearPartFirstTrivial";
    case Errc::InvalidLinearPart: return "InvalidLinearPart";
    case Errc::NotFiniteCase: return "NotFiniteCase";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::ThetaOneZero: return "ThetaOneZero";
    case Errc::DegenerateParameters: return "DegenerateParameters";
    case Errc::IntegrationFailure: return "IntegrationFailure";
    case Errc::PoleTooClose: return "PoleTooClose";
    case Errc::AmbiguousMatch: return "AmbiguousMatch";
    case Errc::CacheFormat: return "CacheFormat";
  }
  return "Unknown";
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  *this = from_i128(num, den);
}

Rational Rational::from_i128(__int128 num, __int128 den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  u128 an = num < 0 ? static_cast<u128>(-num) : static_cast<u128>(num);
  u128 g = gcd_u128(an, static_cast<u128>(den));
  if (g != 1) {
    num /= static_cast<__int128>(g);
    den /= static_cast<__int128>(g);
  }
  if (fits(num) && fits(den)) {
    Rational r;
    r.n_ = static_cast<std::int64_t>(num);
    r.d_ = static_cast<std::int64_t>(den);
    return r;
  }
  mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
  Rational r;
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::from_mpq(const mpq_class& q) {
  const mpz_srcptr nu = q.get_num_mpz_t();
  const mpz_srcptr de = q.get_den_mpz_t();
  if (mpz_fits_slong_p(nu) && mpz_fits_slong_p(de)) {
    long n = mpz_get_si(nu);
    long d = mpz_get_si(de);
    if (n != kMin) {
      Rational r;
      r.n_ = n;
      r.d_ = d;
      return r;
    }
  }
  Rational r;
  r.big_ = std::make_shared<const mpq_class>(q);
  return r;
}

Rational Rational::parse(std::string_view s) {
  auto slash = s.find('/');
  std::string nums(s.substr(0, slash));
  std::string dens = slash == std::string_view::npos ? "1" : std::string(s.substr(slash + 1));
  mpz_class n, d;
  if (n.set_str(nums, 10) != 0 || d.set_str(dens, 10) != 0) {
    throw Error(Errc::ParseError, "bad rational '" + std::string(s) + "'");
  }
  if (d == 0) throw Error(Errc::DivisionByZero, "zero denominator in '" + std::string(s) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return from_mpq(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : d_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (n_ > 0) - (n_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q;
  mpz_set_si(q.get_num_mpz_t(), n_);
  mpz_set_si(q.get_den_mpz_t(), d_);
  return q;
}

mpz_class Rational::num() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(n_)); }
mpz_class Rational::den() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(d_)); }

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(n_) / static_cast<double>(d_);
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  std::string s = std::to_string(n_);
  if (d_ != 1) {
    s += '/';
    s += std::to_string(d_);
  }
  return s;
}

void Rational::append_key(std::string& out) const {
  if (big_) {
    out += big_->get_str();
    return;
  }
  char buf[48];
  auto r = std::to_chars(buf, buf + sizeof buf, n_);
  out.append(buf, r.ptr);
  if (d_ != 1) {
    out += '/';
    r = std::to_chars(buf, buf + sizeof buf, d_);
    out.append(buf, r.ptr);
  }
}

std::size_t Rational::hash() const {
  if (big_) return std::hash<std::string>{}(big_->get_str());
  std::uint64_t h = static_cast<std::uint64_t>(n_) * 0x9E3779B97F4A7C15ull;
  h ^= static_cast<std::uint64_t>(d_) + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
  return static_cast<std::size_t>(h);
}

Rational Rational::operator-() const {
  if (big_) return from_mpq(-*big_);
  Rational r;
  r.n_ = -n_;  // n_ != INT64_MIN by invariant
  r.d_ = d_;
  return r;
}

Rational Rational::inv() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (big_) return from_mpq(1 / *big_);
  return from_i128(d_, n_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.d_ == 1 && b.d_ == 1) {
      std::int64_t r;
      if (!__builtin_add_overflow(a.n_, b.n_, &r) && r != kMin) return Rational(r);
    }
    if (a.n_ == 0) return b;
    if (b.n_ == 0) return a;
    __int128 num = static_cast<__int128>(a.n_) * b.d_ + static_cast<__int128>(b.n_) * a.d_;
    __int128 den = static_cast<__int128>(a.d_) * b.d_;
    return Rational::from_i128(num, den);
  }
  return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.n_ == 0 || b.n_ == 0) return Rational();
    if (a.d_ == 1 && b.d_ == 1) {
      std::int64_t r;
      if (!__builtin_mul_overflow(a.n_, b.n_, &r) && r != kMin) return Rational(r);
    }
    std::int64_t g1 = std::gcd(a.n_, b.d_);
    std::int64_t g2 = std::gcd(b.n_, a.d_);
    __int128 num = static_cast<__int128>(a.n_ / g1) * (b.n_ / g2);
    __int128 den = static_cast<__int128>(a.d_ / g2) * (b.d_ / g1);
    if (fits(num) && fits(den)) {
      Rational r;
      r.n_ = static_cast<std::int64_t>(num);
      r.d_ = static_cast<std::int64_t>(den);
      return r;
    }
    return Rational::from_i128(num, den);
  }
  return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inv(); }

void Rational::add_mul_int(const Rational& a, std::int64_t k) {
  if (k == 0 || a.is_zero()) return;
  if (!big_ && !a.big_ && d_ == 1 && a.d_ == 1) {
    std::int64_t p, s;
    if (!__builtin_mul_overflow(a.n_, k, &p) && !__builtin_add_overflow(n_, p, &s) && s != kMin) {
      n_ = s;
      return;
    }
  }
  *this = *this + a * Rational(static_cast<long long>(k));
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

int compare(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    __int128 l = static_cast<__int128>(a.n_) * b.d_;
    __int128 r = static_cast<__int128>(b.n_) * a.d_;
    return (l > r) - (l < r);
  }
  return cmp(a.to_mpq(), b.to_mpq());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace affb
