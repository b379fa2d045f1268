#include "affbraid/cyclotomic.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>

#include "affbraid/error.hpp"

namespace affb {

namespace {

constexpr int kMaxConductor = 4096;

struct Field {
  int N = 1;
  int phi = 1;
  std::vector<std::int64_t> Phi;                            // monic, degree phi
  std::vector<std::pair<int, std::int64_t>> tail;           // nonzero Phi[i], i < phi
  std::vector<std::vector<std::int64_t>> pw;                // z^e reduced, 0 <= e < N
};

std::mutex g_field_mutex;
std::array<std::atomic<const Field*>, kMaxConductor + 1> g_fields{};

std::vector<std::int64_t> compute_phi(int N);

const Field& field(int N) {
  if (N < 1 || N > kMaxConductor) {
    throw Error(Errc::DimensionMismatch, "conductor " + std::to_string(N) + " out of range");
  }
  const Field* f = g_fields[N].load(std::memory_order_acquire);
  if (f) return *f;
  std::vector<std::int64_t> Phi = compute_phi(N);
  std::lock_guard<std::mutex> lock(g_field_mutex);
  f = g_fields[N].load(std::memory_order_acquire);
  if (f) return *f;
  auto* nf = new Field;  // lives for the program lifetime
  nf->N = N;
  nf->Phi = std::move(Phi);
  nf->phi = static_cast<int>(nf->Phi.size()) - 1;
  for (int i = 0; i < nf->phi; ++i) {
    if (nf->Phi[i] != 0) nf->tail.emplace_back(i, nf->Phi[i]);
  }
  nf->pw.assign(N, std::vector<std::int64_t>(nf->phi, 0));
  std::vector<std::int64_t> cur(nf->phi, 0);
  cur[0] = 1;
  for (int e = 0; e < N; ++e) {
    nf->pw[e] = cur;
    // multiply by z and reduce
    std::int64_t top = cur[nf->phi - 1];
    for (int i = nf->phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (auto [i, p] : nf->tail) {
        std::int64_t prod;
        if (__builtin_mul_overflow(top, p, &prod) || __builtin_sub_overflow(cur[i], prod, &cur[i])) {
          throw Error(Errc::DimensionMismatch, "power table overflow for conductor " + std::to_string(N));
        }
      }
    }
  }
  g_fields[N].store(nf, std::memory_order_release);
  return *nf;
}

// Divide x^N - 1 by Phi_d for every proper divisor d.
std::vector<std::int64_t> compute_phi(int N) {
  std::vector<std::int64_t> p(N + 1, 0);
  p[0] = -1;
  p[N] = 1;
  for (int d = 1; d < N; ++d) {
    if (N % d != 0) continue;
    const std::vector<std::int64_t>& q = field(d).Phi;
    int dq = static_cast<int>(q.size()) - 1;
    int dp = static_cast<int>(p.size()) - 1;
    std::vector<std::int64_t> quot(dp - dq + 1, 0);
    for (int k = dp; k >= dq; --k) {
      std::int64_t c = p[k];
      quot[k - dq] = c;
      if (c == 0) continue;
      for (int i = 0; i <= dq; ++i) p[k - dq + i] -= c * q[i];
    }
    p = std::move(quot);
  }
  return p;
}

Coeffs zeros(int n) { return Coeffs(static_cast<std::size_t>(n), Rational()); }

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int N) { return field(N).Phi; }

int euler_phi(int N) {
  int r = N;
  for (int p = 2, m = N; p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      r -= r / p;
    }
  }
  return r;
}

std::vector<int> divisors(int N) {
  std::vector<int> d;
  for (int i = 1; i <= N; ++i) {
    if (N % i == 0) d.push_back(i);
  }
  return d;
}

int lcm_conductor(int a, int b) { return std::lcm(a, b); }

Cyclotomic::Cyclotomic() : N_(1), c_(1, Rational()) {}

Cyclotomic::Cyclotomic(const Rational& r) : N_(1), c_(1, r) {}

Cyclotomic Cyclotomic::from_poly(int N, const std::vector<Rational>& poly) {
  const Field& f = field(N);
  Coeffs c = zeros(f.phi);
  for (std::size_t e = 0; e < poly.size(); ++e) {
    if (poly[e].is_zero()) continue;
    const auto& v = f.pw[e % N];
    for (int j = 0; j < f.phi; ++j) c[j].add_mul_int(poly[e], v[j]);
  }
  return Cyclotomic(N, std::move(c));
}

Cyclotomic Cyclotomic::zeta(int N, long long k) {
  if (N < 1) throw Error(Errc::IndexError, "zeta: conductor must be positive");
  const Field& f = field(N);
  long long e = ((k % N) + N) % N;
  Coeffs c = zeros(f.phi);
  for (int j = 0; j < f.phi; ++j) c[j] = Rational(static_cast<long long>(f.pw[e][j]));
  return Cyclotomic(N, std::move(c));
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return false;
  }
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && c_[0].is_one(); }

int Cyclotomic::nonzero_terms() const {
  int n = 0;
  for (const auto& x : c_) n += !x.is_zero();
  return n;
}

Cyclotomic Cyclotomic::promote(int M) const {
  if (M == N_) return *this;
  if (is_rational()) {
    // rationals live in every field, whatever conductor they were computed in
    Coeffs c = zeros(field(M).phi);
    c[0] = c_[0];
    return Cyclotomic(M, std::move(c));
  }
  if (M % N_ != 0) throw Error(Errc::DimensionMismatch, "cannot promote conductor " + std::to_string(N_) + " to " + std::to_string(M));
  const Field& f = field(M);
  Coeffs c = zeros(f.phi);
  int step = M / N_;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    const auto& v = f.pw[(k * step) % M];
    for (int j = 0; j < f.phi; ++j) c[j].add_mul_int(c_[k], v[j]);
  }
  return Cyclotomic(M, std::move(c));
}

Cyclotomic Cyclotomic::operator-() const {
  Coeffs c = c_;
  for (auto& x : c) x = -x;
  return Cyclotomic(N_, std::move(c));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.N_ == N_) {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
    }
    return *this;
  }
  if (o.is_rational()) {
    c_[0] += o.c_[0];
    return *this;
  }
  if (is_rational()) {
    Rational r = c_[0];
    *this = o;
    c_[0] += r;
    return *this;
  }
  int L = std::lcm(N_, o.N_);
  *this = promote(L);
  return *this += o.promote(L);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic r = a;
  r += b;
  return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic r = a;
  r += -b;
  return r;
}

Cyclotomic mul_same(const Cyclotomic& a, const Cyclotomic& b) {
  const Field& f = field(a.N_);
  const int phi = f.phi;
  boost::container::small_vector<Rational, 8> raw(static_cast<std::size_t>(2 * phi - 1), Rational());
  for (int i = 0; i < phi; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < phi; ++j) {
      if (b.c_[j].is_zero()) continue;
      raw[i + j] += a.c_[i] * b.c_[j];
    }
  }
  for (int k = 2 * phi - 2; k >= phi; --k) {
    if (raw[k].is_zero()) continue;
    Rational c = raw[k];
    for (auto [i, p] : f.tail) raw[k - phi + i].add_mul_int(c, -p);
  }
  Coeffs out(raw.begin(), raw.begin() + phi);
  return Cyclotomic(a.N_, std::move(out));
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (b.is_rational()) {
    const Rational& s = b.c_[0];
    if (s.is_one()) return a;
    Coeffs c = a.c_;
    for (auto& x : c) {
      if (!x.is_zero()) x *= s;
    }
    return Cyclotomic(a.N_, std::move(c));
  }
  if (a.is_rational()) return b * a;
  if (a.N_ == b.N_) return mul_same(a, b);
  int L = std::lcm(a.N_, b.N_);
  return mul_same(a.promote(L), b.promote(L));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inv(); }

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

int degree(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (!p[i].is_zero()) return i;
  }
  return -1;
}

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  r = a;
  int db = degree(b);
  int da = degree(r);
  q.assign(da >= db ? da - db + 1 : 1, Rational());
  Rational lead_inv = b[db].inv();
  for (int k = da; k >= db; --k) {
    if (r[k].is_zero()) continue;
    Rational c = r[k] * lead_inv;
    q[k - db] = c;
    for (int i = 0; i <= db; ++i) {
      if (!b[i].is_zero()) r[k - db + i] -= c * b[i];
    }
  }
  trim(r);
  trim(q);
}

Poly poly_sub_mul(const Poly& a, const Poly& q, const Poly& b) {
  Poly r(std::max(a.size(), q.size() + b.size() - 1), Rational());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j].is_zero()) r[i + j] -= q[i] * b[j];
    }
  }
  trim(r);
  return r;
}

}  // namespace

Cyclotomic Cyclotomic::inv() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero cyclotomic");
  if (is_rational()) return Cyclotomic(c_[0].inv());
  const Field& f = field(N_);
  if (nonzero_terms() == 1) {
    for (int k = 0; k < f.phi; ++k) {
      if (c_[k].is_zero()) continue;
      Rational s = c_[k].inv();
      const auto& v = f.pw[(N_ - k) % N_];
      Coeffs c = zeros(f.phi);
      for (int j = 0; j < f.phi; ++j) {
        if (v[j] != 0) c[j] = s * Rational(static_cast<long long>(v[j]));
      }
      return Cyclotomic(N_, std::move(c));
    }
  }
  Poly r0(f.Phi.size());
  for (std::size_t i = 0; i < f.Phi.size(); ++i) r0[i] = Rational(static_cast<long long>(f.Phi[i]));
  Poly r1(c_.begin(), c_.end());
  trim(r1);
  Poly s0{Rational()}, s1{Rational(1)};
  while (degree(r1) > 0) {
    Poly q, r;
    divmod(r0, r1, q, r);
    Poly s2 = poly_sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (degree(r1) < 0) throw Error(Errc::DivisionByZero, "non-invertible cyclotomic");
  Rational c = r1[0].inv();
  for (auto& x : s1) x *= c;
  return from_poly(N_, s1);
}

Cyclotomic Cyclotomic::pow(long long e) const {
  if (e < 0) return inv().pow(-e);
  Cyclotomic result(1);
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Cyclotomic Cyclotomic::galois(long long k) const {
  if (is_rational()) return *this;
  long long kk = ((k % N_) + N_) % N_;
  if (std::gcd(kk, static_cast<long long>(N_)) != 1) {
    throw Error(Errc::IndexError, "galois exponent not coprime to conductor");
  }
  const Field& f = field(N_);
  Coeffs c = zeros(f.phi);
  for (int j = 0; j < f.phi; ++j) {
    if (c_[j].is_zero()) continue;
    const auto& v = f.pw[(j * kk) % N_];
    for (int i = 0; i < f.phi; ++i) c[i].add_mul_int(c_[j], v[i]);
  }
  return Cyclotomic(N_, std::move(c));
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.N_ == b.N_) return a.c_ == b.c_;
  bool ar = a.is_rational();
  bool br = b.is_rational();
  if (ar && br) return a.c_[0] == b.c_[0];
  if (ar != br) return false;
  int L = std::lcm(a.N_, b.N_);
  return a.promote(L).c_ == b.promote(L).c_;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> s = 0;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    s += c_[k].to_double() * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / N_);
  }
  return s;
}

std::string Cyclotomic::str() const {
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    Rational shown = c;
    if (!first) {
      out += c.sign() < 0 ? " - " : " + ";
      shown = c.abs();
    }
    out += shown.str();
    if (k > 0) {
      out += "*z" + std::to_string(N_) + "^" + std::to_string(k);
    }
    first = false;
  }
  return first ? "0" : out;
}

void Cyclotomic::append_key(std::string& out) const {
  out += std::to_string(N_);
  out += '|';
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (k) out += ',';
    c_[k].append_key(out);
  }
}

std::optional<long long> order_of_root(const Cyclotomic& x) {
  if (x.is_zero()) return std::nullopt;
  if (!(x * x.conj()).is_one()) return std::nullopt;
  int M = std::lcm(2, x.conductor());
  for (int d : divisors(M)) {
    if (x.pow(d).is_one()) return d;
  }
  return std::nullopt;
}

Cyclotomic sqrt_of_root(const Cyclotomic& x) {
  auto m = order_of_root(x);
  if (!m) throw Error(Errc::NotRootOfUnity, "sqrt_of_root of " + x.str());
  int M = static_cast<int>(*m);
  for (int k = 0; k < M; ++k) {
    if (std::gcd(k, M) != 1 && M != 1) continue;
    if (Cyclotomic::zeta(M, k) == x) return Cyclotomic::zeta(2 * M, k);
  }
  throw Error(Errc::NotRootOfUnity, "sqrt_of_root: exponent search failed for " + x.str());
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.str(); }

}  // namespace affb
