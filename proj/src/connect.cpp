#include "affbraid/connect.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <unordered_map>

namespace affb {

namespace {

QMat qzero(int m) { return zero_mat<Rational>(m, m); }

bool commute(const QMat& a, const QMat& b) { return is_zero_mat<Rational>(matmul(a, b) - matmul(b, a)); }

const QMat* find(const ResidueFamily& r, int i, int j) {
  auto it = r.find({std::min(i, j), std::max(i, j)});
  return it == r.end() ? nullptr : &it->second;
}

}  // namespace

ResidueFamily residues_B(const ConnectionSpec& s) {
  const int m = s.n - 1;
  if (static_cast<int>(s.theta.size()) != m) throw Error(Errc::DimensionMismatch, "need theta_1 .. theta_{n-1}");
  ResidueFamily out;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      QMat b = qzero(m);
      b(i - 1, i - 1) = s.th(j);
      b(j - 1, j - 1) = s.th(i);
      b(i - 1, j - 1) = -s.th(i);
      b(j - 1, i - 1) = -s.th(j);
      out.emplace(PairIndex{i, j}, std::move(b));
    }
  return out;
}

ResidueFamily residues_C(const ConnectionSpec& s) {
  const int m = s.n - 2;
  if (static_cast<int>(s.theta.size()) != s.n - 1) throw Error(Errc::DimensionMismatch, "need theta_1 .. theta_{n-1}");
  if (s.th(1).is_zero()) throw Error(Errc::ThetaOneZero, "the quotient needs theta_1 != 0");
  ResidueFamily b = residues_B(s);
  ResidueFamily out;
  for (int i = 1; i <= s.n - 1; ++i)
    for (int j = i + 1; j <= s.n - 1; ++j) {
      QMat c = qzero(m);
      if (i == 1) {
        for (int k = 1; k <= m; ++k) c(k - 1, j - 2) = k == j - 1 ? s.th(j) + s.th(1) : s.th(k + 1);
      } else {
        c = b.at({i, j}).bottomRightCorner(m, m);
      }
      out.emplace(PairIndex{i, j}, std::move(c));
    }
  return out;
}

bool flatness_check(const ResidueFamily& r) {
  std::vector<int> idx;
  for (const auto& [p, m] : r) {
    idx.push_back(p.first);
    idx.push_back(p.second);
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      for (std::size_t c = b + 1; c < idx.size(); ++c) {
        const QMat* ij = find(r, idx[a], idx[b]);
        const QMat* ik = find(r, idx[a], idx[c]);
        const QMat* jk = find(r, idx[b], idx[c]);
        if (!ij || !ik || !jk) continue;
        if (!commute(*ij, *ik + *jk) || !commute(*ik, *ij + *jk) || !commute(*jk, *ij + *ik)) return false;
      }
  for (const auto& [p, m] : r)
    for (const auto& [q, n] : r) {
      if (p.first == q.first || p.first == q.second || p.second == q.first || p.second == q.second) continue;
      if (!commute(m, n)) return false;
    }
  return true;
}

double flatness_numeric(const ResidueFamily& r, const std::vector<int>& free_indices,
                        const std::map<int, std::complex<double>>& fixed, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::map<int, std::complex<double>> t = fixed;
  for (int a : free_indices) t[a] = {u(rng), u(rng)};
  if (r.empty()) return 0.0;
  const Eigen::Index m = r.begin()->second.rows();
  std::map<int, Eigen::MatrixXcd> omega;
  for (int a : free_indices) {
    Eigen::MatrixXcd o = Eigen::MatrixXcd::Zero(m, m);
    for (const auto& [p, res] : r) {
      const double s = a == p.first ? 1.0 : (a == p.second ? -1.0 : 0.0);
      if (s == 0.0) continue;
      o += to_numeric(to_cmat(res)) * (s / (t.at(p.first) - t.at(p.second)));
    }
    omega[a] = o;
  }
  double worst = 0;
  for (int a : free_indices)
    for (int b : free_indices) {
      Eigen::MatrixXcd c = omega[a] * omega[b] - omega[b] * omega[a];
      worst = std::max(worst, c.cwiseAbs().maxCoeff());
    }
  return worst;
}

LauricellaParams LauricellaParams::from_theta(const std::vector<Rational>& theta) {
  const int N = static_cast<int>(theta.size()) - 2;
  if (N < 1) throw Error(Errc::DimensionMismatch, "need at least three exponents");
  LauricellaParams p;
  Rational sum(0), partial(0);
  for (int i = 0; i < N + 2; ++i) {
    sum += theta[static_cast<std::size_t>(i)];
    if (i < N + 1) partial += theta[static_cast<std::size_t>(i)];
  }
  for (int i = 0; i < N; ++i) p.beta.push_back(-theta[static_cast<std::size_t>(i)]);
  p.alpha = -sum;
  p.gamma = Rational(1) - partial;
  return p;
}

ResidueFamily lauricella_E(const LauricellaParams& p) {
  const int N = p.N();
  auto beta = [&](int i) -> const Rational& { return p.beta.at(static_cast<std::size_t>(i - 1)); };
  ResidueFamily out;
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N + 2; ++j) {
      QMat e = qzero(N + 1);
      if (j <= N) {
        e(i, i) = -beta(j);
        e(j, j) = -beta(i);
        e(i, j) = beta(i);
        e(j, i) = beta(j);
      } else if (j == N + 1) {
        Rational s = Rational(1) - p.gamma;
        for (int m = 1; m <= N; ++m)
          if (m != i) s += beta(m);
        e(i, i) = s;
        e(0, i) = Rational(1);
        for (int k = 2; k <= N + 1; ++k)
          if (k != i + 1) e(k - 1, i) = -beta(k - 1);
      } else {
        e(i, i) = p.gamma - (p.alpha + beta(i) + Rational(1));
        e(i, 0) = -(p.alpha * beta(i));
        for (int l = 2; l <= N + 1; ++l)
          if (l != i + 1) e(i, l - 1) = -beta(i);
      }
      out.emplace(PairIndex{i, j}, std::move(e));
    }
  return out;
}

QMat G_matrix(const std::vector<Rational>& theta) {
  const int N = static_cast<int>(theta.size()) - 2;
  LauricellaParams p = LauricellaParams::from_theta(theta);
  Rational sb(0);
  for (const auto& b : p.beta) sb += b;
  if ((p.alpha * p.beta[0] * (p.gamma - Rational(1) - sb)).is_zero())
    throw Error(Errc::DegenerateParameters, "alpha beta_1 (gamma - 1 - sum beta) vanishes");
  auto th = [&](int i) -> const Rational& { return theta.at(static_cast<std::size_t>(i - 1)); };
  QMat g = qzero(N + 1);
  for (int j = 0; j <= N; ++j) g(0, j) = th(N + 1);
  g(0, N - 1) += p.alpha;
  for (int i = 2; i <= N + 1; ++i) g(i - 1, N - 1) += p.alpha * th(i - 1);
  for (int j = 1; j <= N - 1; ++j) g(j + 1, j - 1) += -(p.alpha * th(N + 1));
  return g;
}

GCheck check_G(const std::vector<Rational>& theta) {
  const int N = static_cast<int>(theta.size()) - 2;
  GCheck r;
  QMat g = G_matrix(theta);
  LauricellaParams p = LauricellaParams::from_theta(theta);
  ResidueFamily e = lauricella_E(p);
  ConnectionSpec spec{N + 3, theta};
  ResidueFamily c = residues_C(spec);
  r.intertwines = true;
  for (const auto& [ij, em] : e) {
    ++r.pairs_checked;
    if (!equal<Rational>(matmul(em, g), matmul(g, c.at(ij)))) r.intertwines = false;
  }
  r.det = det(g);
  Rational base = theta[0];
  Rational at = p.alpha * theta[static_cast<std::size_t>(N)];
  for (int k = 0; k < N; ++k) base *= at;
  r.det_formula = N % 2 == 0 ? base : -base;
  r.det_formula_alt = -r.det_formula;
  r.det_ok = r.det == r.det_formula;
  return r;
}

Cyclotomic exp_minus_2pi_i(const Rational& r) {
  if (!r.is_small()) throw Error(Errc::NotRootOfUnity, "exponent too large");
  const long long num = r.small_num(), den = r.small_den();
  long long k = (-num) % den;
  if (k < 0) k += den;
  return Cyclotomic::zeta(static_cast<int>(den), k);
}

std::optional<CMat> exp_rank_one(const QMat& c) {
  if (rank<Rational>(c) > 1) throw Error(Errc::DimensionMismatch, "residue of rank > 1");
  const Eigen::Index m = c.rows();
  CMat cc = to_cmat(c);
  Rational t = trace<Rational>(c);
  if (t.is_zero()) {
    if (is_zero_mat<Rational>(c)) return identity<Cyclotomic>(m);
    return std::nullopt;
  }
  Cyclotomic f = (exp_minus_2pi_i(t) - Cyclotomic(1)) * Cyclotomic(t.inv());
  CMat out = identity<Cyclotomic>(m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      if (!cc(i, j).is_zero()) out(i, j) = out(i, j) + f * cc(i, j);
  return out;
}

// ---------- numeric ----------

namespace {

struct PathEval {
  std::complex<double> x, dx;
};

PathEval eval_piece(const PathPiece& p, double s) {
  if (p.kind == PathPiece::Segment) return {p.a + s * (p.b - p.a), p.b - p.a};
  const std::complex<double> rel = p.b - p.a;
  const std::complex<double> rot = std::polar(1.0, 2.0 * std::numbers::pi * s);
  const std::complex<double> x = p.a + rel * rot;
  return {x, std::complex<double>(0, 2.0 * std::numbers::pi) * (x - p.a)};
}

Eigen::MatrixXcd rhs(const std::vector<Eigen::MatrixXcd>& res, const std::vector<std::complex<double>>& poles,
                     const PathPiece& piece, double s, const Eigen::MatrixXcd& z) {
  auto [x, dx] = eval_piece(piece, s);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(z.rows(), z.rows());
  for (std::size_t k = 0; k < poles.size(); ++k) a += res[k] * (dx / (x - poles[k]));
  return a * z;
}

Eigen::MatrixXcd rk4(const std::vector<Eigen::MatrixXcd>& res, const std::vector<std::complex<double>>& poles,
                     const PathPiece& piece, double s, double h, const Eigen::MatrixXcd& z) {
  Eigen::MatrixXcd k1 = rhs(res, poles, piece, s, z);
  Eigen::MatrixXcd k2 = rhs(res, poles, piece, s + h / 2, z + (h / 2) * k1);
  Eigen::MatrixXcd k3 = rhs(res, poles, piece, s + h / 2, z + (h / 2) * k2);
  Eigen::MatrixXcd k4 = rhs(res, poles, piece, s + h, z + h * k3);
  return z + (h / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

double dist_to_segment(std::complex<double> p, std::complex<double> a, std::complex<double> b) {
  const std::complex<double> d = b - a;
  const double len2 = std::norm(d);
  double t = len2 > 0 ? std::real(std::conj(d) * (p - a)) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

}  // namespace

Eigen::MatrixXcd transport(const std::vector<Eigen::MatrixXcd>& residues, const std::vector<std::complex<double>>& poles,
                           const std::vector<PathPiece>& path, const MonodromyOptions& opt, std::size_t* steps) {
  if (residues.size() != poles.size() || residues.empty())
    throw Error(Errc::DimensionMismatch, "one residue per pole is required");
  const Eigen::Index m = residues.front().rows();
  Eigen::MatrixXcd z = Eigen::MatrixXcd::Identity(m, m);
  std::size_t count = 0;
  for (const auto& piece : path) {
    double s = 0, h = 1.0 / 64;
    while (s < 1.0) {
      if (s + h > 1.0) h = 1.0 - s;
      Eigen::MatrixXcd big = rk4(residues, poles, piece, s, h, z);
      Eigen::MatrixXcd half = rk4(residues, poles, piece, s, h / 2, z);
      Eigen::MatrixXcd two = rk4(residues, poles, piece, s + h / 2, h / 2, half);
      const double err = (two - big).cwiseAbs().maxCoeff() / 15.0;
      const double scale = std::max(1.0, z.cwiseAbs().maxCoeff());
      const double target = opt.tol * scale;
      if (err <= target) {
        z = two + (two - big) / 15.0;
        s += h;
        if (++count > opt.max_steps) throw Error(Errc::IntegrationFailure, "too many steps");
      }
      const double fac = err > 0 ? 0.9 * std::pow(target / err, 0.2) : 4.0;
      h *= std::clamp(fac, 0.1, 4.0);
      if (h < opt.min_step && s < 1.0) throw Error(Errc::IntegrationFailure, "step size underflow");
    }
  }
  if (steps) *steps += count;
  return z;
}

MonodromyResult monodromy_numeric(const std::vector<Eigen::MatrixXcd>& residues,
                                  const std::vector<std::complex<double>>& poles, std::complex<double> base,
                                  const MonodromyOptions& opt) {
  if (poles.empty()) throw Error(Errc::DimensionMismatch, "no poles");
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poles.size(); ++i)
    for (std::size_t j = i + 1; j < poles.size(); ++j) gap = std::min(gap, std::abs(poles[i] - poles[j]));
  if (gap < 1e-9) throw Error(Errc::PoleTooClose, "coincident poles");
  if (!std::isfinite(gap)) gap = 2.0 * std::max(1.0, std::abs(base - poles[0]));
  const double r = opt.radius_factor * gap;
  MonodromyResult out;
  out.order.resize(poles.size());
  for (std::size_t i = 0; i < poles.size(); ++i) out.order[i] = i;
  std::stable_sort(out.order.begin(), out.order.end(),
                   [&](std::size_t a, std::size_t b) { return std::arg(poles[a] - base) < std::arg(poles[b] - base); });
  for (std::size_t idx : out.order) {
    const std::complex<double> p = poles[idx];
    const double d = std::abs(base - p);
    if (d <= 1.5 * r) throw Error(Errc::PoleTooClose, "base point too close to a pole");
    const std::complex<double> q = p + r * (base - p) / d;
    for (std::size_t k = 0; k < poles.size(); ++k) {
      if (k == idx) continue;
      if (dist_to_segment(poles[k], base, q) < 0.5 * r) throw Error(Errc::PoleTooClose, "loop path passes near another pole");
    }
    std::vector<PathPiece> path{{PathPiece::Segment, base, q}, {PathPiece::Circle, p, q}, {PathPiece::Segment, q, base}};
    out.loops.push_back(transport(residues, poles, path, opt, &out.steps));
  }
  return out;
}

std::size_t numeric_closure(const std::vector<Eigen::MatrixXcd>& gens, double tol, std::size_t bound) {
  if (gens.empty()) return 1;
  const Eigen::Index m = gens.front().rows();
  // projection onto fixed weights; elements within tol differ by at most tol * wsum
  std::vector<double> w(static_cast<std::size_t>(2 * m * m));
  double wsum = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    w[k] = 1.0 / (1.0 + 0.37 * static_cast<double>(k));
    wsum += w[k];
  }
  const double width = 4.0 * tol * wsum;
  auto proj = [&](const Eigen::MatrixXcd& a) {
    double v = 0;
    std::size_t k = 0;
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = 0; j < m; ++j) {
        v += w[k++] * a(i, j).real();
        v += w[k++] * a(i, j).imag();
      }
    return static_cast<long long>(std::floor(v / width));
  };
  std::vector<Eigen::MatrixXcd> elems{Eigen::MatrixXcd::Identity(m, m)};
  std::unordered_multimap<long long, std::size_t> buckets;
  buckets.emplace(proj(elems[0]), 0);
  auto lookup = [&](const Eigen::MatrixXcd& a) -> std::optional<std::size_t> {
    const long long b = proj(a);
    std::optional<std::size_t> hit;
    int close = 0;
    for (long long d = -1; d <= 1; ++d) {
      auto [lo, hi] = buckets.equal_range(b + d);
      for (auto it = lo; it != hi; ++it) {
        const double dist = (elems[it->second] - a).cwiseAbs().maxCoeff();
        if (dist < 2 * tol) ++close;
        if (dist < tol) hit = it->second;
      }
    }
    if (close > 1) throw Error(Errc::AmbiguousMatch, "two stored elements within 2 tol");
    return hit;
  };
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      Eigen::MatrixXcd p = g * elems[head];
      if (lookup(p)) continue;
      if (elems.size() >= bound) throw Error(Errc::BoundExceeded, "numeric closure exceeds " + std::to_string(bound));
      buckets.emplace(proj(p), elems.size());
      elems.push_back(std::move(p));
    }
  }
  return elems.size();
}

std::vector<Eigen::MatrixXcd> galois_example_residues(int rank, int sign) {
  std::vector<Eigen::MatrixXcd> out;
  for (int p = 0; p < rank; ++p) {
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(rank, rank);
    for (int i = 0; i < rank; ++i) d(i, p) = i == p ? 1.0 / 3.0 : 1.0 / 6.0;
    out.push_back(-static_cast<double>(sign) * d);
  }
  return out;
}

}  // namespace affb
