#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "affbraid/linalg.hpp"

namespace affb {

using PairIndex = std::pair<int, int>;
// Residues R^{i,j} attached to d(t_i - t_j)/(t_i - t_j), 1-based indices.
using ResidueFamily = std::map<PairIndex, QMat>;

struct ConnectionSpec {
  int n = 0;
  std::vector<Rational> theta;  // theta_1 .. theta_{n-1}
  const Rational& th(int i) const { return theta.at(static_cast<std::size_t>(i - 1)); }
};

// (n-1)x(n-1) residues of the linearized system, 1 <= i < j <= n-1.
ResidueFamily residues_B(const ConnectionSpec& s);
// (n-2)x(n-2) residues of the quotient by the line through (theta_1, ..., theta_{n-1}); needs theta_1 != 0.
ResidueFamily residues_C(const ConnectionSpec& s);

// Commutator identities for the arrangement of diagonals t_i = t_j among points 1..m:
// [R^{ij}, R^{ik} + R^{jk}] = 0 and cyclic variants for every triple present in the family,
// [R^{ij}, R^{kl}] = 0 for disjoint pairs.
bool flatness_check(const ResidueFamily& r);
// max |[Omega_a, Omega_b]| at a random point; fixed positions pin some t's (e.g. 0 and 1).
double flatness_numeric(const ResidueFamily& r, const std::vector<int>& free_indices,
                        const std::map<int, std::complex<double>>& fixed, std::uint64_t seed);

struct LauricellaParams {
  Rational alpha;
  std::vector<Rational> beta;  // beta_1 .. beta_N
  Rational gamma;
  int N() const { return static_cast<int>(beta.size()); }
  // beta_i = -theta_i, alpha = -sum theta, gamma = 1 - sum_{i <= n-2} theta_i with n = N + 3.
  static LauricellaParams from_theta(const std::vector<Rational>& theta);
};

// (N+1)x(N+1) residues E^{i,j} for 1 <= i <= N, i < j <= N+2.
ResidueFamily lauricella_E(const LauricellaParams& p);

// G = K + L + M for theta_1..theta_{N+2}; throws DegenerateParameters unless alpha beta_1 (gamma - 1 - sum beta) != 0.
QMat G_matrix(const std::vector<Rational>& theta);

struct GCheck {
  bool intertwines = false;  // E^{i,j} G = G C^{i,j} for all i <= N
  int pairs_checked = 0;
  Rational det;
  Rational det_formula;        // (-1)^N theta_1 (alpha theta_{N+1})^N
  Rational det_formula_alt;    // sign (-1)^{N+1}
  bool det_ok = false;
};
GCheck check_G(const std::vector<Rational>& theta);

// exp(-2 pi i C) for rank <= 1 C with rational trace t != 0: I + (e^{-2 pi i t} - 1)/t C.
// nullopt when C is nilpotent and nonzero (the exponential then leaves the cyclotomic world).
std::optional<CMat> exp_rank_one(const QMat& c);
// e^{-2 pi i r} for rational r.
Cyclotomic exp_minus_2pi_i(const Rational& r);

// ---------- numeric monodromy ----------

struct MonodromyOptions {
  double tol = 1e-12;        // local error target per step
  double radius_factor = 0.5;  // loop radius = factor * min gap between poles
  double min_step = 1e-14;
  std::size_t max_steps = 2000000;
};

struct MonodromyResult {
  std::vector<Eigen::MatrixXcd> loops;  // one per pole, in the order of `order`
  std::vector<std::size_t> order;       // indices of poles sorted by angle from the base point
  std::size_t steps = 0;
};

// dZ/dx = sum_p A_p / (x - p) Z; each loop goes straight to a small circle around the pole,
// turns once counterclockwise and returns.
MonodromyResult monodromy_numeric(const std::vector<Eigen::MatrixXcd>& residues,
                                  const std::vector<std::complex<double>>& poles, std::complex<double> base,
                                  const MonodromyOptions& opt = {});

// Transport along a closed polygon-plus-circles path given by sample callback x(s), x'(s), s in [0,1].
struct PathPiece {
  enum Kind { Segment, Circle } kind = Segment;
  std::complex<double> a, b;  // segment endpoints, or circle center and start point
};
Eigen::MatrixXcd transport(const std::vector<Eigen::MatrixXcd>& residues, const std::vector<std::complex<double>>& poles,
                           const std::vector<PathPiece>& path, const MonodromyOptions& opt, std::size_t* steps = nullptr);

// Group closure with approximate matching (max entry distance < tol).
std::size_t numeric_closure(const std::vector<Eigen::MatrixXcd>& gens, double tol, std::size_t bound);

// Residues of the rank-3 (n = 5) or rank-4 (n = 6) example with theta = sign * 1/6: A_p = -sign * D_p,
// D_p the displayed matrix with 1/3 on the diagonal slot p and 1/6 elsewhere in column p.
std::vector<Eigen::MatrixXcd> galois_example_residues(int rank, int sign = 1);

}  // namespace affb
