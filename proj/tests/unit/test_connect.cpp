#include "doctest.h"

#include <random>

#include "affbraid/charvar.hpp"
#include "affbraid/connect.hpp"

using namespace affb;

namespace {

std::vector<Rational> random_theta(std::mt19937& rng, int count) {
  std::vector<Rational> t;
  for (int i = 0; i < count; ++i) {
    long long num = static_cast<long long>(rng() % 11) - 5;
    if (num == 0) num = 1;
    t.push_back(Rational(num, 2 + rng() % 7));
  }
  return t;
}

}  // namespace

TEST_SUITE("connect") {
  TEST_CASE("flatness of the B and C residues") {
    std::mt19937 rng(21);
    for (int n : {4, 5, 6}) {
      ConnectionSpec s{n, random_theta(rng, n - 1)};
      auto B = residues_B(s);
      auto C = residues_C(s);
      CHECK(flatness_check(B));
      CHECK(flatness_check(C));
      CHECK(flatness_numeric(B, {}, {}, 1) < 1e-9);
    }
    ConnectionSpec z{5, {0, Rational(1, 3), Rational(1, 4), Rational(1, 5)}};
    CHECK_THROWS_AS(residues_C(z), Error);
  }

  TEST_CASE("flatness detects a perturbed residue") {
    ConnectionSpec s{5, {Rational(1, 3), Rational(1, 4), Rational(1, 5), Rational(1, 7)}};
    auto B = residues_B(s);
    B.begin()->second(0, 1) += Rational(1);
    CHECK_FALSE(flatness_check(B));
  }

  TEST_CASE("Lauricella residues and G") {
    std::mt19937 rng(22);
    for (int N : {1, 2, 3}) {
      auto theta = random_theta(rng, N + 2);
      LauricellaParams p = LauricellaParams::from_theta(theta);
      CHECK(p.N() == N);
      CHECK(p.beta[0] == -theta[0]);
      auto E = lauricella_E(p);
      CHECK(flatness_numeric(E, [&] {
              std::vector<int> f;
              for (int i = 1; i <= N; ++i) f.push_back(i);
              return f;
            }(), {{N + 1, 0.0}, {N + 2, 1.0}}, 3) < 1e-9);
      GCheck g = check_G(theta);
      CHECK(g.intertwines);
      CHECK(g.det == g.det_formula);
      CHECK(g.det_ok);
    }
  }

  TEST_CASE("degenerate parameters") {
    CHECK_THROWS_AS(G_matrix({0, Rational(1, 3), Rational(1, 4)}), Error);
  }

  TEST_CASE("exponential of a rank-one residue") {
    ConnectionSpec s{5, {Rational(1, 6), Rational(1, 6), Rational(1, 6), Rational(1, 6)}};
    auto B = residues_B(s);
    auto e = exp_rank_one(B.at({1, 2}));
    REQUIRE(e.has_value());
    auto info = is_complex_reflection(*e);
    CHECK(info.is_reflection);
    CHECK(info.eigenvalue == exp_minus_2pi_i(Rational(1, 3)));
    CHECK(exp_minus_2pi_i(Rational(1, 2)) == Cyclotomic(-1));
    QMat nil = zero_mat<Rational>(2, 2);
    nil(0, 1) = 1;
    CHECK_FALSE(exp_rank_one(nil).has_value());
  }

  TEST_CASE("numeric monodromy of the rank-3 example") {
    auto res = galois_example_residues(3, 1);
    MonodromyResult m = monodromy_numeric(res, {{-1, 0}, {0, 0}, {1, 0}}, {0.3, -2.0});
    REQUIRE(m.loops.size() == 3);
    for (const auto& L : m.loops) {
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(L);
      int ones = 0, cubes = 0;
      for (int k = 0; k < 3; ++k) {
        auto ev = es.eigenvalues()(k);
        if (std::abs(ev - 1.0) < 1e-8) ++ones;
        if (std::abs(ev - std::polar(1.0, -2.0 * M_PI / 3.0)) < 1e-8) ++cubes;
      }
      CHECK(ones == 2);
      CHECK(cubes == 1);
    }
    CHECK(numeric_closure(m.loops, 1e-6, 1000) == 648);
  }

  TEST_CASE("pole guard") {
    auto res = galois_example_residues(3, 1);
    CHECK_THROWS_AS(monodromy_numeric(res, {{-1, 0}, {0, 0}, {1, 0}}, {1.0, 0.0}), Error);
  }
}
