#include "doctest.h"

#include <random>

#include "affbraid/cyclotomic.hpp"
#include "affbraid/rational.hpp"
#include "oracles.hpp"

using namespace affb;

TEST_SUITE("cyclo") {
  TEST_CASE("rational basics and overflow promotion") {
    Rational a(1, 3), b(-2, 6);
    CHECK(a + b == Rational(0));
    CHECK((a * Rational(3)).is_one());
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational::parse("-7/21") == Rational(-1, 3));
    Rational big(1);
    for (int i = 0; i < 5; ++i) big *= Rational(1000000007LL);
    CHECK_FALSE(big.is_small());
    CHECK((big / big).is_one());
    CHECK((big - big).is_zero());
    CHECK(Rational(std::numeric_limits<long long>::max()) + Rational(1) > Rational(0));
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  }

  TEST_CASE("cyclotomic polynomials agree with the Moebius product") {
    for (int N = 1; N <= 60; ++N) CHECK(cyclotomic_polynomial(N) == oracle::cyclotomic_poly_mobius(N));
    CHECK(euler_phi(60) == 16);
  }

  TEST_CASE("embedding is a ring homomorphism") {
    std::mt19937 rng(11);
    const int Ns[] = {3, 4, 5, 8, 12, 15, 24, 60};
    for (int t = 0; t < 200; ++t) {
      int N = Ns[rng() % 8];
      auto rnd = [&] {
        std::vector<Rational> p;
        for (int k = 0; k < N; ++k) p.push_back(Rational(static_cast<long long>(rng() % 7) - 3, 1 + rng() % 3));
        return Cyclotomic::from_poly(N, p);
      };
      Cyclotomic x = rnd(), y = rnd();
      auto ex = oracle::embed(x), ey = oracle::embed(y);
      CHECK(std::abs(oracle::embed(x * y) - ex * ey) < 1e-9);
      CHECK(std::abs(oracle::embed(x + y) - (ex + ey)) < 1e-9);
      CHECK(std::abs(oracle::embed(x.conj()) - std::conj(ex)) < 1e-9);
      CHECK(std::abs(x.to_complex() - ex) < 1e-9);
      if (!x.is_zero()) {
        CHECK((x * x.inv()).is_one());
        CHECK(std::abs(oracle::embed(x.inv()) - 1.0 / ex) < 1e-6 * (1 + std::abs(1.0 / ex)));
      }
    }
  }

  TEST_CASE("mixed conductors and promotion") {
    Cyclotomic w = Cyclotomic::zeta(3), i = Cyclotomic::zeta(4);
    Cyclotomic z12 = Cyclotomic::zeta(12);
    CHECK(w * i == z12.pow(7));
    CHECK(w.pow(3).is_one());
    CHECK(w + w.pow(2) == Cyclotomic(-1));
    CHECK(w.promote(12) == w);
    CHECK(Cyclotomic::zeta(6) == -w.pow(2));
    // a rational computed in a larger field still promotes anywhere
    CHECK(Cyclotomic::zeta(2).promote(1) == Cyclotomic(-1));
    CHECK(Cyclotomic::zeta(2).promote(3) == Cyclotomic(-1));
  }

  TEST_CASE("roots of unity") {
    CHECK(order_of_root(Cyclotomic::zeta(12, 5)) == 12);
    CHECK(order_of_root(Cyclotomic(-1)) == 2);
    CHECK_FALSE(order_of_root(Cyclotomic(2)).has_value());
    CHECK_FALSE(order_of_root(Cyclotomic::zeta(5) + Cyclotomic(1)).has_value());
    Cyclotomic s = sqrt_of_root(Cyclotomic::zeta(5, 2));
    CHECK(s * s == Cyclotomic::zeta(5, 2));
  }

  TEST_CASE("galois action") {
    Cyclotomic z = Cyclotomic::zeta(8);
    CHECK(z.galois(3) == z.pow(3));
    CHECK((z + Cyclotomic(2)).galois(5) == z.pow(5) + Cyclotomic(2));
  }

  TEST_CASE("parser") {
    CHECK(parse_cyclo("z12^5") == Cyclotomic::zeta(12, 5));
    CHECK(parse_cyclo("1/2") == Cyclotomic(Rational(1, 2)));
    CHECK(parse_cyclo("-1 - 1*z3^1") == Cyclotomic::zeta(3, 2));
    CHECK(parse_cyclo("(1 + z4)*(1 - z4)") == Cyclotomic(2));
    std::mt19937 rng(5);
    for (int t = 0; t < 50; ++t) {
      std::vector<Rational> p;
      for (int k = 0; k < 6; ++k) p.push_back(Rational(static_cast<long long>(rng() % 9) - 4, 1 + rng() % 4));
      Cyclotomic x = Cyclotomic::from_poly(15, p);
      CHECK(parse_cyclo(x.str()) == x);
    }
    CHECK_THROWS_AS(parse_cyclo("1 +"), ParseError);
    CHECK_THROWS_AS(parse_cyclo("z0"), Error);
    try {
      parse_cyclo("2 * * 3");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 4);
      CHECK_FALSE(e.expected().empty());
    }
  }
}
