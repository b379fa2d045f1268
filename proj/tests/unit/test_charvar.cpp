#include "doctest.h"

#include <random>

#include "affbraid/charvar.hpp"
#include "oracles.hpp"

using namespace affb;

namespace {

LinearPart random_lin(std::mt19937& rng, int n, int N, bool nontrivial_first = true) {
  for (;;) {
    std::vector<Cyclotomic> l;
    Cyclotomic p(1);
    for (int i = 0; i < n - 1; ++i) {
      l.push_back(Cyclotomic::zeta(N, rng() % N));
      p *= l.back();
    }
    l.push_back(p.inv());
    if (nontrivial_first && l[0].is_one()) continue;
    return LinearPart(l);
  }
}

std::vector<Cyclotomic> random_tau(std::mt19937& rng, int m, int N) {
  std::vector<Cyclotomic> t;
  for (int i = 0; i < m; ++i) t.push_back(Cyclotomic(static_cast<int>(rng() % 5) - 2) + Cyclotomic::zeta(N, rng() % N));
  return t;
}

}  // namespace

TEST_SUITE("charvar") {
  TEST_CASE("linear part validation") {
    CHECK_THROWS_AS(LinearPart({Cyclotomic(2), Cyclotomic(Rational(1, 2))}), Error);
    CHECK_THROWS_AS(LinearPart({Cyclotomic::zeta(3), Cyclotomic(1)}), Error);
    LinearPart l({Cyclotomic::zeta(3), Cyclotomic(1), Cyclotomic::zeta(3, 2)});
    CHECK(l.iota() == 2);
    CHECK(l.conductor() % 3 == 0);
  }

  TEST_CASE("product relation and from_full") {
    std::mt19937 rng(4);
    LinearPart lin = random_lin(rng, 5, 12);
    AffineRep r(lin, random_tau(rng, 4, 12));
    auto f = r.full_tau();
    CHECK(AffineRep::from_full(lin, f).tau == r.tau);
    f.back() += Cyclotomic(1);
    CHECK_THROWS_AS(AffineRep::from_full(lin, f), Error);
  }

  TEST_CASE("normalize is invariant under conjugation") {
    std::mt19937 rng(6);
    for (int t = 0; t < 40; ++t) {
      int n = 4 + static_cast<int>(rng() % 3);
      LinearPart lin = random_lin(rng, n, 12);
      AffineRep r(lin, random_tau(rng, n - 1, 12));
      Cyclotomic a = Cyclotomic::zeta(12, rng() % 12) * Cyclotomic(1 + static_cast<int>(rng() % 3));
      Cyclotomic b = Cyclotomic(static_cast<int>(rng() % 5) - 2) + Cyclotomic::zeta(4);
      CHECK(normalize(conjugate(r, a, b)) == normalize(r));
    }
  }

  TEST_CASE("trivial first entry") {
    LinearPart lin({Cyclotomic(1), Cyclotomic::zeta(4), Cyclotomic(-1), Cyclotomic::zeta(4)});
    AffineRep r(lin, {Cyclotomic(1), Cyclotomic(0), Cyclotomic(1)});
    CHECK_THROWS_AS(normalize(r, false), Error);
    ProjClass c = normalize(r);
    CHECK(c.rotation != 0);
    CHECK(default_rotation(lin) == c.rotation);
    CHECK_THROWS_AS(action_matrix_reduced(lin, 1, 2), Error);
  }

  TEST_CASE("matrix action equals Hurwitz action") {
    std::mt19937 rng(8);
    for (int t = 0; t < 60; ++t) {
      int n = 4 + static_cast<int>(rng() % 3);
      LinearPart lin = random_lin(rng, n, 12);
      AffineRep r(lin, random_tau(rng, n - 1, 12));
      int i = 1 + static_cast<int>(rng() % (n - 2));
      int j = i + 1 + static_cast<int>(rng() % (n - 1 - i));
      AffineRep img = act_by_braid(pure_sigma_ij(n, i, j), r);
      CVec tv(n - 1);
      for (int k = 0; k < n - 1; ++k) tv(k) = r.tau[static_cast<std::size_t>(k)];
      CVec mv = matvec(action_matrix_full(lin, i, j), tv);
      for (int k = 0; k < n - 1; ++k) CHECK(mv(k) == img.tau[static_cast<std::size_t>(k)]);
      CHECK(equal(action_matrix_reduced(lin, i, j), section_matrix(lin, pure_sigma_ij(n, i, j))));
    }
  }

  TEST_CASE("exact orbits agree with the numeric oracle") {
    std::mt19937 rng(9);
    int checked = 0;
    for (int t = 0; t < 40 && checked < 12; ++t) {
      LinearPart lin = random_lin(rng, 4, 6);
      AffineRep r(lin, random_tau(rng, 3, 6));
      OrbitOptions o;
      o.bound = 300;
      OrbitResult ex = orbit(r, o);
      if (ex.exceeded_bound) continue;
      std::size_t num = oracle::numeric_orbit_size(oracle::embed_all(lin.values()), oracle::embed_all(r.full_tau()), 400);
      CHECK(num == ex.size);
      ++checked;
    }
    CHECK(checked > 0);
  }

  TEST_CASE("orbit witnesses reach their points") {
    LinearPart lin({Cyclotomic::zeta(12), Cyclotomic::zeta(12, 5), Cyclotomic::zeta(12, 3), Cyclotomic::zeta(12, 3)});
    AffineRep r(lin, {Cyclotomic(0), Cyclotomic(1), Cyclotomic(3)});
    OrbitOptions o;
    o.witnesses = true;
    OrbitResult res = orbit(r, o);
    CHECK(res.size == 12);
    ProjClass start = normalize(r);
    for (std::size_t k = 0; k < res.points.size(); ++k) CHECK(apply_braid(start, res.witnesses[k], lin) == res.points[k]);
  }

  TEST_CASE("bound is reported, not silently truncated") {
    LinearPart lin({Cyclotomic::zeta(5), Cyclotomic::zeta(5), Cyclotomic::zeta(5), Cyclotomic::zeta(5), Cyclotomic::zeta(5)});
    AffineRep r(lin, {Cyclotomic(0), Cyclotomic(1), Cyclotomic(2), Cyclotomic(5)});
    OrbitOptions o;
    o.bound = 50;
    CHECK(orbit(r, o).exceeded_bound);
  }
}
