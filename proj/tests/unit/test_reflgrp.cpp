#include "doctest.h"

#include <random>

#include "affbraid/charvar.hpp"
#include "affbraid/reflgrp.hpp"

using namespace affb;

TEST_SUITE("reflgrp") {
  TEST_CASE("Eisenstein matrix encoding round trips") {
    for (const auto& g : g32_generators()) {
      auto e = to_eis(g);
      REQUIRE(e.has_value());
      CHECK(equal(from_eis(*e), g));
    }
    CMat bad = cmat({{Cyclotomic::zeta(5)}});
    CHECK_FALSE(to_eis(bad).has_value());
    auto a = *to_eis(g25_generators()[0]);
    auto b = *to_eis(g25_generators()[1]);
    CHECK(equal(from_eis(eis_mul(a, b)), matmul(g25_generators()[0], g25_generators()[1])));
  }

  TEST_CASE("closure respects its bound") {
    CHECK_THROWS_AS(closure(g25_generators(), 100), Error);
    CHECK(closure(g25_generators(), 648).size() == 648);
  }

  TEST_CASE("G25") {
    const ReflGroup& g = g25();
    CHECK(g.order() == 648);
    CHECK(g.reflections.size() == 24);
    CHECK(g.hyperplanes.size() == 12);
    CHECK(g.proper_planes.size() == 9);
    long long prod = 1;
    for (int d : g.degrees) prod *= d;
    CHECK(prod == 648);
    for (auto r : g.reflections) {
      auto info = is_complex_reflection(g.element(r));
      CHECK(info.is_reflection);
      CHECK(info.eigenvalue.pow(3).is_one());
    }
  }

  TEST_CASE("G25 symmetries of the Hessian polyhedron") {
    CHECK(hessian_vertices().size() == 27);
    CHECK(symmetry_check(g25_generators(), hessian_vertices()));
  }

  TEST_CASE("G32") {
    const ReflGroup& g = g32();
    CHECK(g.order() == 155520);
    CHECK(g.reflections.size() == 80);
    CHECK(g.hyperplanes.size() == 40);
    CHECK(g.proper_planes.size() == 540);
    long long prod = 1;
    for (int d : g.degrees) prod *= d;
    CHECK(prod == 155520);
  }

  TEST_CASE("Witting polytope") {
    CHECK(witting_vertices().size() == 240);
    CHECK(symmetry_check(g32_generators(), witting_vertices()));
    CHECK_FALSE(symmetry_check(g32_generators(), witting_vertices(true)));
  }

  TEST_CASE("E is an eigenplane of T^2") {
    CMat T2 = matmul(g32_T(), g32_T());
    CMat E = g32_E_plane();
    CHECK(E.rows() == 2);
    CMat basis = kernel(E);
    REQUIRE(basis.rows() == 2);
    for (int r = 0; r < 2; ++r) {
      CVec v = basis.row(r).transpose();
      CVec w = matvec(T2, v);
      CHECK(parallel(v, w));
    }
  }

  TEST_CASE("stratify on simple points") {
    CVec x(3);
    x << 1, 0, 0;
    StratumLabel s = stratify(g25(), x);
    CHECK(s.orbit_size == 12);
    CHECK(s.reflection_planes == 2);
    CHECK(s.proper_planes == 3);
    CHECK(s.in_table);
    CVec y(4);
    y << 0, 1, 0, 0;
    CHECK(stratify(g32(), y).orbit_size == 40);
  }

  TEST_CASE("orbit-stabilizer") {
    CVec x(3);
    x << 1, -1, 0;
    CHECK(648 / line_stabilizer(g25(), x).size() == 9);
  }

  TEST_CASE("census of a small arrangement") {
    // three coordinate planes in C^3 plus x + y + z
    std::vector<CVec> forms;
    for (int k = 0; k < 3; ++k) {
      CVec f = CVec::Constant(3, Cyclotomic(0));
      f(k) = 1;
      forms.push_back(f);
    }
    CVec s(3);
    s << 1, 1, 1;
    forms.push_back(s);
    LatticeCensus c = lattice_census(forms);
    CHECK(c.hyperplanes == 4);
    CHECK(c.planes_2 == 6);
  }

  TEST_CASE("conjugacy for n = 5 and 6") {
    for (int n : {5, 6})
      for (bool mo : {true, false}) {
        ConjugacyReport r = conjugacy_to_braid_action(n, mo);
        CHECK(r.a_matrices_match);
        CHECK(r.relations_hold);
        CHECK(r.braid_relations);
        CHECK(r.order_three);
      }
  }
}
