#include "doctest.h"

#include <random>

#include "affbraid/linalg.hpp"

using namespace affb;

TEST_SUITE("linalg") {
  TEST_CASE("rational inverse, det and kernel") {
    QMat a(3, 3);
    a << Rational(2), Rational(1), Rational(0), Rational(1), Rational(3), Rational(1), Rational(0), Rational(1),
        Rational(4);
    CHECK(det(a) == Rational(18));
    CHECK(is_identity(matmul(a, matinv(a))));
    QMat s(2, 3);
    s << Rational(1), Rational(2), Rational(3), Rational(2), Rational(4), Rational(6);
    CHECK(rank(s) == 1);
    QMat k = kernel(s);
    CHECK(k.rows() == 2);
    CHECK(is_zero_mat(matmul(s, QMat(k.transpose()))));
    QMat sing = zero_mat<Rational>(2, 2);
    CHECK_THROWS_AS(matinv(sing), Error);
    CHECK_THROWS_AS(matmul(s, s), Error);
  }

  TEST_CASE("cyclotomic matrices") {
    Cyclotomic w = Cyclotomic::zeta(3);
    CMat r = cmat({{0, 1}, {1, 0}});
    auto info = is_complex_reflection(r);
    CHECK(info.is_reflection);
    CHECK(info.eigenvalue == Cyclotomic(-1));
    CMat d = cmat({{w, 0}, {0, 1}});
    CHECK(matrix_order(d, 10) == 3);
    CHECK(projective_order(cmat({{w, 0}, {0, w}}), 10) == 1);
    CHECK(det(d) == w);
    CMat e = eigenspace(d, w);
    CHECK(e.rows() == 1);
    CHECK(equal(matpow(d, -1), matinv(d)));
    CVec v(2);
    v << w, w * w;
    CVec nv = projective_normalize(v);
    CHECK(nv(0).is_one());
    CHECK(nv(1) == w);
  }

  TEST_CASE("random products round trip through inverse") {
    std::mt19937 rng(3);
    for (int t = 0; t < 30; ++t) {
      CMat m(3, 3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = Cyclotomic::zeta(12, rng() % 12) + Cyclotomic(static_cast<int>(rng() % 3));
      if (det(m).is_zero()) continue;
      CHECK(is_identity(matmul(matinv(m), m)));
      CHECK(det(matmul(m, m)) == det(m) * det(m));
    }
  }

  TEST_CASE("keys are canonical across conductors") {
    CMat a = cmat({{Cyclotomic::zeta(3), 1}});
    CMat b = cmat({{Cyclotomic::zeta(12, 4), 1}});
    int N = common_conductor(a, 12);
    CHECK(mat_key(promote_all(a, N)) == mat_key(promote_all(b, N)));
  }
}
