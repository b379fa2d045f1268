#include "doctest.h"

#include "affbraid/classify.hpp"

using namespace affb;

namespace {
Cyclotomic z(int N, int k) { return Cyclotomic::zeta(N, k); }
}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("trace identity") {
    for (const auto& fam : stored_families()) {
      TraceTriple tt = traces(fam.lin);
      for (std::size_t k = 0; k < 3; ++k) CHECK(tt.t[k] * tt.t[k] == tt.t2[k]);
      Cyclotomic prod(1);
      for (const auto& l : fam.lin.values()) prod *= Cyclotomic(1) - l;
      CHECK(p_value(fam.lin) == Cyclotomic(4) + prod);
    }
  }

  TEST_CASE("stored families classify as their table") {
    for (const auto& fam : stored_families()) {
      N4Class c = classify_n4(fam.lin);
      INFO(fam.id);
      CHECK(c.finite());
      if (fam.table == "1") CHECK(c.tag == N4Tag::ImprimitiveFinite);
      if (fam.id.rfind("T2-tet", 0) == 0) CHECK(c.tag == N4Tag::Tetrahedral);
      if (fam.id.rfind("T2-oct", 0) == 0) CHECK(c.tag == N4Tag::Octahedral);
      if (fam.table == "3") CHECK(c.tag == N4Tag::Icosahedral);
    }
  }

  TEST_CASE("other n = 4 classes") {
    LinearPart red({Cyclotomic(1), z(4, 1), z(4, 1), Cyclotomic(-1)});
    CHECK(classify_n4(red).tag == N4Tag::Reducible);
    LinearPart dense({z(7, 1), z(7, 2), z(7, 3), z(7, 1)});
    CHECK_FALSE(classify_n4(dense).finite());
  }

  TEST_CASE("table rows rebuild for every stored family") {
    for (const auto& fam : stored_families()) {
      auto rows = table_rows(fam.lin);
      INFO(fam.id);
      CHECK(rows.size() == fam.rows.size());
      for (std::size_t k = 0; k < rows.size() && k < fam.rows.size(); ++k) CHECK(rows[k].size == fam.rows[k].size);
    }
  }

  TEST_CASE("gate verdicts") {
    LinearPart triv({Cyclotomic(1), Cyclotomic(1), Cyclotomic(1), Cyclotomic(1)});
    CHECK(gate(AffineRep(triv, {1, 2, 3})).verdict == Verdict::FiniteWithSize);

    LinearPart two({z(5, 1), Cyclotomic(1), z(5, 4), Cyclotomic(1), Cyclotomic(1)});
    GateVerdict g = gate(AffineRep(two, {0, 1, 0, 2}));
    CHECK(g.verdict == Verdict::FiniteWithSize);
    CHECK(g.size == 25);

    LinearPart three({z(3, 1), z(3, 1), z(3, 1), Cyclotomic(1)});
    CHECK(gate(AffineRep(three, {0, 1, 0})).verdict == Verdict::Infinite);

    LinearPart seven(std::vector<Cyclotomic>(7, z(7, 1)));
    CHECK(gate(AffineRep(seven, {0, 1, 2, 3, 4, 5})).verdict == Verdict::Infinite);

    LinearPart five({z(6, 1), z(6, 1), z(6, 1), z(6, 1), z(6, 2)});
    GateVerdict h = gate(AffineRep(five, {0, 1, 2, 5}));
    CHECK(h.verdict == Verdict::FiniteWithSize);
    CHECK(h.size > 0);
    CHECK_FALSE(h.reason.empty());

    LinearPart six(std::vector<Cyclotomic>(6, z(6, 1)));
    CHECK(gate(AffineRep(six, {0, 1, 2, 5, 7})).verdict == Verdict::FiniteBoundedBy);
  }

  TEST_CASE("projective closure sizes") {
    for (const auto& fam : stored_families()) {
      auto gens = orbit_generators(fam.lin);
      auto pg = projective_closure(gens, 200);
      INFO(fam.id);
      CHECK(static_cast<long long>(pg.size()) == classify_n4(fam.lin).projective_order());
    }
  }
}
