#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "affbraid/charvar.hpp"

namespace affb {

struct TraceTriple {
  std::array<Cyclotomic, 3> t;   // t_i = s_j s_k + 1/(s_j s_k), s = principal square roots
  std::array<Cyclotomic, 3> t2;  // computed without square roots
};

TraceTriple traces(const LinearPart& lin);
// t1^2 + t2^2 + t3^2 - t1 t2 t3, cross-checked against 4 + prod(1 - lambda_i).
Cyclotomic p_value(const LinearPart& lin);

enum class N4Tag {
  Reducible,
  ImprimitiveFinite,
  ImprimitiveInfinite,
  Tetrahedral,
  Octahedral,
  Icosahedral,
  ZariskiDense
};

const char* n4_tag_name(N4Tag t);

struct N4Class {
  N4Tag tag = N4Tag::Reducible;
  long long m = 0;  // dihedral parameter for the imprimitive finite case
  Cyclotomic P;
  std::array<Cyclotomic, 3> t2;
  bool finite() const;
  // Order of the projective image, when finite.
  long long projective_order() const;
};

N4Class classify_n4(const LinearPart& lin);

enum class Verdict { FiniteWithSize, FiniteBoundedBy, Infinite, ZeroClassFixedPoint, Undetermined };
const char* verdict_name(Verdict v);

struct GateVerdict {
  Verdict verdict = Verdict::Undetermined;
  long long size = 0;
  std::string reason;
};

GateVerdict gate(const AffineRep& rep);

// Closure of a matrix group modulo scalars. Elements are normalized so the first nonzero entry is 1.
std::vector<CMat> projective_closure(const std::vector<CMat>& gens, std::size_t bound);
// Number of elements fixing the line through v.
std::size_t projective_stabilizer(const CVec& v, const std::vector<CMat>& group);

struct TableRow {
  std::string label;
  std::vector<Cyclotomic> tau;  // tau_1 .. tau_3
  long long size = 0;
  bool generic = false;
};

// Special orbits and a generic point; stored families are matched up to Galois action,
// anything else is computed from fixed points of the finite group.
std::vector<TableRow> table_rows(const LinearPart& lin);

struct TableFamily {
  std::string id;
  std::string table;  // "1", "2" or "3"
  LinearPart lin;
  std::vector<TableRow> rows;
};

// The families listed for four punctures, with the imprimitive family at a = zeta_10 and zeta_8.
std::vector<TableFamily> stored_families();

// Representative (0, 1, c) with trivial projective stabilizer.
TableRow generic_row(const LinearPart& lin, const std::vector<CMat>& pgroup);

}  // namespace affb
