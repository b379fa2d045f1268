#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "affbraid/linalg.hpp"

namespace affb {

// Matrix of size <= 4 over Q(omega) with entries (a + b*omega)/9, a and b small integers.
struct EisMat {
  static constexpr int kDen = 9;
  std::uint8_t dim = 0;
  std::array<std::int16_t, 32> v{};

  std::int16_t& re(int i, int j) { return v[static_cast<std::size_t>(2 * (4 * i + j))]; }
  std::int16_t& om(int i, int j) { return v[static_cast<std::size_t>(2 * (4 * i + j) + 1)]; }
  std::int16_t re(int i, int j) const { return v[static_cast<std::size_t>(2 * (4 * i + j))]; }
  std::int16_t om(int i, int j) const { return v[static_cast<std::size_t>(2 * (4 * i + j) + 1)]; }
  friend bool operator==(const EisMat& a, const EisMat& b) { return a.dim == b.dim && a.v == b.v; }
};

struct EisMatHash {
  std::size_t operator()(const EisMat& m) const noexcept;
};

EisMat eis_mul(const EisMat& a, const EisMat& b);
// nullopt if an entry is outside the representable set.
std::optional<EisMat> to_eis(const CMat& m);
CMat from_eis(const EisMat& m);
std::complex<double> eis_entry(const EisMat& m, int i, int j);
// trace as (a + b*omega)/9
std::pair<int, int> eis_trace(const EisMat& m);

struct ReflGroup {
  std::string name;
  int dim = 0;
  std::vector<CMat> gens;
  std::vector<EisMat> elements;
  std::vector<std::size_t> reflections;  // indices into elements
  std::vector<CVec> hyperplanes;         // linear forms, first nonzero coefficient 1
  std::vector<CMat> proper_planes;       // rows are linear forms cutting the plane, reduced echelon
  std::vector<int> degrees;
  std::vector<int> codegrees;

  std::size_t order() const { return elements.size(); }
  CMat element(std::size_t i) const { return from_eis(elements[i]); }
};

std::vector<CMat> g25_generators();
std::vector<CMat> g32_generators();

// Breadth-first closure; throws BoundExceeded beyond bound elements.
std::vector<EisMat> closure(const std::vector<CMat>& gens, std::size_t bound);

void find_reflections(ReflGroup& g);
void find_hyperplanes(ReflGroup& g);
// G25: regular 2-dimensional eigenspaces for order-6 eigenvalues; G32: orbit of the plane E.
void find_proper_planes(ReflGroup& g);

// Fully populated groups. The G32 closure is read from / written to the directory
// named by AFFBRAID_CACHE_DIR when that variable is set.
const ReflGroup& g25();
const ReflGroup& g32();
ReflGroup build_group(const std::string& name, const std::vector<CMat>& gens, std::size_t bound);

// G32 specifics
CMat g32_T();
CMat g32_E_plane();  // rows: the two defining linear forms of V(T^2, zeta), zeta^2 = -omega^2

// Line stabilizer: indices of elements g with g x parallel to x.
std::vector<std::size_t> line_stabilizer(const ReflGroup& g, const CVec& x);

struct StratumLabel {
  std::size_t orbit_size = 0;
  int reflection_planes = 0;
  int proper_planes = 0;
  std::string special;  // name of the exceptional orbit when incidence counts are ambiguous
  bool in_table = false;
};

StratumLabel stratify(const ReflGroup& g, const CVec& x);

struct TableStratum {
  std::size_t size;
  int refl;
  int proper;
  std::string special;
};
std::vector<TableStratum> table4();
std::vector<TableStratum> table5();

struct LatticeCensus {
  std::size_t hyperplanes = 0;
  std::size_t planes_2 = 0;   // planes lying on exactly 2 hyperplanes
  std::size_t planes_4 = 0;   // planes lying on exactly 4
  std::size_t lines_5 = 0;    // lines lying on exactly 5
  std::size_t lines_12 = 0;   // lines lying on exactly 12
  std::vector<std::pair<int, std::size_t>> plane_histogram;  // (hyperplanes through it, count)
  std::vector<std::pair<int, std::size_t>> line_histogram;
};
// Flats of codimension 2 and 3 cut by the given linear forms.
LatticeCensus lattice_census(const std::vector<CVec>& forms);

struct NamedPoint {
  std::string name;
  CVec point;
  std::size_t expected_orbit;
};
// The displayed points; "[0:w:1]" is kept as printed although it lies on x = 0.
std::vector<NamedPoint> special_representatives_g25();
std::vector<NamedPoint> special_representatives_g32();
// One point per table row, in table order.
std::vector<NamedPoint> table4_representatives();
std::vector<NamedPoint> table5_representatives();

std::vector<CVec> hessian_vertices();
// Axis vertices are +-(omega - omega^2) omega^j. With displayed_signs the sign of z4 in the
// three families with a zero among z1..z3 follows the printed list, which R4 does not preserve.
std::vector<CVec> witting_vertices(bool displayed_signs = false);
bool symmetry_check(const std::vector<CMat>& gens, const std::vector<CVec>& vertices);

// Builds A_i for lambda all equal to zeta (n = 5: (zeta, zeta, zeta, zeta, zeta^2)), zeta = -omega or -omega^2,
// compares with the displayed A_i and checks R_i = P^{-1} A_i^e P.
struct ConjugacyReport {
  bool a_matrices_match = false;
  bool relations_hold = false;
  bool braid_relations = false;
  bool order_three = false;
};
ConjugacyReport conjugacy_to_braid_action(int n, bool zeta_is_minus_omega);

}  // namespace affb
