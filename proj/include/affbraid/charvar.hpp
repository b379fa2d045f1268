#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "affbraid/braid.hpp"
#include "affbraid/linalg.hpp"

namespace affb {

// Linear part (lambda_1, ..., lambda_n) of a representation into Aff(C).
class LinearPart {
 public:
  LinearPart() = default;
  // Requires the product to be 1 and every entry to have unit norm.
  explicit LinearPart(std::vector<Cyclotomic> lambda);

  int n() const { return static_cast<int>(lam_.size()); }
  // 1-based access.
  const Cyclotomic& operator[](int i) const { return lam_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<Cyclotomic>& values() const { return lam_; }
  int iota() const;
  bool all_roots_of_unity() const { return roots_; }
  // lcm of the conductors of the entries.
  int conductor() const { return conductor_; }
  // Index shift r with lambda'_i = lambda_{i+r}.
  LinearPart rotated(int r) const;
  std::string str() const;

 private:
  std::vector<Cyclotomic> lam_;
  bool roots_ = true;
  int conductor_ = 1;
};

struct AffineRep {
  LinearPart lin;
  std::vector<Cyclotomic> tau;  // tau_1 .. tau_{n-1}

  AffineRep() = default;
  AffineRep(LinearPart l, std::vector<Cyclotomic> t);
  // Builds from all n translations; the last one must satisfy the product relation.
  static AffineRep from_full(LinearPart l, const std::vector<Cyclotomic>& full);

  int n() const { return lin.n(); }
  Cyclotomic tau_n() const;
  std::vector<Cyclotomic> full_tau() const;
  AffineRep rotated(int r) const;
};

// Point of P^{n-3} in the section tau_1 = 0, or the class [0].
struct ProjClass {
  int n = 0;
  std::vector<Cyclotomic> coords;  // tau_2 .. tau_{n-1}, first nonzero entry is 1
  bool zero = false;
  int rotation = 0;

  std::string key() const;
  std::string str() const;
  friend bool operator==(const ProjClass& a, const ProjClass& b);
};

// Canonical projective form with entries promoted to conductor N.
ProjClass make_class(int n, const std::vector<Cyclotomic>& coords, int N);
CVec class_vector(const ProjClass& c);

AffineRep conjugate(const AffineRep& rep, const Cyclotomic& a, const Cyclotomic& b);
// Smallest rotation making lambda_1 != 1 (0 if lambda_1 != 1 already).
int default_rotation(const LinearPart& lin);
// With allow_rotation, a trivial lambda_1 is handled by rotating indices first.
ProjClass normalize(const AffineRep& rep, bool allow_rotation = true);

CMat action_matrix_full(const LinearPart& lin, int i, int j);
CMat action_matrix_reduced(const LinearPart& lin, int i, int j);

// Hurwitz action followed by evaluation of the new generators.
AffineRep act_by_braid(const BraidWord& w, const AffineRep& rep);
// Matrix of w on the section coordinates; w must preserve the linear part.
CMat section_matrix(const LinearPart& lin, const BraidWord& w);

// Word in pure letters p(i,j), j <= n-1; the class must use the same rotation as lin.
ProjClass apply_braid(const ProjClass& c, const BraidWord& w, const LinearPart& lin);

struct OrbitResult {
  std::vector<ProjClass> points;  // sorted by key
  std::size_t size = 0;
  bool exceeded_bound = false;
  std::vector<BraidWord> witnesses;  // parallel to points when requested
};

struct OrbitOptions {
  std::size_t bound = 200000;
  bool witnesses = false;
};

// Orbit of c under the pure braid group; lin is the (possibly rotated) linear part c lives over.
OrbitResult orbit(const ProjClass& c, const LinearPart& lin, const OrbitOptions& opt = {});
OrbitResult orbit(const AffineRep& rep, const OrbitOptions& opt = {});

// Generators of the projected pure braid action, duplicates and identities removed.
std::vector<CMat> orbit_generators(const LinearPart& lin);

bool parallel(const CVec& u, const CVec& v);
std::size_t stabilizer_of_class_in_group(const CVec& v, const std::vector<CMat>& group);

}  // namespace affb
