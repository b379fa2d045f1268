#pragma once

#include "affbraid/charvar.hpp"

namespace affb {

// Merge punctures l, ..., l+n-k of an n-punctured representation into one.
struct CoalesceSpec {
  int n = 0;
  int k = 0;
  int l = 1;
  void validate() const;
};

AffineRep r_kl(const AffineRep& rep, const CoalesceSpec& spec);

// Class of an arbitrary representation; a trivial linear part compares raw translations projectively.
ProjClass class_of(const AffineRep& rep);

struct EquivarianceSides {
  ProjClass lhs;  // b acting on the coalesced representation
  ProjClass rhs;  // coalescence of image acting on rep
};

// image is the braid on n strands paired with b; phi_kl(b) in the real check.
EquivarianceSides equivariance_sides(const AffineRep& rep, const CoalesceSpec& spec, const BraidWord& b,
                                     const BraidWord& image);
bool equivariance_check(const AffineRep& rep, const CoalesceSpec& spec, const BraidWord& b);

}  // namespace affb
