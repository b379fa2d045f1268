#include "affbraid/coalesce.hpp"

#include <numeric>

namespace affb {

void CoalesceSpec::validate() const {
  if (!(3 <= k && k < n && 1 <= l && l <= k)) throw Error(Errc::IndexError, "coalescence needs 3 <= k < n and 1 <= l <= k");
}

AffineRep r_kl(const AffineRep& rep, const CoalesceSpec& spec) {
  spec.validate();
  if (rep.n() != spec.n) throw Error(Errc::DimensionMismatch, "representation has the wrong number of punctures");
  const int d = spec.n - spec.k;
  const int l = spec.l;
  auto f = rep.full_tau();
  std::vector<Cyclotomic> lam, tau;
  for (int i = 1; i < l; ++i) {
    lam.push_back(rep.lin[i]);
    tau.push_back(f[static_cast<std::size_t>(i - 1)]);
  }
  Cyclotomic block_l(1), block_t(0);
  for (int i = l; i <= l + d; ++i) {
    block_t += block_l * f[static_cast<std::size_t>(i - 1)];
    block_l *= rep.lin[i];
  }
  lam.push_back(block_l);
  tau.push_back(block_t);
  for (int i = l + d + 1; i <= spec.n; ++i) {
    lam.push_back(rep.lin[i]);
    tau.push_back(f[static_cast<std::size_t>(i - 1)]);
  }
  return AffineRep::from_full(LinearPart(std::move(lam)), tau);
}

ProjClass class_of(const AffineRep& rep) {
  if (rep.lin.iota() > 0) return normalize(rep);
  int N = rep.lin.conductor();
  for (const auto& x : rep.tau)
    if (!x.is_rational()) N = std::lcm(N, x.conductor());
  return make_class(rep.n(), rep.tau, N);
}

EquivarianceSides equivariance_sides(const AffineRep& rep, const CoalesceSpec& spec, const BraidWord& b,
                                     const BraidWord& image) {
  AffineRep small = r_kl(rep, spec);
  BraidWord bk = b;
  bk.n = spec.k;
  EquivarianceSides s;
  s.lhs = class_of(act_by_braid(bk, small));
  BraidWord img = image;
  img.n = spec.n;
  s.rhs = class_of(r_kl(act_by_braid(img, rep), spec));
  return s;
}

bool equivariance_check(const AffineRep& rep, const CoalesceSpec& spec, const BraidWord& b) {
  auto s = equivariance_sides(rep, spec, b, phi_kl(b, spec.k, spec.l, spec.n));
  return s.lhs == s.rhs;
}

}  // namespace affb
