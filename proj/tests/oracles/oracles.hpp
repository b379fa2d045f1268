#pragma once

// Independent reference computations used to cross-check the library.
// Everything here is deliberately naive: floating point, direct formulas, no shared helpers.

#include <complex>
#include <cstdint>
#include <vector>

#include "affbraid/braid.hpp"
#include "affbraid/cyclotomic.hpp"

namespace oracle {

using cd = std::complex<double>;

// Phi_N as prod_{d | N} (x^d - 1)^{mu(N/d)}, integer coefficients, lowest degree first.
std::vector<std::int64_t> cyclotomic_poly_mobius(int N);
int mobius(int n);

// sum_k c_k exp(2 pi i k / N) straight from the power-basis coefficients.
cd embed(const affb::Cyclotomic& x);

struct NAff {
  cd l{1.0, 0.0};
  cd t{0.0, 0.0};
};
NAff compose(const NAff& f, const NAff& g);  // f after g
NAff inverse(const NAff& f);

// Hurwitz action computed directly on tuples of maps (no free-group words).
// Letters are applied right to left, pure letters are expanded locally.
std::vector<NAff> hurwitz_numeric(const affb::BraidWord& w, std::vector<NAff> maps);

// Orbit of the conjugacy class of (lambda, tau) under all pure generators sigma_{i,j}^2, 1 <= i < j <= n.
// Classes are compared through a rounded canonical form. Returns 0 if bound is exceeded.
std::size_t numeric_orbit_size(const std::vector<cd>& lambda, const std::vector<cd>& full_tau, std::size_t bound,
                               bool include_last = true);

// Canonical numeric form: translate so the first map with lambda != 1 fixes 0,
// then scale so the first nonzero translation is 1.
std::vector<cd> canonical_translations(const std::vector<cd>& lambda, const std::vector<cd>& full_tau);

std::vector<cd> embed_all(const std::vector<affb::Cyclotomic>& xs);

}  // namespace oracle
