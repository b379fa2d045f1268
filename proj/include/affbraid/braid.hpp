#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "affbraid/linalg.hpp"

namespace affb {

// A letter is either sigma_i^e or the pure generator sigma_{i,j}^(2e).
struct BraidLetter {
  enum Kind { Sigma, Pure } kind = Sigma;
  int i = 1;
  int j = 2;
  int exp = 1;  // +1 or -1

  static BraidLetter sigma(int i, int e = 1) { return {Sigma, i, i + 1, e}; }
  static BraidLetter pure(int i, int j, int e = 1) { return {Pure, i, j, e}; }
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
  int n = 0;
  std::vector<BraidLetter> letters;

  BraidWord() = default;
  explicit BraidWord(int strands) : n(strands) {}
  BraidWord(int strands, std::vector<BraidLetter> l) : n(strands), letters(std::move(l)) {}

  BraidWord& operator*=(const BraidWord& o);
  friend BraidWord operator*(BraidWord a, const BraidWord& b) { return a *= b; }
  BraidWord inverse() const;
  bool is_pure_letters() const;
  // Rewrites pure letters as sigma letters.
  BraidWord expanded() const;
  std::string str() const;
};

using FreeWord = std::vector<int>;  // letters +-k stand for a_k^{+-1}
struct FreeTuple {
  std::vector<FreeWord> words;
  friend bool operator==(const FreeTuple&, const FreeTuple&) = default;
};

FreeWord free_reduce(const FreeWord& w);
FreeWord free_inverse(const FreeWord& w);
FreeWord free_concat(std::initializer_list<FreeWord> parts);
std::string free_str(const FreeWord& w);
FreeTuple identity_tuple(int n);
FreeWord tuple_product(const FreeTuple& t);

// Words act on tuples right to left: act(w1 w2, t) = act(w1, act(w2, t)).
FreeTuple hurwitz_act(const BraidWord& w, const FreeTuple& t);

BraidWord sigma_ij(int n, int i, int j);
BraidWord pure_sigma_ij(int n, int i, int j);

// Image of a pure braid of PB_k in PB_n under the coalescence morphism.
BraidWord phi_kl(const BraidWord& b, int k, int l, int n);

BraidWord parse_braid(std::string_view text, int n);

// Braid and far-commutation relations for the matrices assigned to sigma_1..sigma_{m}.
// With sphere = true also requires sigma_1...sigma_m sigma_m...sigma_1 to be scalar.
bool check_braid_relations(const std::vector<CMat>& gens, bool sphere = false);

}  // namespace affb
