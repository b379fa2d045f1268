#include "oracles.hpp"

#include <cmath>
#include <deque>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

namespace oracle {

int mobius(int n) {
  int r = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    r = -r;
  }
  if (n > 1) r = -r;
  return r;
}

namespace {

using Poly = std::vector<std::int64_t>;

Poly mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// exact division by a monic-up-to-sign polynomial
Poly divide(Poly a, const Poly& b) {
  const std::int64_t lead = b.back();
  Poly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    std::int64_t c = a[k + b.size() - 1] / lead;
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  for (auto x : a)
    if (x != 0) throw std::logic_error("non-exact polynomial division");
  return q;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_poly_mobius(int N) {
  Poly num{1}, den{1};
  for (int d = 1; d <= N; ++d) {
    if (N % d) continue;
    Poly f(static_cast<std::size_t>(d) + 1, 0);
    f[0] = -1;
    f[static_cast<std::size_t>(d)] = 1;
    int mu = mobius(N / d);
    if (mu == 1) num = mul(num, f);
    if (mu == -1) den = mul(den, f);
  }
  return divide(num, den);
}

cd embed(const affb::Cyclotomic& x) {
  const int N = x.conductor();
  cd s = 0;
  const auto& c = x.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k)
    s += c[k].to_double() * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / N);
  return s;
}

std::vector<cd> embed_all(const std::vector<affb::Cyclotomic>& xs) {
  std::vector<cd> r;
  for (const auto& x : xs) r.push_back(embed(x));
  return r;
}

NAff compose(const NAff& f, const NAff& g) { return {f.l * g.l, f.l * g.t + f.t}; }
NAff inverse(const NAff& f) { return {1.0 / f.l, -f.t / f.l}; }

namespace {

void sigma(std::vector<NAff>& m, int i, int e) {
  NAff& a = m[static_cast<std::size_t>(i - 1)];
  NAff& b = m[static_cast<std::size_t>(i)];
  if (e > 0) {
    NAff na = compose(compose(a, b), inverse(a));
    b = a;
    a = na;
  } else {
    NAff nb = compose(compose(inverse(b), a), b);
    a = b;
    b = nb;
  }
}

// sigma letters of sigma_{i,j}^{2e}, in reading order
std::vector<std::pair<int, int>> pure_letters(int i, int j, int e) {
  std::vector<std::pair<int, int>> one;
  for (int s = j - 1; s >= i + 1; --s) one.push_back({s, -1});
  one.push_back({i, 1});
  for (int s = i + 1; s <= j - 1; ++s) one.push_back({s, 1});
  std::vector<std::pair<int, int>> sq = one;
  sq.insert(sq.end(), one.begin(), one.end());
  if (e > 0) return sq;
  std::vector<std::pair<int, int>> inv;
  for (auto it = sq.rbegin(); it != sq.rend(); ++it) inv.push_back({it->first, -it->second});
  return inv;
}

}  // namespace

std::vector<NAff> hurwitz_numeric(const affb::BraidWord& w, std::vector<NAff> maps) {
  std::vector<std::pair<int, int>> seq;
  for (const auto& l : w.letters) {
    if (l.kind == affb::BraidLetter::Sigma) {
      seq.push_back({l.i, l.exp});
    } else {
      auto p = pure_letters(l.i, l.j, l.exp);
      seq.insert(seq.end(), p.begin(), p.end());
    }
  }
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) sigma(maps, it->first, it->second);
  return maps;
}

std::vector<cd> canonical_translations(const std::vector<cd>& lambda, const std::vector<cd>& t) {
  const double eps = 1e-9;
  std::vector<cd> r = t;
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    if (std::abs(1.0 - lambda[k]) > eps) {
      cd b = -t[k] / (1.0 - lambda[k]);
      for (std::size_t m = 0; m < r.size(); ++m) r[m] = t[m] + b * (1.0 - lambda[m]);
      break;
    }
  }
  for (auto& x : r) {
    if (std::abs(x) > eps) {
      cd s = x;
      for (auto& y : r) y /= s;
      break;
    }
  }
  for (auto& x : r)
    if (std::abs(x) <= eps) x = 0;
  return r;
}

namespace {

std::string key_of(const std::vector<cd>& v) {
  std::string k;
  for (const auto& x : v) {
    // coarse rounding; orbit points of the tested families are far apart
    k += std::to_string(std::llround(x.real() * 1e6)) + "," + std::to_string(std::llround(x.imag() * 1e6)) + ";";
  }
  return k;
}

}  // namespace

std::size_t numeric_orbit_size(const std::vector<cd>& lambda, const std::vector<cd>& full_tau, std::size_t bound,
                               bool include_last) {
  const int n = static_cast<int>(lambda.size());
  std::vector<affb::BraidWord> gens;
  const int jmax = include_last ? n : n - 1;
  for (int i = 1; i <= jmax; ++i)
    for (int j = i + 1; j <= jmax; ++j) gens.push_back(affb::BraidWord(n, {affb::BraidLetter::pure(i, j)}));
  std::set<std::string> seen;
  std::deque<std::vector<cd>> queue;
  auto start = canonical_translations(lambda, full_tau);
  seen.insert(key_of(start));
  queue.push_back(start);
  while (!queue.empty()) {
    auto t = queue.front();
    queue.pop_front();
    std::vector<NAff> maps;
    for (int k = 0; k < n; ++k) maps.push_back({lambda[static_cast<std::size_t>(k)], t[static_cast<std::size_t>(k)]});
    for (const auto& g : gens) {
      auto img = hurwitz_numeric(g, maps);
      std::vector<cd> lt, tt;
      for (const auto& m : img) {
        lt.push_back(m.l);
        tt.push_back(m.t);
      }
      auto c = canonical_translations(lt, tt);
      if (seen.insert(key_of(c)).second) {
        if (seen.size() > bound) return 0;
        queue.push_back(c);
      }
    }
  }
  return seen.size();
}

}  // namespace oracle
