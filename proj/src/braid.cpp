#include "affbraid/braid.hpp"

#include <cctype>
#include <cstdlib>

namespace affb {

BraidWord& BraidWord::operator*=(const BraidWord& o) {
  if (n == 0) n = o.n;
  letters.insert(letters.end(), o.letters.begin(), o.letters.end());
  return *this;
}

BraidWord BraidWord::inverse() const {
  BraidWord r(n);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    BraidLetter l = *it;
    l.exp = -l.exp;
    r.letters.push_back(l);
  }
  return r;
}

bool BraidWord::is_pure_letters() const {
  for (const auto& l : letters) {
    if (l.kind != BraidLetter::Pure) return false;
  }
  return true;
}

BraidWord BraidWord::expanded() const {
  BraidWord r(n);
  for (const auto& l : letters) {
    if (l.kind == BraidLetter::Sigma) {
      r.letters.push_back(l);
      continue;
    }
    BraidWord s = sigma_ij(n, l.i, l.j);
    BraidWord sq = s * s;
    r *= l.exp > 0 ? sq : sq.inverse();
  }
  return r;
}

std::string BraidWord::str() const {
  std::string s;
  for (const auto& l : letters) {
    if (!s.empty()) s += ' ';
    if (l.kind == BraidLetter::Sigma) {
      s += "s" + std::to_string(l.i);
    } else {
      s += "p(" + std::to_string(l.i) + "," + std::to_string(l.j) + ")";
    }
    if (l.exp < 0) s += "^-1";
  }
  return s;
}

FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

FreeWord free_inverse(const FreeWord& w) {
  FreeWord r(w.rbegin(), w.rend());
  for (int& x : r) x = -x;
  return r;
}

FreeWord free_concat(std::initializer_list<FreeWord> parts) {
  FreeWord r;
  for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
  return free_reduce(r);
}

std::string free_str(const FreeWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (int x : w) {
    if (!s.empty()) s += ' ';
    s += "a" + std::to_string(std::abs(x));
    if (x < 0) s += "^-1";
  }
  return s;
}

FreeTuple identity_tuple(int n) {
  FreeTuple t;
  for (int k = 1; k <= n; ++k) t.words.push_back({k});
  return t;
}

FreeWord tuple_product(const FreeTuple& t) {
  FreeWord r;
  for (const auto& w : t.words) r.insert(r.end(), w.begin(), w.end());
  return free_reduce(r);
}

namespace {

void apply_sigma(FreeTuple& t, int i, int e) {
  FreeWord& a = t.words[i - 1];
  FreeWord& b = t.words[i];
  if (e > 0) {
    FreeWord na = free_concat({a, b, free_inverse(a)});
    b = a;
    a = std::move(na);
  } else {
    FreeWord nb = free_concat({free_inverse(b), a, b});
    a = b;
    b = std::move(nb);
  }
}

BraidWord ascending(int n, int from, int to) {
  BraidWord w(n);
  for (int s = from; s <= to; ++s) w.letters.push_back(BraidLetter::sigma(s));
  return w;
}

BraidWord descending(int n, int from, int to) {
  BraidWord w(n);
  for (int s = from; s >= to; --s) w.letters.push_back(BraidLetter::sigma(s));
  return w;
}

}  // namespace

FreeTuple hurwitz_act(const BraidWord& w, const FreeTuple& t) {
  if (static_cast<int>(t.words.size()) != w.n) {
    throw Error(Errc::DimensionMismatch, "hurwitz_act: strand count mismatch");
  }
  BraidWord e = w.expanded();
  FreeTuple r = t;
  for (auto it = e.letters.rbegin(); it != e.letters.rend(); ++it) {
    if (it->i < 1 || it->i >= w.n) throw Error(Errc::IndexError, "generator index out of range");
    apply_sigma(r, it->i, it->exp);
  }
  return r;
}

// (s_{i+1} ... s_{j-1})^{-1} s_i (s_{i+1} ... s_{j-1})
BraidWord sigma_ij(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n)) throw Error(Errc::IndexError, "sigma_ij needs 1 <= i < j <= n");
  BraidWord up = ascending(n, i + 1, j - 1);
  BraidWord w = up.inverse();
  w.n = n;
  w.letters.push_back(BraidLetter::sigma(i));
  return w * up;
}

BraidWord pure_sigma_ij(int n, int i, int j) {
  BraidWord s = sigma_ij(n, i, j);
  return s * s;
}

BraidWord phi_kl(const BraidWord& b, int k, int l, int n) {
  if (!(2 <= k && k < n && 1 <= l && l <= k)) throw Error(Errc::IndexError, "phi_kl index bounds");
  if (!b.is_pure_letters()) throw Error(Errc::NotPureWord, "phi_kl expects pure generators p(i,j)");
  const int d = n - k;
  BraidWord out(n);
  for (const auto& x : b.letters) {
    const int i = x.i;
    const int j = x.j;
    if (!(1 <= i && i < j && j <= k)) throw Error(Errc::IndexError, "pure generator outside PB_k");
    BraidWord img(n);
    if (j < l) {
      img.letters.push_back(BraidLetter::pure(i, j));
    } else if (i < l && l < j) {
      img.letters.push_back(BraidLetter::pure(i, j + d));
    } else if (l < i) {
      img.letters.push_back(BraidLetter::pure(i + d, j + d));
    } else if (j == l) {
      img = ascending(n, i, l + d - 1) * descending(n, l + d - 1, l - 1) * ascending(n, i, l - 2).inverse();
    } else {
      img = ascending(n, l + d + 1, j + d - 1).inverse() * descending(n, l + d, l) * ascending(n, l, j + d - 1);
    }
    img.n = n;
    out *= x.exp > 0 ? img : img.inverse();
  }
  return out;
}

BraidWord parse_braid(std::string_view text, int n) {
  BraidWord w(n);
  std::size_t p = 0;
  auto fail = [&](std::vector<std::string> exp) -> void { throw ParseError(p, std::move(exp), std::string(text)); };
  auto skip = [&] {
    while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
  };
  auto number = [&]() -> int {
    std::size_t s = p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    if (s == p) fail({"integer"});
    return std::stoi(std::string(text.substr(s, p - s)));
  };
  auto expect = [&](char c) {
    if (p >= text.size() || text[p] != c) fail({std::string("'") + c + "'"});
    ++p;
  };
  skip();
  while (p < text.size()) {
    BraidLetter l;
    std::size_t start = p;
    if (text[p] == 's') {
      ++p;
      l = BraidLetter::sigma(number());
      if (l.i < 1 || l.i >= n) {
        p = start;
        fail({"generator index in 1.." + std::to_string(n - 1)});
      }
    } else if (text[p] == 'p') {
      ++p;
      expect('(');
      int i = number();
      expect(',');
      int j = number();
      expect(')');
      if (!(1 <= i && i < j && j <= n)) {
        p = start;
        fail({"pure generator p(i,j) with 1 <= i < j <= " + std::to_string(n)});
      }
      l = BraidLetter::pure(i, j);
    } else {
      fail({"'s'", "'p'"});
    }
    if (p < text.size() && text[p] == '^') {
      ++p;
      bool neg = p < text.size() && text[p] == '-';
      if (neg) ++p;
      int e = number();
      if (e != 1) fail({"exponent 1 or -1"});
      l.exp = neg ? -1 : 1;
    }
    w.letters.push_back(l);
    if (p < text.size() && !std::isspace(static_cast<unsigned char>(text[p]))) fail({"whitespace"});
    skip();
  }
  return w;
}

bool check_braid_relations(const std::vector<CMat>& g, bool sphere) {
  const std::size_t m = g.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (b == a + 1) {
        if (!equal(matmul(matmul(g[a], g[b]), g[a]), matmul(matmul(g[b], g[a]), g[b]))) return false;
      } else if (!equal(matmul(g[a], g[b]), matmul(g[b], g[a]))) {
        return false;
      }
    }
  }
  if (sphere && m > 0) {
    CMat p = identity<Cyclotomic>(g[0].rows());
    for (std::size_t a = 0; a < m; ++a) p = matmul(p, g[a]);
    for (std::size_t a = m; a-- > 0;) p = matmul(p, g[a]);
    if (!is_scalar(p)) return false;
  }
  return true;
}

}  // namespace affb
