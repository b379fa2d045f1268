#include "affbraid/charvar.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

namespace affb {

LinearPart::LinearPart(std::vector<Cyclotomic> lambda) : lam_(std::move(lambda)) {
  if (lam_.size() < 3) throw Error(Errc::InvalidLinearPart, "need at least 3 punctures");
  Cyclotomic prod(1);
  for (const auto& x : lam_) {
    if (x.is_zero()) throw Error(Errc::InvalidLinearPart, "zero entry in linear part");
    if (!(x * x.conj()).is_one()) throw Error(Errc::InvalidLinearPart, "entry " + x.str() + " is not of unit norm");
    if (!order_of_root(x)) roots_ = false;
    if (!x.is_rational()) conductor_ = std::lcm(conductor_, x.conductor());
    prod *= x;
  }
  if (!prod.is_one()) throw Error(Errc::InvalidLinearPart, "product of the linear part is " + prod.str() + ", not 1");
}

int LinearPart::iota() const {
  return static_cast<int>(std::count_if(lam_.begin(), lam_.end(), [](const Cyclotomic& x) { return !x.is_one(); }));
}

LinearPart LinearPart::rotated(int r) const {
  const int m = n();
  std::vector<Cyclotomic> v(lam_.size());
  for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] = lam_[static_cast<std::size_t>(((i + r) % m + m) % m)];
  return LinearPart(std::move(v));
}

std::string LinearPart::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < lam_.size(); ++i) s += (i ? ", " : "") + lam_[i].str();
  return s + ")";
}

AffineRep::AffineRep(LinearPart l, std::vector<Cyclotomic> t) : lin(std::move(l)), tau(std::move(t)) {
  if (static_cast<int>(tau.size()) != lin.n() - 1) throw Error(Errc::DimensionMismatch, "tau must have n-1 entries");
}

AffineRep AffineRep::from_full(LinearPart l, const std::vector<Cyclotomic>& full) {
  if (static_cast<int>(full.size()) != l.n()) throw Error(Errc::DimensionMismatch, "full tau must have n entries");
  AffineRep r(std::move(l), std::vector<Cyclotomic>(full.begin(), full.end() - 1));
  if (!(r.tau_n() == full.back())) throw Error(Errc::InvalidLinearPart, "translations violate the product relation");
  return r;
}

// tau_1 + l1 tau_2 + ... + (l1...l_{n-1}) tau_n = 0
Cyclotomic AffineRep::tau_n() const {
  Cyclotomic s(0), p(1);
  for (std::size_t k = 0; k < tau.size(); ++k) {
    s += p * tau[k];
    p *= lin.values()[k];
  }
  return -s / p;
}

std::vector<Cyclotomic> AffineRep::full_tau() const {
  std::vector<Cyclotomic> f = tau;
  f.push_back(tau_n());
  return f;
}

AffineRep AffineRep::rotated(int r) const {
  auto f = full_tau();
  const int m = n();
  std::vector<Cyclotomic> g(f.size());
  for (int i = 0; i < m; ++i) g[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(((i + r) % m + m) % m)];
  return from_full(lin.rotated(r), g);
}

std::string ProjClass::key() const {
  if (zero) return "[0]";
  std::string k;
  for (const auto& x : coords) {
    x.append_key(k);
    k += ';';
  }
  return k;
}

std::string ProjClass::str() const {
  if (zero) return "[0]";
  std::string s = "[";
  for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? " : " : "") + coords[i].str();
  return s + "]";
}

bool operator==(const ProjClass& a, const ProjClass& b) {
  if (a.zero || b.zero) return a.zero == b.zero;
  if (a.coords.size() != b.coords.size()) return false;
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    if (!(a.coords[i] == b.coords[i])) return false;
  return true;
}

ProjClass make_class(int n, const std::vector<Cyclotomic>& coords, int N) {
  ProjClass c;
  c.n = n;
  std::size_t first = coords.size();
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) {
      first = i;
      break;
    }
  if (first == coords.size()) {
    c.zero = true;
    return c;
  }
  Cyclotomic s = coords[first].inv();
  c.coords.resize(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    Cyclotomic v = i < first ? Cyclotomic(0) : (i == first ? Cyclotomic(1) : coords[i] * s);
    int M = std::lcm(N, v.is_rational() ? 1 : v.conductor());
    c.coords[i] = v.promote(M);
  }
  return c;
}

CVec class_vector(const ProjClass& c) {
  CVec v(static_cast<Eigen::Index>(c.coords.size()));
  for (std::size_t i = 0; i < c.coords.size(); ++i) v(static_cast<Eigen::Index>(i)) = c.coords[i];
  return v;
}

AffineRep conjugate(const AffineRep& rep, const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_zero()) throw Error(Errc::ZeroScale, "conjugation needs a != 0");
  AffineRep r = rep;
  for (std::size_t k = 0; k < r.tau.size(); ++k) r.tau[k] = a * rep.tau[k] + b * (Cyclotomic(1) - rep.lin.values()[k]);
  return r;
}

int default_rotation(const LinearPart& lin) {
  for (int r = 0; r < lin.n(); ++r)
    if (!lin[r + 1].is_one()) return r;
  return 0;
}

namespace {

int field_of(const LinearPart& lin, const std::vector<Cyclotomic>& extra) {
  int N = lin.conductor();
  for (const auto& x : extra)
    if (!x.is_rational()) N = std::lcm(N, x.conductor());
  return N;
}

std::vector<Cyclotomic> section_coords(const LinearPart& lin, const std::vector<Cyclotomic>& tau) {
  const Cyclotomic one(1);
  Cyclotomic b = -tau[0] / (one - lin[1]);
  std::vector<Cyclotomic> v;
  for (std::size_t k = 1; k < tau.size(); ++k) v.push_back(tau[k] + b * (one - lin.values()[k]));
  return v;
}

}  // namespace

ProjClass normalize(const AffineRep& rep, bool allow_rotation) {
  if (rep.lin.iota() == 0) {
    // every translation is a conjugate of the homothety class; record [0] only for the abelian one
    bool all_zero = std::all_of(rep.tau.begin(), rep.tau.end(), [](const Cyclotomic& x) { return x.is_zero(); });
    if (!all_zero) throw Error(Errc::LinearPartFirstTrivial, "trivial linear part: classes are translations, not handled");
    ProjClass c;
    c.n = rep.n();
    c.zero = true;
    return c;
  }
  int r = 0;
  if (rep.lin[1].is_one()) {
    if (!allow_rotation) throw Error(Errc::LinearPartFirstTrivial, "lambda_1 = 1");
    r = default_rotation(rep.lin);
  }
  AffineRep w = r ? rep.rotated(r) : rep;
  ProjClass c = make_class(rep.n(), section_coords(w.lin, w.tau), field_of(w.lin, w.tau));
  c.rotation = r;
  return c;
}

// (1): sigma_{i,j}^2 on (tau_1, ..., tau_{n-1}).
CMat action_matrix_full(const LinearPart& lin, int i, int j) {
  const int m = lin.n() - 1;
  if (!(1 <= i && i < j && j <= m)) throw Error(Errc::IndexError, "action matrix needs 1 <= i < j <= n-1");
  auto P = [&](int a, int b) {
    Cyclotomic p(1);
    for (int l = a; l <= b; ++l) p *= lin[l];
    return p;
  };
  const Cyclotomic one(1);
  const Cyclotomic li = lin[i], lj = lin[j];
  const Cyclotomic ci = one - li, cj = one - lj;
  CMat M = identity<Cyclotomic>(m);
  for (int k = 1; k <= m; ++k) M(i - 1, k - 1) = Cyclotomic(0);
  for (int k = 1; k <= m; ++k) M(j - 1, k - 1) = Cyclotomic(0);
  M(i - 1, i - 1) += lj;
  M(i - 1, j - 1) += ci * P(i, j);
  for (int k = i; k <= j; ++k) M(i - 1, k - 1) += ci * cj * P(i, k - 1);
  M(j - 1, j - 1) += li;
  M(j - 1, i - 1) += cj * P(i + 1, j - 1).inv();
  for (int k = i + 1; k < j; ++k) M(j - 1, k - 1) -= ci * cj * P(k, j - 1).inv();
  return M;
}

// (2) for i = 1, restriction of (1) otherwise; acts on (tau_2, ..., tau_{n-1}).
CMat action_matrix_reduced(const LinearPart& lin, int i, int j) {
  const int m = lin.n() - 1;
  if (!(1 <= i && i < j && j <= m)) throw Error(Errc::IndexError, "action matrix needs 1 <= i < j <= n-1");
  if (lin[1].is_one()) throw Error(Errc::LinearPartFirstTrivial, "reduced action needs lambda_1 != 1");
  if (i != 1) {
    CMat full = action_matrix_full(lin, i, j);
    return full.bottomRightCorner(m - 1, m - 1);
  }
  auto P = [&](int a, int b) {
    Cyclotomic p(1);
    for (int l = a; l <= b; ++l) p *= lin[l];
    return p;
  };
  const Cyclotomic one(1);
  const Cyclotomic l1 = lin[1], lj = lin[j];
  const Cyclotomic cj = one - lj;
  CMat R = identity<Cyclotomic>(m - 1);
  for (int nu = 2; nu <= m; ++nu) {
    const Cyclotomic cnu = one - lin[nu];
    for (int c = 0; c < m - 1; ++c) R(nu - 2, c) = Cyclotomic(nu - 2 == c ? 1 : 0);
    if (nu == j) {
      R(j - 2, j - 2) = l1 - cj * P(1, j - 1);
      for (int k = 2; k < j; ++k) R(j - 2, k - 2) -= cj * ((one - l1) * P(k, j - 1).inv() + cj * P(1, k - 1));
    } else {
      R(nu - 2, j - 2) -= cnu * P(1, j - 1);
      for (int k = 2; k < j; ++k) R(nu - 2, k - 2) -= cnu * cj * P(1, k - 1);
    }
  }
  return R;
}

namespace {

struct Affine {
  Cyclotomic l{1};
  Cyclotomic t{0};
};

Affine compose(const Affine& f, const Affine& g) { return {f.l * g.l, f.l * g.t + f.t}; }
Affine invert(const Affine& f) {
  Cyclotomic li = f.l.inv();
  return {li, -f.t * li};
}

Affine evaluate(const FreeWord& w, const std::vector<Affine>& maps, const std::vector<Affine>& inverses) {
  Affine r;
  for (int x : w) {
    std::size_t k = static_cast<std::size_t>(std::abs(x) - 1);
    r = compose(r, x > 0 ? maps[k] : inverses[k]);
  }
  return r;
}

}  // namespace

AffineRep act_by_braid(const BraidWord& w, const AffineRep& rep) {
  const int n = rep.n();
  if (w.n != n) throw Error(Errc::DimensionMismatch, "braid and representation strand counts differ");
  auto f = rep.full_tau();
  std::vector<Affine> maps, inverses;
  for (int k = 0; k < n; ++k) {
    maps.push_back({rep.lin.values()[static_cast<std::size_t>(k)], f[static_cast<std::size_t>(k)]});
    inverses.push_back(invert(maps.back()));
  }
  FreeTuple t = hurwitz_act(w, identity_tuple(n));
  std::vector<Cyclotomic> lam, tau;
  for (const auto& word : t.words) {
    Affine a = evaluate(word, maps, inverses);
    lam.push_back(a.l);
    tau.push_back(a.t);
  }
  return AffineRep::from_full(LinearPart(std::move(lam)), tau);
}

CMat section_matrix(const LinearPart& lin, const BraidWord& w) {
  const int n = lin.n();
  if (lin[1].is_one()) throw Error(Errc::LinearPartFirstTrivial, "section needs lambda_1 != 1");
  const int d = n - 2;
  CMat M(d, d);
  for (int c = 0; c < d; ++c) {
    std::vector<Cyclotomic> tau(static_cast<std::size_t>(n - 1), Cyclotomic(0));
    tau[static_cast<std::size_t>(c + 1)] = Cyclotomic(1);
    AffineRep img = act_by_braid(w, AffineRep(lin, tau));
    for (int k = 1; k <= n; ++k)
      if (!(img.lin[k] == lin[k])) throw Error(Errc::InvalidLinearPart, "braid does not preserve the linear part");
    auto v = section_coords(lin, img.tau);
    for (int r = 0; r < d; ++r) M(r, c) = v[static_cast<std::size_t>(r)];
  }
  return M;
}

namespace {

CMat letter_matrix(const LinearPart& lin, const BraidLetter& l) {
  if (l.kind != BraidLetter::Pure) throw Error(Errc::NotPureWord, "apply_braid expects pure letters");
  CMat M = action_matrix_reduced(lin, l.i, l.j);
  return l.exp > 0 ? M : matinv(M);
}

}  // namespace

ProjClass apply_braid(const ProjClass& c, const BraidWord& w, const LinearPart& lin) {
  if (c.zero) return c;
  CVec v = class_vector(c);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) v = matvec(letter_matrix(lin, *it), v);
  std::vector<Cyclotomic> coords(v.data(), v.data() + v.size());
  ProjClass r = make_class(c.n, coords, field_of(lin, coords));
  r.rotation = c.rotation;
  return r;
}

namespace {

struct LabeledGen {
  CMat m;
  BraidLetter letter;
};

std::vector<LabeledGen> labeled_generators(const LinearPart& lin) {
  std::vector<LabeledGen> gens;
  std::vector<std::string> seen;
  const int m = lin.n() - 1;
  const int N = lin.conductor();
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      CMat M = action_matrix_reduced(lin, i, j);
      if (is_identity(M)) continue;
      for (int e : {1, -1}) {
        CMat G = e > 0 ? M : matinv(M);
        std::string k = mat_key(promote_all(G, N));
        if (std::find(seen.begin(), seen.end(), k) != seen.end()) continue;
        seen.push_back(k);
        gens.push_back({G, BraidLetter::pure(i, j, e)});
      }
    }
  }
  return gens;
}

}  // namespace

std::vector<CMat> orbit_generators(const LinearPart& lin) {
  std::vector<CMat> r;
  for (auto& g : labeled_generators(lin)) r.push_back(std::move(g.m));
  return r;
}

OrbitResult orbit(const ProjClass& start, const LinearPart& lin, const OrbitOptions& opt) {
  OrbitResult res;
  if (start.zero) {
    res.points.push_back(start);
    res.size = 1;
    if (opt.witnesses) res.witnesses.emplace_back(lin.n());
    return res;
  }
  const int N = field_of(lin, start.coords);
  auto gens = labeled_generators(lin);

  struct Node {
    ProjClass cls;
    CVec vec;
    std::int64_t parent;
    BraidLetter via;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> index;
  ProjClass s = make_class(start.n, start.coords, N);
  s.rotation = start.rotation;
  index.emplace(s.key(), 0);
  nodes.push_back({s, class_vector(s), -1, {}});
  std::size_t head = 0;
  while (head < nodes.size()) {
    if (nodes.size() > opt.bound) {
      res.exceeded_bound = true;
      break;
    }
    for (const auto& g : gens) {
      CVec v = matvec(g.m, nodes[head].vec);
      std::vector<Cyclotomic> coords(v.data(), v.data() + v.size());
      ProjClass c = make_class(start.n, coords, N);
      c.rotation = start.rotation;
      std::string k = c.key();
      if (index.count(k)) continue;
      index.emplace(std::move(k), nodes.size());
      CVec cv = class_vector(c);
      nodes.push_back({std::move(c), std::move(cv), static_cast<std::int64_t>(head), g.letter});
      if (nodes.size() > opt.bound) break;
    }
    ++head;
  }
  if (nodes.size() > opt.bound) res.exceeded_bound = true;

  std::vector<std::size_t> order(nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::string> keys;
  keys.reserve(nodes.size());
  for (const auto& nd : nodes) keys.push_back(nd.cls.key());
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  for (std::size_t idx : order) {
    res.points.push_back(nodes[idx].cls);
    if (opt.witnesses) {
      // the word reaching idx is (last letter) ... (first letter): letters act right to left
      BraidWord w(lin.n());
      for (std::int64_t p = static_cast<std::int64_t>(idx); nodes[static_cast<std::size_t>(p)].parent >= 0;
           p = nodes[static_cast<std::size_t>(p)].parent)
        w.letters.push_back(nodes[static_cast<std::size_t>(p)].via);
      res.witnesses.push_back(std::move(w));
    }
  }
  res.size = res.points.size();
  return res;
}

OrbitResult orbit(const AffineRep& rep, const OrbitOptions& opt) {
  ProjClass c = normalize(rep);
  LinearPart lin = c.rotation ? rep.lin.rotated(c.rotation) : rep.lin;
  return orbit(c, lin, opt);
}

bool parallel(const CVec& u, const CVec& v) {
  Eigen::Index p = -1;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) {
      p = i;
      break;
    }
  if (p < 0) return true;
  if (u(p).is_zero()) {
    for (Eigen::Index i = 0; i < u.size(); ++i)
      if (!u(i).is_zero()) return false;
    return true;
  }
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i == p) continue;
    if (!(u(i) * v(p) == u(p) * v(i))) return false;
  }
  return true;
}

std::size_t stabilizer_of_class_in_group(const CVec& v, const std::vector<CMat>& group) {
  std::size_t count = 0;
  for (const auto& g : group)
    if (parallel(matvec(g, v), v)) ++count;
  return count;
}

}  // namespace affb
