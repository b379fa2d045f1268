#include "affbraid/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace affb {

namespace {

Cyclotomic z(int N, long long k) { return Cyclotomic::zeta(N, k); }

int conductor_of(const std::vector<Cyclotomic>& xs, int base = 1) {
  int N = base;
  for (const auto& x : xs)
    if (!x.is_rational()) N = std::lcm(N, x.conductor());
  return N;
}

const std::array<std::array<int, 2>, 3> kPairs = {{{2, 3}, {1, 3}, {1, 2}}};

}  // namespace

TraceTriple traces(const LinearPart& lin) {
  if (lin.n() != 4) throw Error(Errc::DimensionMismatch, "traces are defined for four punctures");
  std::array<Cyclotomic, 4> s;
  for (int i = 0; i < 4; ++i) s[static_cast<std::size_t>(i)] = sqrt_of_root(lin[i + 1]);
  TraceTriple tt;
  for (std::size_t i = 0; i < 3; ++i) {
    int j = kPairs[i][0], k = kPairs[i][1];
    Cyclotomic x = s[static_cast<std::size_t>(j - 1)] * s[static_cast<std::size_t>(k - 1)];
    tt.t[i] = x + x.inv();
    Cyclotomic y = lin[j] * lin[k];
    tt.t2[i] = y + Cyclotomic(2) + y.inv();
    if (!(tt.t[i] * tt.t[i] == tt.t2[i])) throw Error(Errc::InvalidLinearPart, "trace square mismatch");
  }
  return tt;
}

Cyclotomic p_value(const LinearPart& lin) {
  TraceTriple tt = traces(lin);
  Cyclotomic P = tt.t2[0] + tt.t2[1] + tt.t2[2] - tt.t[0] * tt.t[1] * tt.t[2];
  Cyclotomic check(4);
  Cyclotomic prod(1);
  for (int i = 1; i <= 4; ++i) prod *= Cyclotomic(1) - lin[i];
  check += prod;
  if (!(P == check)) {
    // the sign of t1 t2 t3 depends on the square-root branch; flip once
    Cyclotomic Q = tt.t2[0] + tt.t2[1] + tt.t2[2] + tt.t[0] * tt.t[1] * tt.t[2];
    if (!(Q == check)) throw Error(Errc::InvalidLinearPart, "P(lambda) self-check failed");
    return Q;
  }
  return P;
}

const char* n4_tag_name(N4Tag t) {
  switch (t) {
    case N4Tag::Reducible: return "Reducible";
    case N4Tag::ImprimitiveFinite: return "IrreducibleImprimitiveFinite";
    case N4Tag::ImprimitiveInfinite: return "IrreducibleImprimitiveInfinite";
    case N4Tag::Tetrahedral: return "Tetrahedral";
    case N4Tag::Octahedral: return "Octahedral";
    case N4Tag::Icosahedral: return "Icosahedral";
    case N4Tag::ZariskiDense: return "ZariskiDense";
  }
  return "?";
}

bool N4Class::finite() const {
  return tag == N4Tag::ImprimitiveFinite || tag == N4Tag::Tetrahedral || tag == N4Tag::Octahedral ||
         tag == N4Tag::Icosahedral;
}

long long N4Class::projective_order() const {
  switch (tag) {
    case N4Tag::ImprimitiveFinite: return 2 * m;
    case N4Tag::Tetrahedral: return 12;
    case N4Tag::Octahedral: return 24;
    case N4Tag::Icosahedral: return 60;
    default: return 0;
  }
}

N4Class classify_n4(const LinearPart& lin) {
  if (lin.n() != 4) throw Error(Errc::DimensionMismatch, "classify_n4 needs four punctures");
  N4Class c;
  TraceTriple tt = traces(lin);
  c.t2 = tt.t2;
  c.P = p_value(lin);
  if (lin.iota() < 4) {
    c.tag = N4Tag::Reducible;
    return c;
  }
  auto in = [&](std::initializer_list<Cyclotomic> set) {
    for (const auto& x : tt.t2)
      if (std::none_of(set.begin(), set.end(), [&](const Cyclotomic& y) { return x == y; })) return false;
    return true;
  };
  int zeros = static_cast<int>(std::count_if(tt.t2.begin(), tt.t2.end(), [](const Cyclotomic& x) { return x.is_zero(); }));
  if (zeros >= 2) {
    // the remaining trace is a + 1/a with a^2 = lambda_j lambda_k
    std::size_t i = 0;
    while (i < 2 && tt.t2[i].is_zero()) ++i;
    Cyclotomic a2 = lin[kPairs[i][0]] * lin[kPairs[i][1]];
    auto ord = order_of_root(a2);
    if (ord) {
      c.tag = N4Tag::ImprimitiveFinite;
      c.m = *ord;
    } else {
      c.tag = N4Tag::ImprimitiveInfinite;
    }
    return c;
  }
  const Cyclotomic mu2 = z(5, 1) + z(5, 4);
  const Cyclotomic mu1 = Cyclotomic(1) + mu2;
  if (c.P == Cyclotomic(2) && in({0, 1})) {
    c.tag = N4Tag::Tetrahedral;
  } else if (c.P == Cyclotomic(3) && in({0, 1, 2})) {
    c.tag = N4Tag::Octahedral;
  } else if ((c.P == Cyclotomic(2) - mu2 || c.P == Cyclotomic(3) || c.P == Cyclotomic(2) + mu1) &&
             in({0, 1, mu1 * mu1, mu2 * mu2})) {
    c.tag = N4Tag::Icosahedral;
  } else {
    c.tag = N4Tag::ZariskiDense;
  }
  return c;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::FiniteWithSize: return "FiniteWithSize";
    case Verdict::FiniteBoundedBy: return "FiniteBoundedBy";
    case Verdict::Infinite: return "Infinite";
    case Verdict::ZeroClassFixedPoint: return "ZeroClassFixedPoint";
    case Verdict::Undetermined: return "Undetermined";
  }
  return "?";
}

std::vector<CMat> projective_closure(const std::vector<CMat>& gens, std::size_t bound) {
  std::vector<CMat> elems;
  if (gens.empty()) return elems;
  int N = 1;
  for (const auto& g : gens) N = common_conductor(g, N);
  std::unordered_set<std::string> seen;
  auto key = [&](const CMat& m) { return mat_key(promote_all(projective_normalize(m), N)); };
  CMat id = identity<Cyclotomic>(gens[0].rows());
  seen.insert(key(id));
  elems.push_back(id);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      CMat p = matmul(g, elems[head]);
      if (seen.insert(key(p)).second) {
        elems.push_back(std::move(p));
        if (elems.size() > bound) throw Error(Errc::BoundExceeded, "projective closure exceeds bound");
      }
    }
  }
  return elems;
}

std::size_t projective_stabilizer(const CVec& v, const std::vector<CMat>& group) {
  return stabilizer_of_class_in_group(v, group);
}

namespace {

bool zero_at_trivial(const AffineRep& rep) {
  auto f = rep.full_tau();
  for (int i = 1; i <= rep.n(); ++i)
    if (rep.lin[i].is_one() && !f[static_cast<std::size_t>(i - 1)].is_zero()) return false;
  return true;
}

AffineRep puncture_trivial(const AffineRep& rep) {
  auto f = rep.full_tau();
  std::vector<Cyclotomic> lam, tau;
  for (int i = 1; i <= rep.n(); ++i) {
    if (rep.lin[i].is_one()) continue;
    lam.push_back(rep.lin[i]);
    tau.push_back(f[static_cast<std::size_t>(i - 1)]);
  }
  return AffineRep::from_full(LinearPart(std::move(lam)), tau);
}

bool matches_sixth_root_pattern(const LinearPart& lin) {
  const int n = lin.n();
  for (long long k : {1LL, 5LL}) {
    Cyclotomic zeta = z(6, k);
    std::vector<Cyclotomic> target(static_cast<std::size_t>(n), zeta);
    if (n == 5) target[4] = zeta * zeta;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) ok = lin[i + 1] == target[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return false;
}

GateVerdict finite_by_group(const ProjClass& c, const LinearPart& lin, std::size_t bound, const std::string& why) {
  auto group = projective_closure(orbit_generators(lin), bound);
  std::size_t stab = projective_stabilizer(class_vector(c), group);
  return {Verdict::FiniteWithSize, static_cast<long long>(group.size() / stab),
          why + "; projective image of order " + std::to_string(group.size()) + ", stabilizer " + std::to_string(stab)};
}

}  // namespace

GateVerdict gate(const AffineRep& rep) {
  const LinearPart& lin = rep.lin;
  const int n = rep.n();
  const int iota = lin.iota();
  if (iota == 0) return {Verdict::FiniteWithSize, 1, "trivial linear part: the pure braid action is trivial"};
  ProjClass c = normalize(rep);
  if (c.zero) return {Verdict::ZeroClassFixedPoint, 1, "class of the homothety representation is fixed"};
  LinearPart rl = c.rotation ? lin.rotated(c.rotation) : lin;
  if (n == 3) return {Verdict::FiniteWithSize, 1, "three punctures: the class space is a point"};

  if (iota == 2) {
    auto f = rep.full_tau();
    long long k = 0;
    Cyclotomic a;
    for (int i = 1; i <= n; ++i) {
      if (lin[i].is_one()) {
        if (!f[static_cast<std::size_t>(i - 1)].is_zero()) ++k;
      } else {
        a = lin[i];
      }
    }
    if (k <= 1) return {Verdict::FiniteWithSize, 1, "nontriviality index 2 with a single nonzero coordinate: fixed point"};
    auto w = order_of_root(a);
    if (!w) return {Verdict::Infinite, 0, "nontriviality index 2 and a is not a root of unity"};
    long long s = 1;
    for (long long e = 0; e < k - 1; ++e) s *= *w;
    return {Verdict::FiniteWithSize, s,
            "nontriviality index 2: orbit of size ord(a)^(k-1) with ord(a)=" + std::to_string(*w) + ", k=" + std::to_string(k)};
  }

  if (iota < n) {
    if (!zero_at_trivial(rep)) {
      return {Verdict::Infinite, 0, "a trivial local monodromy has a nonzero translation"};
    }
    if (iota == 3) return {Verdict::FiniteWithSize, 1, "nontriviality index 3: the unique fixed class"};
    GateVerdict v = gate(puncture_trivial(rep));
    v.reason = "trivial punctures removed (" + std::to_string(n) + " -> " + std::to_string(iota) + "); " + v.reason;
    return v;
  }

  if (n == 4) {
    N4Class nc = classify_n4(lin);
    std::string tag = n4_tag_name(nc.tag);
    if (nc.finite()) return finite_by_group(c, rl, 1000, "four punctures, " + tag);
    if (nc.tag == N4Tag::ImprimitiveInfinite) {
      // the infinite dihedral image still has the exchanged pair of fixed points
      OrbitOptions o;
      o.bound = 2;
      OrbitResult r = orbit(c, rl, o);
      if (!r.exceeded_bound) {
        return {Verdict::FiniteWithSize, static_cast<long long>(r.size), tag + ": class on the invariant pair"};
      }
    }
    return {Verdict::Infinite, 0, "four punctures, " + tag};
  }
  if (n == 5 || n == 6) {
    if (!matches_sixth_root_pattern(lin)) {
      return {Verdict::Infinite, 0, "all local monodromies nontrivial and not the sixth-root pattern"};
    }
    if (n == 5) return finite_by_group(c, rl, 1000, "five punctures, sixth-root pattern (Hessian group)");
    return {Verdict::FiniteBoundedBy, 25920, "six punctures, sixth-root pattern: projective image of order 25920"};
  }
  return {Verdict::Infinite, 0, "all local monodromies nontrivial and n >= 7"};
}

namespace {

CVec vec_of(std::initializer_list<Cyclotomic> xs) {
  CVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

std::vector<Cyclotomic> section_of(const LinearPart& lin, const std::vector<Cyclotomic>& tau) {
  ProjClass c = normalize(AffineRep(lin, tau), false);
  if (c.zero) return {0, 0};
  return c.coords;
}

// Fixed lines of a non-scalar 2x2 matrix of finite projective order k whose determinant is a root of unity.
std::vector<CVec> fixed_lines(const CMat& g, long long k) {
  Cyclotomic tr = g(0, 0) + g(1, 1);
  Cyclotomic dt = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
  Cyclotomic q = tr * tr / dt;
  std::vector<CVec> out;
  Cyclotomic mu;
  bool found = false;
  for (long long j = 1; j < k && !found; ++j) {
    if (std::gcd(j, k) != 1) continue;
    Cyclotomic r = z(static_cast<int>(k), j);
    if (!(r + r.inv() + Cyclotomic(2) == q)) continue;
    if (r == Cyclotomic(-1)) {
      mu = sqrt_of_root(-dt);
    } else {
      mu = tr / (Cyclotomic(1) + r);
    }
    found = true;
  }
  if (!found) return out;
  for (const Cyclotomic& ev : {mu, dt / mu}) {
    CMat K = eigenspace(g, ev);
    if (K.rows() == 1) out.push_back(K.row(0).transpose());
  }
  return out;
}

std::vector<TableRow> computed_rows(const LinearPart& lin, const std::vector<CMat>& group) {
  std::map<std::string, CVec> specials;
  for (const auto& g : group) {
    if (is_scalar(g)) continue;
    auto k = projective_order(g, 200);
    if (!k) continue;
    for (const auto& v : fixed_lines(g, *k)) {
      std::vector<Cyclotomic> cs(v.data(), v.data() + v.size());
      ProjClass c = make_class(4, cs, conductor_of(cs, lin.conductor()));
      specials.emplace(c.key(), class_vector(c));
    }
  }
  std::vector<TableRow> rows;
  std::unordered_set<std::string> done;
  for (const auto& [key, v] : specials) {
    if (done.count(key)) continue;
    for (const auto& g : group) {
      CVec w = matvec(g, v);
      std::vector<Cyclotomic> cs(w.data(), w.data() + w.size());
      done.insert(make_class(4, cs, conductor_of(cs, lin.conductor())).key());
    }
    TableRow r;
    r.label = "fixed point";
    r.tau = {0, v(0), v(1)};
    r.size = static_cast<long long>(group.size() / projective_stabilizer(v, group));
    rows.push_back(std::move(r));
  }
  std::sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) { return a.size < b.size; });
  return rows;
}

TableFamily family(std::string id, std::string table, std::vector<Cyclotomic> lam,
                   std::vector<std::pair<std::vector<Cyclotomic>, long long>> rows, long long generic) {
  TableFamily f{std::move(id), std::move(table), LinearPart(std::move(lam)), {}};
  for (auto& [tau, size] : rows) {
    TableRow r;
    r.label = "listed";
    r.tau = std::move(tau);
    r.size = size;
    f.rows.push_back(std::move(r));
  }
  TableRow g;
  g.label = "other orbits";
  g.generic = true;
  g.size = generic;
  f.rows.push_back(std::move(g));
  return f;
}

TableFamily imprimitive_family(const std::string& id, const Cyclotomic& a) {
  long long m = *order_of_root(a * a);
  Cyclotomic na = -a.inv();
  std::vector<std::pair<std::vector<Cyclotomic>, long long>> rows = {{{0, 1, a}, 2}, {{0, 0, 1}, m}};
  if (m % 2 == 0) {
    rows.push_back({{0, 1, 0}, m});
  } else {
    rows.push_back({{0, 2, Cyclotomic(1) + a}, m});
  }
  return family(id, "1", {a, na, na, a}, std::move(rows), 2 * m);
}

}  // namespace

TableRow generic_row(const LinearPart& lin, const std::vector<CMat>& pgroup) {
  for (int c = 3; c < 200; c += 2) {
    auto s = section_of(lin, {0, 1, c});
    CVec v = vec_of({s[0], s[1]});
    if (projective_stabilizer(v, pgroup) == 1) {
      TableRow r;
      r.label = "other orbits";
      r.tau = {0, 1, c};
      r.size = static_cast<long long>(pgroup.size());
      r.generic = true;
      return r;
    }
  }
  throw Error(Errc::NotFiniteCase, "no generic representative found");
}

std::vector<TableFamily> stored_families() {
  std::vector<TableFamily> fams;
  fams.push_back(imprimitive_family("T1-a10", z(10, 1)));
  fams.push_back(imprimitive_family("T1-a8", z(8, 1)));

  {
    auto e = [](long long k) { return z(12, k); };
    fams.push_back(family("T2-tet-a", "2", {e(1), e(5), e(3), e(3)},
                          {{{e(3), 0, 0}, 4}, {{0, e(5), -1}, 4}, {{0, 0, e(3)}, 6}}, 12));
  }
  {
    Cyclotomic s = z(6, 1), et = z(12, 1);
    fams.push_back(family("T2-tet-b", "2", {-1, s, s, s},
                          {{{0, 0, s}, 4}, {{0, Cyclotomic(1) - s * s, s}, 4}, {{0, 1, s + et}, 6}}, 12));
  }
  {
    auto e = [](long long k) { return z(24, k); };
    fams.push_back(family("T2-oct-a", "2", {e(1), e(5), e(7), e(11)}, {{{0, 0, 1}, 6}, {{0, 1, 0}, 8}, {{e(1), 0, 0}, 12}}, 24));
  }
  {
    auto e = [](long long k) { return z(12, k); };
    Cyclotomic nu = z(24, 1);
    fams.push_back(family("T2-oct-b", "2", {e(1), -e(1), e(2), e(2)},
                          {{{e(4), 0, 0}, 6}, {{0, 0, e(2)}, 8}, {{0, nu + e(3), nu.inv()}, 12}}, 24));
  }
  auto b = [](long long k) { return z(60, k); };
  {
    auto a = [&](long long k) { return b(k); };
    fams.push_back(family("T3-1", "3", {a(1), a(29), a(11), a(19)},
                          {{{0, 1, 0}, 12}, {{1, 0, 0}, 20}, {{0, 0, 1}, 30}}, 60));
  }
  {
    auto a = [&](long long k) { return b(3 * k); };
    Cyclotomic B = b(1);
    fams.push_back(family("T3-2", "3", {a(1), a(9), a(7), a(3)},
                          {{{a(12), 0, 0}, 12}, {{0, B + a(5) + a(2) + a(1), Cyclotomic(1) + a(3)}, 20}, {{0, 0, a(17)}, 30}},
                          60));
  }
  {
    auto a = [&](long long k) { return b(2 * k); };
    Cyclotomic B = b(1);
    fams.push_back(family("T3-3", "3", {a(9), a(9), a(1), a(11)},
                          {{{0, 0, a(16)}, 12},
                           {{a(10), 0, 0}, 20},
                           {{0, (a(1) + Cyclotomic(1)) * (a(11) + Cyclotomic(1)), B + a(14) - a(5) + a(4)}, 30}},
                          60));
    fams.push_back(family("T3-4", "3", {a(5), a(5), a(1), a(19)},
                          {{{a(11), 0, 0}, 12}, {{0, 0, 1}, 20}, {{0, 1, a(5) * (Cyclotomic(1) + B)}, 30}}, 60));
  }
  {
    auto a = [&](long long k) { return b(4 * k); };
    fams.push_back(family("T3-5", "3", {a(1), a(4), a(2), a(8)},
                          {{{a(12), 0, 0}, 12},
                           {{0, 0, a(2)}, 20},
                           {{0, b(56) + b(13) + b(12) + b(8) - b(6) - b(2), Cyclotomic(1) + b(22)}, 30}},
                          60));
  }
  {
    Cyclotomic a = b(12), g = b(2);
    fams.push_back(family("T3-6", "3", {-a, -a, -a, -a * a},
                          {{{0, 0, a}, 12},
                           {{0, g.pow(5) + g.pow(4) - Cyclotomic(1), g.pow(4) + g - a}, 20},
                           {{0, b(11) + b(9) - b(1), b(9) - Cyclotomic(1)}, 30}},
                          60));
  }
  for (auto& f : fams) {
    auto group = projective_closure(orbit_generators(f.lin), 1000);
    TableRow g = generic_row(f.lin, group);
    f.rows.back().tau = g.tau;
  }
  return fams;
}

std::vector<TableRow> table_rows(const LinearPart& lin) {
  N4Class nc = classify_n4(lin);
  if (!nc.finite()) throw Error(Errc::NotFiniteCase, std::string("linear part is ") + n4_tag_name(nc.tag));
  auto group = projective_closure(orbit_generators(lin), 1000);

  if (nc.tag == N4Tag::ImprimitiveFinite && lin[1] == lin[4] && lin[2] == lin[3] &&
      lin[1] * lin[2] == Cyclotomic(-1)) {
    auto f = imprimitive_family("T1", lin[1]);
    f.rows.back() = generic_row(lin, group);
    f.rows.back().size = 2 * nc.m;
    return f.rows;
  }
  for (const auto& fam : stored_families()) {
    if (fam.table == "1") continue;
    std::vector<Cyclotomic> all = fam.lin.values();
    for (const auto& r : fam.rows)
      if (!r.generic) all.insert(all.end(), r.tau.begin(), r.tau.end());
    const int L = conductor_of(all);
    for (long long k = 1; k < L; ++k) {
      if (std::gcd(k, static_cast<long long>(L)) != 1) continue;
      bool ok = true;
      for (int i = 1; i <= 4 && ok; ++i) ok = fam.lin[i].galois(k) == lin[i];
      if (!ok) continue;
      std::vector<TableRow> rows;
      for (const auto& r : fam.rows) {
        if (r.generic) continue;
        TableRow g = r;
        for (auto& x : g.tau) x = x.galois(k);
        rows.push_back(std::move(g));
      }
      TableRow gen = generic_row(lin, group);
      gen.size = fam.rows.back().size;
      rows.push_back(std::move(gen));
      return rows;
    }
  }
  auto rows = computed_rows(lin, group);
  rows.push_back(generic_row(lin, group));
  return rows;
}

}  // namespace affb
