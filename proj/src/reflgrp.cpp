#include "affbraid/reflgrp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "affbraid/braid.hpp"
#include "affbraid/charvar.hpp"

namespace affb {

namespace {

const Cyclotomic& omega() {
  static const Cyclotomic w = Cyclotomic::zeta(3, 1);
  return w;
}

constexpr double kSqrt3 = 1.7320508075688772;

// Key of a matrix with every entry promoted to a common conductor that is a multiple of base.
std::string canon_key(const CMat& m, int base) {
  return mat_key(promote_all(m, common_conductor(m, base)));
}

CMat row_of(const CVec& v) {
  CMat r(1, v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(0, i) = v(i);
  return r;
}

Cyclotomic dot(const CMat& f, Eigen::Index row, const CVec& x) {
  Cyclotomic s(0);
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!f(row, i).is_zero() && !x(i).is_zero()) s += f(row, i) * x(i);
  return s;
}

std::vector<std::complex<double>> numeric_vec(const CVec& x) {
  std::vector<std::complex<double>> r(static_cast<std::size_t>(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i) r[static_cast<std::size_t>(i)] = x(i).to_complex();
  return r;
}

}  // namespace

std::size_t EisMatHash::operator()(const EisMat& m) const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ m.dim;
  for (auto x : m.v) {
    h ^= static_cast<std::uint16_t>(x);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

EisMat eis_mul(const EisMat& a, const EisMat& b) {
  if (a.dim != b.dim) throw Error(Errc::DimensionMismatch, "eis_mul");
  EisMat r;
  r.dim = a.dim;
  const int d = a.dim;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      int A = 0, B = 0;
      for (int k = 0; k < d; ++k) {
        const int a1 = a.re(i, k), b1 = a.om(i, k), a2 = b.re(k, j), b2 = b.om(k, j);
        // (a1 + b1 w)(a2 + b2 w) with w^2 = -1 - w
        A += a1 * a2 - b1 * b2;
        B += a1 * b2 + a2 * b1 - b1 * b2;
      }
      if (A % EisMat::kDen != 0 || B % EisMat::kDen != 0)
        throw Error(Errc::DimensionMismatch, "product leaves the (a + b omega)/9 lattice");
      r.re(i, j) = static_cast<std::int16_t>(A / EisMat::kDen);
      r.om(i, j) = static_cast<std::int16_t>(B / EisMat::kDen);
    }
  }
  return r;
}

std::optional<EisMat> to_eis(const CMat& m) {
  if (m.rows() != m.cols() || m.rows() > 4) return std::nullopt;
  EisMat r;
  r.dim = static_cast<std::uint8_t>(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      auto z = m(i, j).to_complex();
      const double b = std::round(2.0 * EisMat::kDen * z.imag() / kSqrt3);
      const double a = std::round(EisMat::kDen * z.real() + b / 2.0);
      if (std::abs(a) > 30000 || std::abs(b) > 30000) return std::nullopt;
      Cyclotomic back = (Cyclotomic(static_cast<long long>(a)) + Cyclotomic(static_cast<long long>(b)) * omega()) *
                        Cyclotomic(Rational(1, EisMat::kDen));
      if (!(back == m(i, j))) return std::nullopt;
      r.re(static_cast<int>(i), static_cast<int>(j)) = static_cast<std::int16_t>(a);
      r.om(static_cast<int>(i), static_cast<int>(j)) = static_cast<std::int16_t>(b);
    }
  }
  return r;
}

CMat from_eis(const EisMat& m) {
  CMat r(m.dim, m.dim);
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j)
      r(i, j) = (Cyclotomic(Rational(m.re(i, j), EisMat::kDen)) + Cyclotomic(Rational(m.om(i, j), EisMat::kDen)) * omega())
                    .promote(3);
  return r;
}

std::complex<double> eis_entry(const EisMat& m, int i, int j) {
  const double a = m.re(i, j), b = m.om(i, j);
  return {(a - b / 2.0) / EisMat::kDen, b * kSqrt3 / 2.0 / EisMat::kDen};
}

std::pair<int, int> eis_trace(const EisMat& m) {
  int a = 0, b = 0;
  for (int i = 0; i < m.dim; ++i) {
    a += m.re(i, i);
    b += m.om(i, i);
  }
  return {a, b};
}

std::vector<CMat> g25_generators() {
  const Cyclotomic w = omega(), w2 = w * w, one(1), zero(0);
  const Cyclotomic c = (w2 - w) * Cyclotomic(Rational(1, 3));
  CMat r1 = cmat({{one, zero, zero}, {zero, one, zero}, {zero, zero, w2}});
  CMat r2 = cmat({{c * w, c * w2, c * w2}, {c * w2, c * w, c * w2}, {c * w2, c * w2, c * w}});
  CMat r3 = cmat({{one, zero, zero}, {zero, w2, zero}, {zero, zero, one}});
  return {r1, r2, r3};
}

std::vector<CMat> g32_generators() {
  const Cyclotomic w = omega(), w2 = w * w, one(1), zero(0);
  const Cyclotomic c = (w2 - w) * Cyclotomic(Rational(1, 3));
  CMat r1 = cmat({{one, zero, zero, zero}, {zero, one, zero, zero}, {zero, zero, w2, zero}, {zero, zero, zero, one}});
  CMat r2 = cmat({{c * w, c * w2, c * w2, zero},
                  {c * w2, c * w, c * w2, zero},
                  {c * w2, c * w2, c * w, zero},
                  {zero, zero, zero, c * (w - w2)}});
  CMat r3 = cmat({{one, zero, zero, zero}, {zero, w2, zero, zero}, {zero, zero, one, zero}, {zero, zero, zero, one}});
  CMat r4 = cmat({{c * w, -(c * w2), zero, -(c * w2)},
                  {-(c * w2), c * w, zero, c * w2},
                  {zero, zero, c * (w - w2), zero},
                  {-(c * w2), c * w2, zero, c * w}});
  return {r1, r2, r3, r4};
}

std::vector<EisMat> closure(const std::vector<CMat>& gens, std::size_t bound) {
  if (gens.empty()) throw Error(Errc::DimensionMismatch, "closure needs at least one generator");
  std::vector<EisMat> g;
  for (const auto& m : gens) {
    auto e = to_eis(m);
    if (!e) throw Error(Errc::DimensionMismatch, "generator entries must lie in Q(omega) with denominator dividing 9");
    g.push_back(*e);
  }
  EisMat id;
  id.dim = g.front().dim;
  for (int i = 0; i < id.dim; ++i) id.re(i, i) = EisMat::kDen;
  std::vector<EisMat> elems{id};
  std::unordered_set<EisMat, EisMatHash> seen{id};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& s : g) {
      EisMat p = eis_mul(s, elems[head]);
      if (seen.insert(p).second) {
        if (elems.size() >= bound) throw Error(Errc::BoundExceeded, "group closure exceeds " + std::to_string(bound));
        elems.push_back(p);
      }
    }
  }
  return elems;
}

void find_reflections(ReflGroup& g) {
  g.reflections.clear();
  const int d = g.dim;
  for (std::size_t k = 0; k < g.elements.size(); ++k) {
    const auto& e = g.elements[k];
    // trace = (d - 1) + eps with |eps| = 1, eps != 1
    auto [a, b] = eis_trace(e);
    std::complex<double> t{(a - b / 2.0) / EisMat::kDen, b * kSqrt3 / 2.0 / EisMat::kDen};
    std::complex<double> eps = t - static_cast<double>(d - 1);
    if (std::abs(std::abs(eps) - 1.0) > 1e-9 || std::abs(eps - 1.0) < 1e-9) continue;
    CMat m = from_eis(e);
    if (is_complex_reflection(m).is_reflection) g.reflections.push_back(k);
  }
}

void find_hyperplanes(ReflGroup& g) {
  g.hyperplanes.clear();
  std::set<std::string> keys;
  for (auto idx : g.reflections) {
    CMat m = g.element(idx) - identity<Cyclotomic>(g.dim);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      CVec row = m.row(r).transpose();
      bool nz = false;
      for (Eigen::Index i = 0; i < row.size(); ++i) nz = nz || !row(i).is_zero();
      if (!nz) continue;
      CVec f = projective_normalize(row);
      if (keys.insert(canon_key(row_of(f), 6)).second) g.hyperplanes.push_back(f);
      break;
    }
  }
}

CMat g32_T() {
  auto R = g32_generators();
  auto sq = [](const CMat& m) { return matmul(m, m); };
  // R1^2 R2 R3^2 R4 R2^2 R3
  CMat t = sq(R[0]);
  for (const CMat& f : {R[1], sq(R[2]), R[3], sq(R[1]), R[2]}) t = matmul(t, f);
  return t;
}

CMat g32_E_plane() {
  CMat t2 = matmul(g32_T(), g32_T());
  const Cyclotomic zeta = Cyclotomic::zeta(12, 1);  // zeta^2 = zeta_6 = -omega^2
  CMat basis = eigenspace(t2, zeta);
  if (basis.rows() != 2) throw Error(Errc::DimensionMismatch, "eigenspace of T^2 is not a plane");
  return kernel(basis);
}

namespace {

// A plane cut by the rows of f, reduced to canonical echelon form.
CMat canonical_forms(const CMat& f) { return row_space(f); }

void proper_planes_g25(ReflGroup& g) {
  std::set<std::string> hyper;
  for (const auto& h : g.hyperplanes) hyper.insert(canon_key(row_of(h), 6));
  std::set<std::string> keys;
  const Cyclotomic e1 = Cyclotomic::zeta(6, 1), e5 = Cyclotomic::zeta(6, 5);
  for (std::size_t k = 0; k < g.elements.size(); ++k) {
    const auto& el = g.elements[k];
    // eigenvalue of order 6 with multiplicity 2 forces trace = 2 eps + (third eigenvalue); cheap numeric prefilter
    std::complex<double> tr{0, 0};
    for (int i = 0; i < g.dim; ++i) tr += eis_entry(el, i, i);
    CMat m;
    bool loaded = false;
    for (const auto& ev : {e1, e5}) {
      std::complex<double> third = tr - 2.0 * ev.to_complex();
      if (std::abs(std::abs(third) - 1.0) > 1e-9) continue;
      if (!loaded) {
        m = from_eis(el);
        loaded = true;
      }
      CMat es = eigenspace(m, ev);
      if (es.rows() != 2) continue;
      CMat f = canonical_forms(kernel(es));
      std::string key = canon_key(f, 6);
      if (hyper.count(key)) continue;  // a reflection plane is not regular
      if (keys.insert(key).second) g.proper_planes.push_back(f);
    }
  }
}

void proper_planes_orbit(ReflGroup& g, const CMat& seed) {
  std::vector<CMat> inv_gens;
  for (const auto& s : g.gens) inv_gens.push_back(matinv(s));
  std::set<std::string> keys;
  CMat f0 = canonical_forms(seed);
  keys.insert(canon_key(f0, 12));
  g.proper_planes = {f0};
  for (std::size_t head = 0; head < g.proper_planes.size(); ++head) {
    for (const auto& si : inv_gens) {
      // forms of s(P) are the forms of P composed with s^{-1}
      CMat f = canonical_forms(matmul(g.proper_planes[head], si));
      if (keys.insert(canon_key(f, 12)).second) g.proper_planes.push_back(f);
    }
  }
}

}  // namespace

void find_proper_planes(ReflGroup& g) {
  g.proper_planes.clear();
  if (g.name == "G32")
    proper_planes_orbit(g, g32_E_plane());
  else
    proper_planes_g25(g);
}

ReflGroup build_group(const std::string& name, const std::vector<CMat>& gens, std::size_t bound) {
  ReflGroup g;
  g.name = name;
  g.gens = gens;
  g.dim = static_cast<int>(gens.at(0).rows());
  g.elements = closure(gens, bound);
  find_reflections(g);
  find_hyperplanes(g);
  return g;
}

namespace {

constexpr const char* kCacheMagic = "affbraid-closure v1";

std::optional<std::vector<EisMat>> read_cache(const std::filesystem::path& p, int dim, std::size_t expected) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::string magic;
  std::getline(in, magic);
  std::size_t count = 0;
  int d = 0;
  in >> d >> count;
  in.get();
  if (magic != kCacheMagic || d != dim || count != expected) return std::nullopt;
  std::vector<EisMat> out(count);
  for (auto& m : out) {
    m.dim = static_cast<std::uint8_t>(dim);
    in.read(reinterpret_cast<char*>(m.v.data()), sizeof(m.v));
  }
  if (!in) return std::nullopt;
  return out;
}

void write_cache(const std::filesystem::path& p, int dim, const std::vector<EisMat>& elems) {
  std::error_code ec;
  std::filesystem::create_directories(p.parent_path(), ec);
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) return;
  out << kCacheMagic << '\n' << dim << ' ' << elems.size() << '\n';
  for (const auto& m : elems) out.write(reinterpret_cast<const char*>(m.v.data()), sizeof(m.v));
}

ReflGroup make_known(const std::string& name, const std::vector<CMat>& gens, std::size_t order, std::vector<int> deg,
                     std::vector<int> codeg) {
  ReflGroup g;
  g.name = name;
  g.gens = gens;
  g.dim = static_cast<int>(gens.front().rows());
  const char* dir = std::getenv("AFFBRAID_CACHE_DIR");
  std::optional<std::filesystem::path> path;
  if (dir && *dir) path = std::filesystem::path(dir) / (name + ".closure");
  std::optional<std::vector<EisMat>> cached;
  if (path) cached = read_cache(*path, g.dim, order);
  if (cached) {
    // trust only if the generators are present
    std::unordered_set<EisMat, EisMatHash> s(cached->begin(), cached->end());
    bool ok = true;
    for (const auto& m : gens) ok = ok && s.count(*to_eis(m)) > 0;
    if (ok) g.elements = std::move(*cached);
  }
  if (g.elements.empty()) {
    g.elements = closure(gens, order + 1);
    if (path) write_cache(*path, g.dim, g.elements);
  }
  g.degrees = std::move(deg);
  g.codegrees = std::move(codeg);
  find_reflections(g);
  find_hyperplanes(g);
  find_proper_planes(g);
  return g;
}

}  // namespace

const ReflGroup& g25() {
  static const ReflGroup g = make_known("G25", g25_generators(), 648, {6, 9, 12}, {0, 3, 6});
  return g;
}

const ReflGroup& g32() {
  static const ReflGroup g = make_known("G32", g32_generators(), 155520, {12, 18, 24, 30}, {0, 6, 12, 18});
  return g;
}

std::vector<std::size_t> line_stabilizer(const ReflGroup& g, const CVec& x) {
  auto xn = numeric_vec(x);
  double nx = 0;
  for (auto& c : xn) nx += std::norm(c);
  nx = std::sqrt(nx);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < g.elements.size(); ++k) {
    const auto& e = g.elements[k];
    std::complex<double> ip{0, 0};
    double ny = 0;
    for (int i = 0; i < g.dim; ++i) {
      std::complex<double> yi{0, 0};
      for (int j = 0; j < g.dim; ++j) yi += eis_entry(e, i, j) * xn[static_cast<std::size_t>(j)];
      ip += std::conj(xn[static_cast<std::size_t>(i)]) * yi;
      ny += std::norm(yi);
    }
    if (std::abs(std::abs(ip) - nx * std::sqrt(ny)) > 1e-8 * nx * nx) continue;
    if (parallel(matvec(from_eis(e), x), x)) out.push_back(k);
  }
  return out;
}

std::vector<TableStratum> table4() {
  return {{216, 0, 0, ""},   {72, 0, 0, "nu9"}, {108, 0, 1, ""}, {54, 0, 1, "omega"},
          {72, 1, 0, ""},    {36, 1, 1, ""},    {12, 2, 3, ""},  {9, 4, 0, ""}};
}

std::vector<TableStratum> table5() {
  return {{25920, 0, 0, ""}, {5184, 0, 0, "nu30"}, {12960, 0, 1, ""}, {6480, 0, 1, "nu24"},
          {8640, 1, 0, ""},  {2880, 1, 0, "nu9"},  {2880, 2, 0, ""},  {1440, 2, 3, ""},
          {1080, 4, 0, ""},  {540, 4, 6, ""},      {360, 5, 0, ""},   {40, 12, 0, ""}};
}

StratumLabel stratify(const ReflGroup& g, const CVec& x) {
  StratumLabel s;
  for (const auto& h : g.hyperplanes) {
    CMat f = row_of(h);
    if (dot(f, 0, x).is_zero()) ++s.reflection_planes;
  }
  for (const auto& p : g.proper_planes) {
    bool on = true;
    for (Eigen::Index r = 0; r < p.rows() && on; ++r) on = dot(p, r, x).is_zero();
    if (on) ++s.proper_planes;
  }
  const std::size_t stab = line_stabilizer(g, x).size();
  s.orbit_size = stab ? g.order() / stab : 0;
  const auto rows = g.name == "G32" ? table5() : table4();
  for (const auto& r : rows) {
    if (r.size == s.orbit_size && r.refl == s.reflection_planes && r.proper == s.proper_planes) {
      s.in_table = true;
      s.special = r.special;
    }
  }
  return s;
}

LatticeCensus lattice_census(const std::vector<CVec>& forms) {
  LatticeCensus c;
  c.hyperplanes = forms.size();
  const std::size_t n = forms.size();
  if (n == 0) return c;
  const Eigen::Index d = forms.front().size();
  auto stack = [&](std::initializer_list<std::size_t> idx) {
    CMat m(static_cast<Eigen::Index>(idx.size()), d);
    Eigen::Index r = 0;
    for (auto i : idx) m.row(r++) = forms[i].transpose();
    return m;
  };
  auto count_on = [&](const CMat& span) {
    // hyperplanes containing the flat = forms in the row span
    int cnt = 0;
    for (const auto& f : forms) {
      CMat m(span.rows() + 1, d);
      m.topRows(span.rows()) = span;
      m.row(span.rows()) = f.transpose();
      if (rank(m) == span.rows()) ++cnt;
    }
    return cnt;
  };
  std::map<std::string, CMat> planes, lines;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      CMat s = row_space(stack({i, j}));
      if (s.rows() == 2) planes.emplace(canon_key(s, 6), s);
    }
  std::map<int, std::size_t> ph, lh;
  for (const auto& [k, s] : planes) ++ph[count_on(s)];
  if (d >= 4) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          CMat s = row_space(stack({i, j, k}));
          if (s.rows() == 3) lines.emplace(canon_key(s, 6), s);
        }
    for (const auto& [k, s] : lines) ++lh[count_on(s)];
  }
  for (auto [k, v] : ph) c.plane_histogram.emplace_back(k, v);
  for (auto [k, v] : lh) c.line_histogram.emplace_back(k, v);
  c.planes_2 = ph.count(2) ? ph[2] : 0;
  c.planes_4 = ph.count(4) ? ph[4] : 0;
  c.lines_5 = lh.count(5) ? lh[5] : 0;
  c.lines_12 = lh.count(12) ? lh[12] : 0;
  return c;
}

namespace {

CVec vec(std::initializer_list<Cyclotomic> xs) {
  CVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

// First primitive nu of the given order making x(nu) an eigenvector of m with eigenvalue nu.
template <class F>
CVec eigen_point(const CMat& m, int order, F point) {
  for (int k = 1; k < order; ++k) {
    if (std::gcd(k, order) != 1) continue;
    Cyclotomic nu = Cyclotomic::zeta(order, k);
    CVec x = point(nu);
    CVec y = matvec(m, x);
    bool ok = true;
    for (Eigen::Index i = 0; i < x.size() && ok; ++i) ok = y(i) == nu * x(i);
    if (ok) return x;
  }
  throw Error(Errc::NotRootOfUnity, "no primitive root of order " + std::to_string(order) + " fits the displayed point");
}

}  // namespace

std::vector<NamedPoint> special_representatives_g25() {
  const Cyclotomic w = omega(), one(1), zero(0);
  std::vector<NamedPoint> out;
  // [nu : nu^2 : 1] is the nu-eigenvector of ((0,1,0),(0,0,nu^3),(1,0,0)), an element of G25
  const Cyclotomic nu = Cyclotomic::zeta(9, 1);
  CMat m = cmat({{zero, one, zero}, {zero, zero, nu.pow(3)}, {one, zero, zero}});
  CVec p9 = eigen_point(m, 9, [&](const Cyclotomic& v) { return vec({v, v * v, one}); });
  out.push_back({"nu9", p9, 72});
  out.push_back({"[0:w:1]", vec({zero, w, one}), 54});
  // an eigenvector of an order-12 element lying on the proper plane x = y
  const Cyclotomic c = Cyclotomic::zeta(12, 1) - Cyclotomic::zeta(6, 1) + Cyclotomic::zeta(4, 1);
  out.push_back({"order54", vec({one, one, c}), 54});
  return out;
}

std::vector<NamedPoint> special_representatives_g32() {
  auto R = g32_generators();
  auto sq = [](const CMat& m) { return matmul(m, m); };
  const Cyclotomic one(1), zero(0);
  std::vector<NamedPoint> out;
  CMat m30 = matmul(matmul(matmul(sq(R[0]), R[1]), sq(R[2])), R[3]);
  CVec p30 = eigen_point(m30, 30, [&](const Cyclotomic& v) {
    return vec({v.pow(7) + v - v.pow(5), v.pow(7) - v.pow(6), -v.pow(8) + v.pow(7) + v.pow(6) - v.pow(4) - v.pow(2) + one,
                one});
  });
  out.push_back({"nu30", p30, 5184});
  CVec p24 = eigen_point(g32_T(), 24, [&](const Cyclotomic& v) {
    return vec({-v.pow(10) + v.pow(3) - one, v.pow(11) - v.pow(9) + v.pow(6) - v.pow(4) + v, v.pow(11) - v.pow(10), one});
  });
  out.push_back({"nu24", p24, 6480});
  const Cyclotomic nu = Cyclotomic::zeta(9, 1);
  out.push_back({"nu9", vec({nu, nu * nu, one, zero}), 2880});
  return out;
}

std::vector<NamedPoint> table4_representatives() {
  const Cyclotomic one(1), zero(0), two(2), five(5);
  auto sp = special_representatives_g25();
  return {{"generic", vec({one, two, five}), 216},
          sp[0],
          {"on x = z", vec({one, two, one}), 108},
          sp[2],
          {"on z = 0", vec({one, two, zero}), 72},
          {"[1:1:0]", vec({one, one, zero}), 36},
          {"[1:0:0]", vec({one, zero, zero}), 12},
          {"[1:-1:0]", vec({one, -one, zero}), 9}};
}

std::vector<NamedPoint> table5_representatives() {
  const Cyclotomic one(1), zero(0), two(2), five(5);
  auto sp = special_representatives_g32();
  CMat e = kernel(g32_E_plane());
  CVec on_e = (e.row(0) + e.row(1) * Cyclotomic(3)).transpose();
  // a line of the plane {z3 = 0, z1 + z2 + z3 = 0} cut by a proper plane
  const Cyclotomic z = Cyclotomic::zeta(12, 1);
  const Cyclotomic c540 = one + z - z.pow(2) - Cyclotomic(2) * z.pow(3);
  return {{"generic", vec({one, two, five, Cyclotomic(11)}), 25920},
          sp[0],
          {"on E", on_e, 12960},
          sp[1],
          {"on z4 = 0", vec({one, two, five, zero}), 8640},
          sp[2],
          {"[1:2:0:0]", vec({one, two, zero, zero}), 2880},
          {"[1:zeta12:0:0]", vec({one, z, zero, zero}), 1440},
          {"[1:2:2:0]", vec({one, two, two, zero}), 1080},
          {"[1:-1:0:c]", vec({one, -one, zero, c540}), 540},
          {"[1:1:0:0]", vec({one, one, zero, zero}), 360},
          {"[0:1:0:0]", vec({zero, one, zero, zero}), 40}};
}

std::vector<CVec> hessian_vertices() {
  std::vector<CVec> out;
  const Cyclotomic zero(0);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      Cyclotomic a = omega().pow(j), b = -omega().pow(k);
      out.push_back(vec({zero, a, b}));
      out.push_back(vec({b, zero, a}));
      out.push_back(vec({a, b, zero}));
    }
  return out;
}

std::vector<CVec> witting_vertices(bool displayed_signs) {
  std::vector<CVec> out;
  const Cyclotomic zero(0), w = omega(), s3 = w - w * w;  // i sqrt(3)
  for (int j = 0; j < 3; ++j)
    for (int sgn : {1, -1}) {
      Cyclotomic a = Cyclotomic(sgn) * s3 * w.pow(j);
      for (int pos = 0; pos < 4; ++pos) {
        CVec v = vec({zero, zero, zero, zero});
        v(pos) = a;
        out.push_back(v);
      }
    }
  for (int l = 0; l < 3; ++l)
    for (int m = 0; m < 3; ++m)
      for (int k = 0; k < 3; ++k)
        for (int sgn : {1, -1}) {
          Cyclotomic a = Cyclotomic(sgn) * w.pow(l), b = Cyclotomic(sgn) * w.pow(m), c = Cyclotomic(sgn) * w.pow(k);
          // the last coordinate of the first three families carries the opposite sign in this realization
          const Cyclotomic d = displayed_signs ? c : -c;
          out.push_back(vec({zero, a, -b, d}));
          out.push_back(vec({-a, zero, b, d}));
          out.push_back(vec({a, -b, zero, d}));
          out.push_back(vec({a, b, c, zero}));
        }
  return out;
}

bool symmetry_check(const std::vector<CMat>& gens, const std::vector<CVec>& vertices) {
  std::set<std::string> keys;
  for (const auto& v : vertices) keys.insert(canon_key(row_of(v), 6));
  if (keys.size() != vertices.size()) return false;
  for (const auto& g : gens)
    for (const auto& v : vertices)
      if (!keys.count(canon_key(row_of(matvec(g, v)), 6))) return false;
  return true;
}

ConjugacyReport conjugacy_to_braid_action(int n, bool zeta_is_minus_omega) {
  if (n != 5 && n != 6) throw Error(Errc::DimensionMismatch, "conjugacy check exists for n = 5 and n = 6 only");
  ConjugacyReport rep;
  const Cyclotomic w = omega(), one(1), zero(0);
  const Cyclotomic z = zeta_is_minus_omega ? -w : -(w * w);
  const Cyclotomic z2 = z * z;
  std::vector<Cyclotomic> lam(static_cast<std::size_t>(n - 1), z);
  lam.push_back(z.pow(-(n - 1)));
  LinearPart lin(lam);
  const int d = n - 2;
  std::vector<CMat> A;
  for (int i = 1; i <= n - 2; ++i) A.push_back(section_matrix(lin, BraidWord(n, {BraidLetter::sigma(i)})));

  // displayed action matrices
  rep.a_matrices_match = true;
  for (int i = 0; i < d; ++i) {
    CMat disp = identity<Cyclotomic>(d);
    if (i == 0) {
      for (int r = 0; r < d; ++r) disp(r, 0) = -z;
    } else {
      disp(i - 1, i - 1) = -z2;
      disp(i - 1, i) = z;
      disp(i, i - 1) = one;
      disp(i, i) = zero;
    }
    rep.a_matrices_match = rep.a_matrices_match && equal(A[static_cast<std::size_t>(i)], disp);
  }

  CMat P(d, d);
  const Cyclotomic rows5[3][3] = {{zero, zero, one - z2}, {z2, z2, one}, {z2, -z, one}};
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) P(r, c) = zero;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) P(r, c) = rows5[r][c];
  if (n == 6) {
    P(3, 0) = -one;
    P(3, 2) = one;
    P(3, 3) = z;
  }
  const CMat Pi = matinv(P);
  const auto R = n == 5 ? g25_generators() : g32_generators();
  rep.relations_hold = true;
  for (int i = 0; i < d; ++i) {
    const bool squared = zeta_is_minus_omega ? (i % 2 == 0) : (i % 2 == 1);
    CMat a = A[static_cast<std::size_t>(i)];
    if (squared) a = matmul(a, a);
    rep.relations_hold = rep.relations_hold && equal(matmul(matmul(Pi, a), P), R[static_cast<std::size_t>(i)]);
  }
  rep.braid_relations = check_braid_relations(A, false);
  rep.order_three = true;
  for (const auto& a : A) rep.order_three = rep.order_three && matrix_order(a, 10) == 3;
  return rep;
}

}  // namespace affb
