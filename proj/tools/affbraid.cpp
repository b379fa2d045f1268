#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <sstream>

#include "affbraid/braid.hpp"
#include "affbraid/charvar.hpp"
#include "affbraid/classify.hpp"
#include "affbraid/coalesce.hpp"
#include "affbraid/connect.hpp"
#include "affbraid/reflgrp.hpp"

using nlohmann::json;
using namespace affb;

namespace {

struct Config {
  std::string lambda, tau, point, which, braid, poles = "-1,0,1", base = "0.3-2i", theta = "1/6", sign = "+";
  std::string format = "json", out_dir;
  std::size_t bound = 200000;
  std::uint64_t seed = 1;
  double tol = 1e-6;
  int jobs = 1, n = 0, k = 0, l = 1, rank = 3;
  bool long_running = false, full = false, points = false;
};

// Split on commas that are not nested in parentheses or brackets.
std::vector<std::string> split_list(std::string s) {
  while (!s.empty() && (s.front() == '[' || s.front() == ' ')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ']' || s.back() == ' ')) s.pop_back();
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == ',' || c == ':') && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

std::vector<Cyclotomic> parse_values(const std::string& s) {
  std::vector<Cyclotomic> v;
  for (const auto& part : split_list(s)) v.push_back(parse_cyclo(part));
  return v;
}

AffineRep parse_rep(const Config& c) {
  LinearPart lin(parse_values(c.lambda));
  auto t = parse_values(c.tau);
  if (static_cast<int>(t.size()) == lin.n()) return AffineRep::from_full(lin, t);
  return AffineRep(lin, t);
}

std::complex<double> parse_complex(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (s.empty()) throw ParseError(0, {"number"}, s);
  if (s.back() != 'i') return {std::stod(s), 0.0};
  s.pop_back();
  // split at the last sign that is not an exponent sign or the leading sign
  std::size_t cut = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;)
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      cut = i;
      break;
    }
  auto num = [](const std::string& x) {
    if (x.empty() || x == "+") return 1.0;
    if (x == "-") return -1.0;
    return std::stod(x);
  };
  if (cut == std::string::npos) return {0.0, num(s)};
  return {std::stod(s.substr(0, cut)), num(s.substr(cut))};
}

json cyc_list(const std::vector<Cyclotomic>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json class_json(const ProjClass& c) {
  json j;
  j["class"] = c.str();
  j["zero"] = c.zero;
  j["rotation"] = c.rotation;
  return j;
}

json cmatrix_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) r.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(r);
  }
  return rows;
}

void emit(const json& j, const Config& c) {
  if (c.format == "pretty")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

int cmd_orbit(const Config& c) {
  AffineRep rep = parse_rep(c);
  OrbitOptions opt;
  opt.bound = c.bound;
  opt.witnesses = c.points;
  OrbitResult r = orbit(rep, opt);
  json j;
  j["size"] = r.size;
  j["exceeded_bound"] = r.exceeded_bound;
  if (c.points) {
    json pts = json::array();
    for (std::size_t i = 0; i < r.points.size(); ++i) {
      json p = class_json(r.points[i]);
      if (i < r.witnesses.size()) p["braid"] = r.witnesses[i].str();
      pts.push_back(p);
    }
    j["points"] = pts;
  }
  emit(j, c);
  return 0;
}

int cmd_classify4(const Config& c) {
  LinearPart lin(parse_values(c.lambda));
  if (lin.n() != 4) throw Error(Errc::DimensionMismatch, "classify4 needs four entries");
  N4Class k = classify_n4(lin);
  json j;
  j["tag"] = n4_tag_name(k.tag);
  j["finite"] = k.finite();
  if (k.finite()) j["projective_order"] = k.projective_order();
  if (k.m) j["m"] = k.m;
  j["P"] = k.P.str();
  j["t_squared"] = cyc_list({k.t2[0], k.t2[1], k.t2[2]});
  emit(j, c);
  return 0;
}

int cmd_gate(const Config& c) {
  GateVerdict v = gate(parse_rep(c));
  json j;
  j["verdict"] = verdict_name(v.verdict);
  j["size"] = v.size;
  j["reason"] = v.reason;
  emit(j, c);
  return 0;
}

const ReflGroup& pick_group(const std::string& which) {
  if (which == "g25") return g25();
  if (which == "g32") return g32();
  throw Error(Errc::ParseError, "--which must be g25 or g32");
}

int cmd_group(const Config& c) {
  const ReflGroup& g = pick_group(c.which);
  long long prod = 1;
  for (int d : g.degrees) prod *= d;
  json j;
  j["order"] = g.order();
  j["reflections"] = g.reflections.size();
  j["hyperplanes"] = g.hyperplanes.size();
  j["proper_planes"] = g.proper_planes.size();
  j["degrees"] = g.degrees;
  j["codegrees"] = g.codegrees;
  j["degrees_product_matches"] = static_cast<std::size_t>(prod) == g.order();
  if (c.full) {
    json hs = json::array();
    for (const auto& h : g.hyperplanes) {
      std::vector<Cyclotomic> v(h.data(), h.data() + h.size());
      hs.push_back(cyc_list(v));
    }
    j["hyperplane_forms"] = hs;
    const bool sym = c.which == "g25" ? symmetry_check(g.gens, hessian_vertices()) : symmetry_check(g.gens, witting_vertices());
    j["polytope_symmetry"] = sym;
  }
  emit(j, c);
  return j["degrees_product_matches"].get<bool>() ? 0 : 1;
}

int cmd_strata(const Config& c) {
  const ReflGroup& g = pick_group(c.which);
  auto vals = parse_values(c.point);
  if (static_cast<int>(vals.size()) != g.dim) throw Error(Errc::DimensionMismatch, "point has the wrong dimension");
  CVec x(g.dim);
  for (int i = 0; i < g.dim; ++i) x(i) = vals[static_cast<std::size_t>(i)];
  StratumLabel s = stratify(g, x);
  json j;
  j["orbit_size"] = s.orbit_size;
  j["reflection_planes"] = s.reflection_planes;
  j["proper_planes"] = s.proper_planes;
  j["special"] = s.special;
  j["in_table"] = s.in_table;
  emit(j, c);
  return s.in_table ? 0 : 1;
}

int cmd_lattice(const Config& c) {
  const ReflGroup& g = pick_group(c.which.empty() ? "g32" : c.which);
  LatticeCensus L = lattice_census(g.hyperplanes);
  json j;
  j["hyperplanes"] = L.hyperplanes;
  j["planes_on_2"] = L.planes_2;
  j["planes_on_4"] = L.planes_4;
  j["lines_on_5"] = L.lines_5;
  j["lines_on_12"] = L.lines_12;
  json ph = json::object(), lh = json::object();
  for (auto [k, v] : L.plane_histogram) ph[std::to_string(k)] = v;
  for (auto [k, v] : L.line_histogram) lh[std::to_string(k)] = v;
  j["codim2_histogram"] = ph;
  j["codim3_histogram"] = lh;
  emit(j, c);
  return 0;
}

int cmd_coalesce(const Config& c) {
  AffineRep rep = parse_rep(c);
  CoalesceSpec spec{rep.n(), c.k, c.l};
  AffineRep out = r_kl(rep, spec);
  json j;
  j["lambda"] = cyc_list(out.lin.values());
  j["tau"] = cyc_list(out.tau);
  j["class"] = class_of(out).str();
  int rc = 0;
  if (!c.braid.empty()) {
    BraidWord b = parse_braid(c.braid, c.k);
    const bool ok = equivariance_check(rep, spec, b);
    j["braid"] = b.str();
    j["image"] = phi_kl(b, c.k, c.l, rep.n()).str();
    j["equivariant"] = ok;
    rc = ok ? 0 : 1;
  }
  emit(j, c);
  return rc;
}

int cmd_monodromy(const Config& c) {
  if (c.rank != 3 && c.rank != 4) throw Error(Errc::DimensionMismatch, "--rank must be 3 or 4");
  std::vector<std::complex<double>> poles;
  for (const auto& p : split_list(c.poles)) poles.push_back(parse_complex(p));
  if (static_cast<int>(poles.size()) != c.rank) throw Error(Errc::DimensionMismatch, "one pole per residue");
  const Rational t = Rational::parse(c.theta);
  const double th = t.to_double();
  const double sgn = c.sign == "-" ? -1.0 : 1.0;
  std::vector<Eigen::MatrixXcd> res;
  for (int p = 0; p < c.rank; ++p) {
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(c.rank, c.rank);
    for (int i = 0; i < c.rank; ++i) d(i, p) = i == p ? 2 * th : th;
    res.push_back(-sgn * d);
  }
  MonodromyResult m = monodromy_numeric(res, poles, parse_complex(c.base));
  json j;
  json gens = json::array(), eig = json::array();
  for (const auto& g : m.loops) {
    gens.push_back(cmatrix_json(g));
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(g);
    json e = json::array();
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
      e.push_back({es.eigenvalues()(i).real(), es.eigenvalues()(i).imag()});
    eig.push_back(e);
  }
  j["loop_order"] = m.order;
  j["generators"] = gens;
  j["eigenvalues"] = eig;
  j["steps"] = m.steps;
  if (c.rank == 3 || c.long_running) {
    j["closure_size"] = numeric_closure(m.loops, c.tol, c.rank == 3 ? std::max<std::size_t>(c.bound, 1000) : 200000);
  } else {
    j["closure_size"] = nullptr;
    j["note"] = "rank 4 closure runs with --long-running";
  }
  emit(j, c);
  return 0;
}

struct CsvRow {
  std::string id, lambda, tau;
  std::size_t expected = 0, computed = 0;
  bool pass = false;
};

std::string quote(const std::string& s) { return "\"" + s + "\""; }

std::string join_cyc(const std::vector<Cyclotomic>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "; " : "") + v[i].str();
  return s + ")";
}

std::vector<CsvRow> family_rows(const TableFamily& fam, std::size_t bound) {
  std::vector<CsvRow> out;
  int idx = 0;
  for (const auto& row : fam.rows) {
    CsvRow r;
    r.id = fam.id + "-" + std::to_string(++idx) + ":" + row.label;
    r.lambda = fam.lin.str();
    r.tau = join_cyc(row.tau);
    r.expected = static_cast<std::size_t>(row.size);
    OrbitOptions opt;
    opt.bound = bound;
    OrbitResult o = orbit(AffineRep(fam.lin, row.tau), opt);
    r.computed = o.exceeded_bound ? 0 : o.size;
    r.pass = !o.exceeded_bound && r.computed == r.expected;
    out.push_back(r);
  }
  return out;
}

std::vector<CsvRow> strata_rows(int table) {
  const ReflGroup& g = table == 4 ? g25() : g32();
  const auto expected = table == 4 ? table4() : table5();
  auto reps = table == 4 ? table4_representatives() : table5_representatives();
  const std::string lam = table == 4 ? "(zeta; zeta; zeta; zeta; zeta^2)" : "(zeta; zeta; zeta; zeta; zeta; zeta)";
  std::vector<CsvRow> out;
  auto add = [&](const std::string& id, const CVec& x, const TableStratum& want) {
    StratumLabel s = stratify(g, x);
    CsvRow r;
    r.id = id;
    r.lambda = lam;
    std::vector<Cyclotomic> v(x.data(), x.data() + x.size());
    r.tau = join_cyc(v);
    r.expected = want.size;
    r.computed = s.orbit_size;
    r.pass = s.orbit_size == want.size && s.reflection_planes == want.refl && s.proper_planes == want.proper;
    out.push_back(r);
  };
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const auto& w = expected[i];
    add("T" + std::to_string(table) + "-" + std::to_string(w.size) + "-" + std::to_string(w.refl) + "-" +
            std::to_string(w.proper) + ":" + reps[i].name,
        reps[i].point, w);
  }
  if (table == 4) {
    // the displayed representative of the 54-orbit, checked as printed
    for (const auto& sp : special_representatives_g25())
      if (sp.name == "[0:w:1]") add("T4-displayed:[0:w:1]", sp.point, expected[3]);
  }
  return out;
}

int cmd_tables(const Config& c) {
  std::vector<int> which;
  if (c.which.empty() || c.which == "all")
    which = {1, 2, 3, 4, 5};
  else
    which = {std::stoi(c.which)};
  bool all_pass = true;
  for (int t : which) {
    std::vector<CsvRow> rows;
    if (t <= 3) {
      std::vector<TableFamily> fams;
      for (auto& f : stored_families())
        if (f.table == std::to_string(t)) fams.push_back(f);
      std::vector<std::future<std::vector<CsvRow>>> jobs;
      std::vector<std::vector<CsvRow>> results(fams.size());
      const std::size_t width = static_cast<std::size_t>(std::max(1, c.jobs));
      for (std::size_t start = 0; start < fams.size(); start += width) {
        jobs.clear();
        for (std::size_t i = start; i < std::min(fams.size(), start + width); ++i)
          jobs.push_back(std::async(width > 1 ? std::launch::async : std::launch::deferred, family_rows, fams[i], c.bound));
        for (std::size_t i = 0; i < jobs.size(); ++i) results[start + i] = jobs[i].get();
      }
      for (auto& r : results) rows.insert(rows.end(), r.begin(), r.end());
    } else if (t == 4 || t == 5) {
      rows = strata_rows(t);
    } else {
      throw Error(Errc::ParseError, "--which must be 1..5 or all");
    }
    std::ostringstream csv;
    csv << "case-id,lambda,tau,expected_size,computed_size,status\n";
    for (const auto& r : rows) {
      csv << quote(r.id) << ',' << quote(r.lambda) << ',' << quote(r.tau) << ',' << r.expected << ',' << r.computed << ','
          << (r.pass ? "PASS" : "FAIL") << '\n';
      all_pass = all_pass && r.pass;
    }
    if (!c.out_dir.empty()) {
      std::ofstream f(c.out_dir + "/table" + std::to_string(t) + ".csv");
      f << csv.str();
    } else {
      std::cout << csv.str();
    }
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite orbits of braid group actions on affine character varieties"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* s) {
    s->add_option("--format", c.format, "json | pretty | csv")->check(CLI::IsMember({"json", "pretty", "csv"}));
    s->add_option("--bound", c.bound, "orbit or closure bound");
    s->add_option("--seed", c.seed, "random seed");
    s->add_option("--tol", c.tol, "numeric tolerance");
    s->add_option("--jobs", c.jobs, "parallel jobs");
    s->add_flag("--long-running", c.long_running, "enable slow checks");
  };
  auto rep_opts = [&](CLI::App* s) {
    s->add_option("--lambda", c.lambda, "linear part, comma separated, e.g. z12^1,z12^5,z12^3,z12^3")->required();
    s->add_option("--tau", c.tau, "translations tau_1..tau_{n-1} (or all n)")->required();
    s->add_option("--n", c.n, "number of punctures (checked against --lambda)");
  };

  auto* orbit_cmd = app.add_subcommand("orbit", "orbit of a representation class under the pure braid group");
  rep_opts(orbit_cmd);
  common(orbit_cmd);
  orbit_cmd->add_flag("--points", c.points, "list the orbit points with braid witnesses");

  auto* c4 = app.add_subcommand("classify4", "classification of a four-puncture linear part");
  c4->add_option("--lambda", c.lambda)->required();
  common(c4);

  auto* gate_cmd = app.add_subcommand("gate", "finite or infinite orbit verdict");
  rep_opts(gate_cmd);
  common(gate_cmd);

  auto* group_cmd = app.add_subcommand("group", "G25 or G32 summary");
  group_cmd->add_option("--which", c.which)->required()->check(CLI::IsMember({"g25", "g32"}));
  group_cmd->add_flag("--full", c.full);
  common(group_cmd);

  auto* strata_cmd = app.add_subcommand("strata", "orbit stratum of a line");
  strata_cmd->add_option("--which", c.which)->required()->check(CLI::IsMember({"g25", "g32"}));
  strata_cmd->add_option("--point", c.point, "e.g. [1,-1,0]")->required();
  common(strata_cmd);

  auto* lattice_cmd = app.add_subcommand("lattice", "intersection lattice census of the reflection arrangement");
  lattice_cmd->add_option("--which", c.which)->check(CLI::IsMember({"g25", "g32"}));
  common(lattice_cmd);

  auto* coal_cmd = app.add_subcommand("coalesce", "merge punctures l..l+n-k");
  rep_opts(coal_cmd);
  coal_cmd->add_option("--k", c.k)->required();
  coal_cmd->add_option("--l", c.l);
  coal_cmd->add_option("--braid", c.braid, "pure braid on k strands to test equivariance");
  common(coal_cmd);

  auto* mono_cmd = app.add_subcommand("monodromy", "numeric monodromy of the rank 3 or 4 example connection");
  mono_cmd->add_option("--rank", c.rank);
  mono_cmd->add_option("--poles", c.poles, "comma separated, e.g. -1,0,1");
  mono_cmd->add_option("--base", c.base, "base point, e.g. 0.3-2i");
  mono_cmd->add_option("--theta", c.theta, "exponent, default 1/6");
  mono_cmd->add_option("--sign", c.sign)->check(CLI::IsMember({"+", "-"}));
  common(mono_cmd);

  auto* tables_cmd = app.add_subcommand("tables", "regenerate the orbit tables as CSV");
  tables_cmd->add_option("--which", c.which, "1..5 or all");
  tables_cmd->add_option("--out-dir", c.out_dir, "write tableN.csv files here");
  common(tables_cmd);

  CLI11_PARSE(app, argc, argv);
  try {
    if (c.n && !c.lambda.empty() && static_cast<int>(split_list(c.lambda).size()) != c.n)
      throw Error(Errc::DimensionMismatch, "--n does not match --lambda");
    if (*orbit_cmd) return cmd_orbit(c);
    if (*c4) return cmd_classify4(c);
    if (*gate_cmd) return cmd_gate(c);
    if (*group_cmd) return cmd_group(c);
    if (*strata_cmd) return cmd_strata(c);
    if (*lattice_cmd) return cmd_lattice(c);
    if (*coal_cmd) return cmd_coalesce(c);
    if (*mono_cmd) return cmd_monodromy(c);
    if (*tables_cmd) return cmd_tables(c);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
