// qtet: exact SU(2) recoupling (3j/6j), tetrahedron geometry and
// semiclassics, q-deformed 6j symbols, state sums over triangulated closed
// 3-manifolds, and exact permanents.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qtet/permanent.hpp"
#include "qtet/recoupling.hpp"
#include "qtet/state_sum.hpp"
#include "qtet/tet_geometry.hpp"
#include "qtet/wigner.hpp"

using json = nlohmann::ordered_json;
using namespace qtet;

namespace {

struct Options {
  std::string format = "json";
  unsigned precision = 53;
  int threads = 1;
};

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

std::string dec6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

HalfInt parse_spin(const std::string& s) { return HalfInt::parse(s); }

HalfInt parse_nonneg_spin(const std::string& s) {
  const HalfInt j = HalfInt::parse(s);
  if (j.is_negative()) throw std::domain_error("spin '" + s + "' must be nonnegative");
  return j;
}

Tetra6j parse_tetra(const std::vector<std::string>& v) {
  return {parse_nonneg_spin(v[0]), parse_nonneg_spin(v[1]), parse_nonneg_spin(v[2]),
          parse_nonneg_spin(v[3]), parse_nonneg_spin(v[4]), parse_nonneg_spin(v[5])};
}

json spin_list(const std::array<HalfInt, 6>& spins) {
  json a = json::array();
  for (const HalfInt j : spins) a.push_back(j.str());
  return a;
}

TriangulationDoc open_complex(const std::string& arg) {
  if (arg.starts_with("builtin:")) return {builtin_complex(arg.substr(8)), std::nullopt};
  if (arg == "-") return load_complex(std::cin);
  return load_complex_file(arg);
}

std::string slurp(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(arg);
  if (!in) throw std::runtime_error("cannot open '" + arg + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// matches an exact nonnegative rational "p" or "p/q"
bool is_rational_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t slash = s.find('/');
  const auto digits = [](const std::string& t) {
    return !t.empty() && t.find_first_not_of("0123456789") == std::string::npos;
  };
  if (slash == std::string::npos) return digits(s);
  return digits(s.substr(0, slash)) && digits(s.substr(slash + 1));
}

void cmd_sixj(const std::vector<std::string>& spins, const Options& opt) {
  const Tetra6j s = parse_tetra(spins);
  const SignedSqrtRational v = sixj_exact(s);
  if (opt.format == "exact") {
    std::cout << v.str() << "\n" << dec6(v.to_double(opt.precision)) << "\n";
    return;
  }
  emit({{"command", "sixj"},
        {"spins", spin_list(s.spins())},
        {"exact", v.str()},
        {"value", v.to_double(opt.precision)}});
}

void cmd_threej(const std::vector<std::string>& args, const Options& opt) {
  const ThreeJ t{parse_nonneg_spin(args[0]), parse_nonneg_spin(args[1]),
                 parse_nonneg_spin(args[2]), parse_spin(args[3]),
                 parse_spin(args[4]),        parse_spin(args[5])};
  const SignedSqrtRational v = three_j(t);
  if (opt.format == "exact") {
    std::cout << v.str() << "\n" << dec6(v.to_double(opt.precision)) << "\n";
    return;
  }
  emit({{"command", "threej"},
        {"j", json::array({t.j1.str(), t.j2.str(), t.j3.str()})},
        {"m", json::array({t.m1.str(), t.m2.str(), t.m3.str()})},
        {"exact", v.str()},
        {"value", v.to_double(opt.precision)}});
}

void cmd_orbit(const std::vector<std::string>& spins, const Options& opt) {
  const Tetra6j s = parse_tetra(spins);
  const std::vector<Tetra6j> orbit = symmetry_orbit(s);
  if (opt.format == "exact") {
    std::cout << "size " << orbit.size() << "\n";
    for (const Tetra6j& m : orbit) {
      const auto sp = m.spins();
      for (int i = 0; i < 6; ++i) std::cout << (i ? " " : "") << sp[i].str();
      std::cout << "\n";
    }
    return;
  }
  json members = json::array();
  for (const Tetra6j& m : orbit) members.push_back(spin_list(m.spins()));
  emit({{"command", "orbit"},
        {"spins", spin_list(s.spins())},
        {"size", orbit.size()},
        {"members", members}});
}

void cmd_recouple(const std::vector<std::string>& args, const Options& opt) {
  const RecouplingMatrix m =
      recoupling_matrix(parse_nonneg_spin(args[0]), parse_nonneg_spin(args[1]),
                        parse_nonneg_spin(args[2]), parse_nonneg_spin(args[3]));
  if (opt.format == "exact") {
    for (const auto& row : m.entry) {
      for (std::size_t i = 0; i < row.size(); ++i)
        std::cout << (i ? " " : "") << row[i].str();
      std::cout << "\n";
    }
    return;
  }
  json rows = json::array(), cols = json::array(), exact = json::array(),
       values = json::array();
  for (const HalfInt j : m.row_labels) rows.push_back(j.str());
  for (const HalfInt j : m.col_labels) cols.push_back(j.str());
  for (const auto& row : m.entry) {
    json er = json::array(), vr = json::array();
    for (const auto& v : row) {
      er.push_back(v.str());
      vr.push_back(v.to_double(opt.precision));
    }
    exact.push_back(er);
    values.push_back(vr);
  }
  emit({{"command", "recouple"},
        {"j1", m.j1.str()},
        {"j2", m.j2.str()},
        {"j3", m.j3.str()},
        {"j", m.j.str()},
        {"j12", rows},
        {"j23", cols},
        {"entries_exact", exact},
        {"entries", values},
        {"orthogonal", m.is_orthogonal()}});
}

void cmd_probability(const std::vector<std::string>& args, const Options& opt) {
  const mpq_class p =
      recoupling_probability(parse_nonneg_spin(args[0]), parse_nonneg_spin(args[1]),
                             parse_nonneg_spin(args[2]), parse_nonneg_spin(args[3]),
                             parse_nonneg_spin(args[4]), parse_nonneg_spin(args[5]));
  const std::string exact = p.get_num().get_str() + "/" + p.get_den().get_str();
  if (opt.format == "exact") {
    std::cout << exact << "\n" << dec6(p.get_d()) << "\n";
    return;
  }
  emit({{"command", "probability"}, {"exact", exact}, {"value", p.get_d()}});
}

void cmd_check_be(const std::vector<std::string>& args, const Options& opt) {
  std::array<HalfInt, 9> s;
  for (int i = 0; i < 9; ++i) s[i] = parse_nonneg_spin(args[i]);
  const IdentityCheck res =
      check_biedenharn_elliott(s[0], s[1], s[2], s[3], s[4], s[5], s[6], s[7], s[8]);
  if (opt.format == "exact") {
    std::cout << res.lhs.str() << "\n" << res.rhs.str() << "\n"
              << (res.holds() ? "equal" : "DIFFER") << "\n";
    return;
  }
  emit({{"command", "check-be"},
        {"lhs_exact", res.lhs.str()},
        {"rhs_exact", res.rhs.str()},
        {"holds", res.holds()}});
}

void cmd_check_orth(const std::vector<std::string>& args, const Options& opt) {
  std::array<HalfInt, 6> s;
  for (int i = 0; i < 6; ++i) s[i] = parse_nonneg_spin(args[i]);
  const IdentityCheck res = check_orthogonality(s[0], s[1], s[2], s[3], s[4], s[5]);
  if (opt.format == "exact") {
    std::cout << res.lhs.str() << "\n" << res.rhs.str() << "\n"
              << (res.holds() ? "equal" : "DIFFER") << "\n";
    return;
  }
  emit({{"command", "check-orth"},
        {"lhs_exact", res.lhs.str()},
        {"rhs_exact", res.rhs.str()},
        {"holds", res.holds()}});
}

void cmd_geometry(const std::vector<std::string>& args, const Options& opt) {
  EdgeLengths6 l;
  bool all_rational = true;
  std::array<mpq_class, 6> exact;
  for (int i = 0; i < 6; ++i) {
    if (is_rational_token(args[i])) {
      exact[i] = mpq_class(args[i]);
      exact[i].canonicalize();
      l.l[i] = exact[i].get_d();
    } else {
      all_rational = false;
      l.l[i] = std::stod(args[i]);
    }
    if (l.l[i] <= 0) throw std::domain_error("edge lengths must be positive");
  }

  json doc = {{"command", "geometry"}, {"lengths", json::array()}};
  for (double x : l.l) doc["lengths"].push_back(x);
  if (all_rational) {
    const mpq_class vsq = volume_sq_exact(exact);
    doc["volume_sq_exact"] = vsq.get_num().get_str() + "/" + vsq.get_den().get_str();
    doc["volume_sq"] = vsq.get_d();
  } else {
    doc["volume_sq"] = volume_sq(l);
  }
  const TetGeometry g = tet_geometry(l);  // throws when not Euclidean
  doc["volume"] = g.volume;
  doc["interior_dihedral"] = json::array();
  doc["outer_normal_angle"] = json::array();
  for (int i = 0; i < 6; ++i) {
    doc["interior_dihedral"].push_back(g.interior[i]);
    doc["outer_normal_angle"].push_back(g.dihedral[i]);
  }
  if (opt.format == "exact") {
    if (all_rational) std::cout << doc["volume_sq_exact"].get<std::string>() << "\n";
    else std::cout << dec6(doc["volume_sq"].get<double>()) << "\n";
    return;
  }
  emit(doc);
}

void cmd_asympt(const std::vector<std::string>& spins, const std::string& mode,
                const Options& opt) {
  const Tetra6j s = parse_tetra(spins);
  const double v =
      pr_asymptotic(s, mode == "wigner" ? AsymptoticMode::wigner : AsymptoticMode::phase);
  if (opt.format == "exact") {
    std::cout << dec6(v) << "\n";
    return;
  }
  emit({{"command", "asympt"}, {"spins", spin_list(s.spins())}, {"mode", mode}, {"value", v}});
}

void cmd_regge(const std::string& path, const Options& opt) {
  const TriangulationDoc doc = open_complex(path);
  const ReggeComplex rc = ReggeComplex::from_doc(doc);
  const ReggeResult res = regge_action_3d(rc);
  if (opt.format == "exact") {
    std::cout << dec6(res.action) << "\n";
    return;
  }
  json edges = json::array();
  for (int e = 0; e < rc.complex.n_edges(); ++e) {
    const auto& [u, v] = rc.complex.edges()[e];
    edges.push_back({{"edge", json::array({u, v})},
                     {"length", rc.edge_length[e]},
                     {"deficit", res.deficit[e]}});
  }
  emit({{"command", "regge"}, {"action", res.action}, {"deficits", edges}});
}

void cmd_qint(long long n, int level, const Options& opt) {
  const double v = quantum_integer(n, Level(level));
  if (opt.format == "exact") {
    std::cout << dec6(v) << "\n";
    return;
  }
  emit({{"command", "qint"}, {"n", n}, {"level", level}, {"value", v}});
}

void cmd_qsixj(const std::vector<std::string>& spins, int level, const Options& opt) {
  const Tetra6j s = parse_tetra(spins);
  const double v = q_sixj(s, Level(level));
  if (opt.format == "exact") {
    std::cout << dec6(v) << "\n";
    return;
  }
  emit({{"command", "qsixj"}, {"spins", spin_list(s.spins())}, {"level", level}, {"value", v}});
}

void cmd_tv(const std::string& arg, int level, const Options& opt) {
  const TriangulationDoc doc = open_complex(arg);
  const TvResult res = tv_invariant(doc.complex, Level(level), opt.threads);
  if (opt.format == "exact") {
    std::cout << dec6(res.value) << "\n";
    return;
  }
  emit({{"command", "tv"},
        {"complex", arg},
        {"level", level},
        {"counts", json::array({doc.complex.n_vertices(), doc.complex.n_edges(),
                                doc.complex.n_triangles(), doc.complex.n_tets()})},
        {"weight_constant", res.weight_constant},
        {"colorings", res.colorings},
        {"value", res.value}});
}

void cmd_pr_sum(const std::string& arg, const std::string& cutoff, double constant_c,
                const Options& opt) {
  const TriangulationDoc doc = open_complex(arg);
  const HalfInt L = parse_nonneg_spin(cutoff);
  const PrResult res = pr_functional_cutoff(doc.complex, L, constant_c, opt.threads);
  if (opt.format == "exact") {
    std::cout << dec6(res.total()) << "\n";
    return;
  }
  emit({{"command", "pr-sum"},
        {"complex", arg},
        {"cutoff", L.str()},
        {"constant", constant_c},
        {"lambda", res.lambda},
        {"n0", res.n0},
        {"colorings", res.colorings},
        {"reduced_sum", res.reduced_sum},
        {"total", res.total()}});
}

void cmd_perm(const std::string& arg, const Options& opt) {
  std::istringstream in(slurp(arg));
  const BinaryMatrix m = BinaryMatrix::parse(in);
  const mpz_class p = permanent(m, opt.threads);
  if (opt.format == "exact") {
    std::cout << p.get_str() << "\n";
    return;
  }
  emit({{"command", "perm"}, {"n", m.n}, {"permanent", p.get_str()}});
}

void cmd_incidence(const std::string& arg, const Options& opt) {
  std::istringstream in(slurp(arg));
  const SimpleGraph g = SimpleGraph::parse(in);
  const BinaryMatrix m = incidence_matrix(g);
  if (opt.format == "exact") {
    for (const auto& row : m.a) {
      for (int x : row) std::cout << x;
      std::cout << "\n";
    }
    return;
  }
  json rows = json::array();
  for (const auto& row : m.a) rows.push_back(row);
  emit({{"command", "incidence"}, {"n", m.n}, {"matrix", rows}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qtet: exact SU(2) recoupling, quantum 6j symbols, tetrahedron "
               "semiclassics, and 3-manifold state sums"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("QTET_THREADS")) opt.threads = std::max(1, std::atoi(env));

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "exact"}));
    sub->add_option("--precision", opt.precision, "bits for exact-to-float conversion (>= 53)");
  };

  std::vector<std::string> spins, args;
  std::string mode = "phase", path, cutoff = "0";
  int level = 3;
  long long qn = 1;
  double constant_c = 1.0;

  auto* sixj = app.add_subcommand("sixj", "exact 6j symbol {a b c; d e f}");
  sixj->add_option("spins", spins)->expected(6)->required();
  add_common(sixj);
  sixj->callback([&] { cmd_sixj(spins, opt); });

  auto* threej = app.add_subcommand("threej", "exact 3j symbol (j1 j2 j3; m1 m2 m3)");
  threej->add_option("args", args)->expected(6)->required();
  add_common(threej);
  threej->callback([&] { cmd_threej(args, opt); });

  auto* orbit = app.add_subcommand("orbit", "symmetry orbit of a 6j symbol (144 with Regge)");
  orbit->add_option("spins", spins)->expected(6)->required();
  add_common(orbit);
  orbit->callback([&] { cmd_orbit(spins, opt); });

  auto* recouple = app.add_subcommand("recouple", "recoupling matrix for j1 j2 j3 -> j");
  recouple->add_option("spins", args)->expected(4)->required();
  add_common(recouple);
  recouple->callback([&] { cmd_recouple(args, opt); });

  auto* prob = app.add_subcommand("probability",
                                  "recoupling probability for j1 j2 j3 j j12 j23");
  prob->add_option("spins", args)->expected(6)->required();
  add_common(prob);
  prob->callback([&] { cmd_probability(args, opt); });

  auto* be = app.add_subcommand("check-be", "Biedenharn-Elliott check on a b c d e f p q r");
  be->add_option("spins", args)->expected(9)->required();
  add_common(be);
  be->callback([&] { cmd_check_be(args, opt); });

  auto* orth = app.add_subcommand("check-orth", "6j orthogonality check on a b c d p q");
  orth->add_option("spins", args)->expected(6)->required();
  add_common(orth);
  orth->callback([&] { cmd_check_orth(args, opt); });

  auto* geom = app.add_subcommand("geometry", "tetrahedron geometry from six edge lengths");
  geom->add_option("lengths", args)->expected(6)->required();
  add_common(geom);
  geom->callback([&] { cmd_geometry(args, opt); });

  auto* asym = app.add_subcommand("asympt", "Ponzano-Regge asymptotics at lengths j+1/2");
  asym->add_option("spins", spins)->expected(6)->required();
  asym->add_option("--mode", mode, "phase | wigner")
      ->check(CLI::IsMember({"phase", "wigner"}));
  add_common(asym);
  asym->callback([&] { cmd_asympt(spins, mode, opt); });

  auto* regge = app.add_subcommand("regge", "Regge action of a complex with edge lengths");
  regge->add_option("complex", path)->required();
  add_common(regge);
  regge->callback([&] { cmd_regge(path, opt); });

  auto* qint = app.add_subcommand("qint", "quantum integer [n] at level r");
  qint->add_option("n", qn)->required();
  qint->add_option("--level", level, "level r >= 3")->required();
  add_common(qint);
  qint->callback([&] { cmd_qint(qn, level, opt); });

  auto* qsixj = app.add_subcommand("qsixj", "q-deformed 6j symbol at level r");
  qsixj->add_option("spins", spins)->expected(6)->required();
  qsixj->add_option("--level", level, "level r >= 3")->required();
  add_common(qsixj);
  qsixj->callback([&] { cmd_qsixj(spins, level, opt); });

  auto* tv = app.add_subcommand("tv", "Turaev-Viro invariant of a closed complex");
  tv->add_option("complex", path, "path, '-', or builtin:{s3-2tet,s3-5tet}")->required();
  tv->add_option("--level", level, "level r >= 3")->required();
  tv->add_option("--threads", opt.threads, "worker threads");
  add_common(tv);
  tv->callback([&] { cmd_tv(path, level, opt); });

  auto* pr = app.add_subcommand("pr-sum", "finite-cutoff Ponzano-Regge functional");
  pr->add_option("complex", path, "path, '-', or builtin:{s3-2tet,s3-5tet}")->required();
  pr->add_option("--cutoff", cutoff, "spin cutoff L (integer or n/2)")->required();
  pr->add_option("--constant", constant_c, "Lambda constant C > 0");
  pr->add_option("--threads", opt.threads, "worker threads");
  add_common(pr);
  pr->callback([&] { cmd_pr_sum(path, cutoff, constant_c, opt); });

  auto* perm = app.add_subcommand("perm", "exact permanent of a 0/1 matrix");
  perm->add_option("matrix", path, "path or '-' (rows of 0/1 digits)")->required();
  perm->add_option("--threads", opt.threads, "worker threads");
  add_common(perm);
  perm->callback([&] { cmd_perm(path, opt); });

  auto* inc = app.add_subcommand("incidence", "incidence matrix of an edge-list graph");
  inc->add_option("graph", path, "path or '-' (lines 'u v')")->required();
  add_common(inc);
  inc->callback([&] { cmd_incidence(path, opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n\n" << app.help() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
