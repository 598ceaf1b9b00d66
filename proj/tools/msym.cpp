// msym: command-line front end, JSON on stdout or --output
#include <CLI11.hpp>
#include <omp.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include "artifact/groups.hpp"
#include "artifact/hecke.hpp"
#include "artifact/json_io.hpp"
#include "artifact/modsym.hpp"
#include "artifact/numeric.hpp"
#include "artifact/orbits.hpp"
#include "artifact/pairing.hpp"
#include "artifact/qexp.hpp"
#include "artifact/suites.hpp"

using namespace msym;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Job {
  std::string group = "gamma0";
  i64 level = 1;
  int weight = 2;
  i64 ell = 2;
  std::size_t terms = 10;
  std::string fn_file, parent_file, output, format = "json", suite;
  bool eisenstein = false;
  int threads = 0;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

TorsionFunction read_function(const Job& job) {
  const json j = read_json_file(job.fn_file);
  TorsionFunction f;
  try {
    f = torsion_function_from_json(j);
  } catch (const std::exception& e) {
    throw UsageError(job.fn_file + ": " + e.what());
  }
  if (f.level() != job.level) throw UsageError("function level differs from --level");
  return f;
}

void check_weight(const Subgroup& g, int k) {
  if (k < 2) throw UsageError("weight must be at least 2");
  if (k % 2 && g.contains_minus_identity)
    throw MathError("odd weight with -Id in " + g.name + ": every symbol vanishes");
}

FareyGroup::Ptr build_group(const Job& job) {
  const Subgroup g = make_group(job.group, job.level);
  if (job.parent_file.empty()) return FareyGroup::build(g);
  const json p = read_json_file(job.parent_file);
  if (!p.contains("group") || !p.contains("level")) throw UsageError("parent file needs \"group\" and \"level\"");
  const Subgroup pg = make_group(p.at("group").get<std::string>(), p.at("level").get<i64>());
  FareyGroup::Ptr parent = FareyGroup::build(pg);
  // the glue matrices generate the child, so containment is checked on them
  FareyGroup::Ptr child = FareyGroup::build(g);
  for (const FareyArc& a : child->symbol().arcs)
    if (!pg.member(a.glue)) throw MathError(g.name + " is not contained in " + pg.name);
  return FareyGroup::subgroup(parent, g);
}

json header(const Job& job, const std::string& command) {
  return json{{"command", command}, {"group", job.group}, {"level", job.level}};
}

json cmd_farey(const Job& job) {
  FareyGroup::Ptr G = build_group(job);
  const FareySymbol& s = G->symbol();
  s.validate(G->group().member);
  const FareyInvariants inv = invariants(s);
  json out = header(job, "farey");
  out["index"] = inv.index;
  out["cusps"] = inv.n_cusps;
  out["nu2"] = inv.nu2;
  out["nu3"] = inv.nu3;
  out["genus"] = inv.genus;
  out["symbol"] = to_json(s);
  return out;
}

json cmd_modsym_space(const Job& job) {
  const Subgroup g = make_group(job.group, job.level);
  check_weight(g, job.weight);
  FareyGroup::Ptr G = FareyGroup::build(g);
  ModSymSpace::Ptr S = ModSymSpace::build(G, job.weight);
  BoundarySpace bd(G, job.weight);
  json out = header(job, "modsym-space");
  out["weight"] = job.weight;
  out["n_cosets"] = S->n_cosets();
  json cosets = json::array();
  for (const Mat& m : G->sl2_reps()) cosets.push_back(to_json(m));
  out["cosets"] = cosets;
  out["dim"] = S->dim();
  out["boundary_dim"] = bd.dim();
  // row b: the values m(j) of basis element b, coset-major, x^0..x^{k-2} within a coset
  out["basis"] = to_json(RationalMatrix::from_rows(S->basis(), S->ambient_size()));
  return out;
}

json cmd_eisbasis(const Job& job) {
  if (job.weight < 2) throw UsageError("weight must be at least 2");
  json out = header(job, "eisbasis");
  out["weight"] = job.weight;
  json b = json::array();
  for (const OrbitTriple& t : basis_v(job.level, job.weight))
    b.push_back(json{{"triple", to_json(t)}, {"indicator", to_json(orbit_indicator(t, job.level))}});
  out["basis"] = b;
  return out;
}

// the first of Gamma0(N), Gamma1(N), Gamma(N) under which f is invariant
Subgroup invariance_group(const TorsionFunction& f, int k) {
  const i64 N = f.level();
  for (const std::string& kind : {"gamma0", "gamma1", "gamma"}) {
    Subgroup g = make_group(kind, N);
    if (k % 2 && g.contains_minus_identity) continue;
    FareyGroup::Ptr G = FareyGroup::build(g);
    bool ok = true;
    for (const FareyArc& a : G->symbol().arcs) ok = ok && f.invariant_under(a.glue);
    if (ok) return g;
  }
  throw MathError("odd weight needs a group without -Id; Gamma(N) contains it for N <= 2");
}

json cmd_eis_symbol(const Job& job) {
  if (job.weight < 2) throw UsageError("weight must be at least 2");
  const TorsionFunction f = read_function(job);
  if (job.weight % 2 && f.minus() == f) throw MathError("odd weight needs a function that is not even");
  auto e = std::make_shared<const EisSymbol>(f, job.weight);
  const Subgroup g = invariance_group(f, job.weight);
  FareyGroup::Ptr G = FareyGroup::build(g);
  json out = header(job, "eis-symbol");
  out["group"] = g.name;
  out["weight"] = job.weight;
  out["p_mod"] = to_json(e->p_mod());
  out["c_inf"] = to_json(e->c_inf());
  json gens = json::array();
  for (const FareyArc& a : G->symbol().arcs)
    gens.push_back(json{{"glue", to_json(a.glue)}, {"cocycle", to_json(e->cocycle(a.glue))}});
  out["generators"] = gens;
  return out;
}

struct Gamma0Setup {
  FareyGroup::Ptr G;
  ModSymSpace::Ptr S;
  std::unique_ptr<PairingContext> ctx;
};

Gamma0Setup gamma0_setup(const Job& job) {
  const Subgroup g = gamma0(job.level);
  check_weight(g, job.weight);
  Gamma0Setup s;
  s.G = FareyGroup::build(g);
  s.S = ModSymSpace::build(s.G, job.weight);
  s.ctx = std::make_unique<PairingContext>(s.G, job.weight);
  return s;
}

json cmd_pairing_matrix(const Job& job) {
  Gamma0Setup s = gamma0_setup(job);
  std::vector<ModSym> cols;
  for (std::size_t i = 0; i < s.S->dim(); ++i) cols.push_back(s.S->element(i));
  std::vector<Cocycle> rows;
  json out = header(job, "pairing-matrix");
  out["group"] = "gamma0";
  out["weight"] = job.weight;
  if (job.eisenstein) {
    json t = json::array();
    for (const OrbitTriple& o : basis_v(job.level, job.weight)) t.push_back(to_json(o));
    for (const auto& e : eisenstein_basis_symbols(job.level, job.weight)) rows.push_back(eis_cocycle(e));
    out["rows"] = t;
  } else {
    for (const ModSym& c : cols) rows.push_back(modsym_cocycle(c));
    out["rows"] = "basis";
  }
  out["cols"] = "basis";
  out["matrix"] = to_json(gram_matrix(*s.ctx, rows, cols));
  return out;
}

json charpoly_json(const RationalMatrix& m) { return to_json(charpoly(m)); }

json cmd_hecke(const Job& job) {
  if (job.ell < 2) throw UsageError("--ell must be at least 2");
  Gamma0Setup s = gamma0_setup(job);
  const RationalMatrix T = hecke_matrix(hecke_operator(s.G, job.ell), s.S);
  const std::vector<RatVec> cs = cuspidal_subspace(*s.ctx, s.S, job.level);
  const RationalMatrix Tc = restrict_to_subspace(T, cs);
  json out = header(job, "hecke");
  out["group"] = "gamma0";
  out["weight"] = job.weight;
  out["ell"] = job.ell;
  out["matrix"] = to_json(T);
  out["charpoly"] = charpoly_json(T);
  out["cuspidal_matrix"] = to_json(Tc);
  out["cuspidal_charpoly"] = charpoly_json(Tc);
  return out;
}

json cmd_cuspidal(const Job& job) {
  Gamma0Setup s = gamma0_setup(job);
  const std::vector<RatVec> cs = cuspidal_subspace(*s.ctx, s.S, job.level);
  json out = header(job, "cuspidal");
  out["group"] = "gamma0";
  out["weight"] = job.weight;
  out["ambient_dim"] = s.S->dim();
  out["dimension"] = cs.size();
  json b = json::array();
  for (const RatVec& v : cs) b.push_back(to_json(v));
  out["basis"] = b;
  return out;
}

json cmd_qexp(const Job& job) {
  if (job.weight < 2) throw UsageError("weight must be at least 2");
  const TorsionFunction f = read_function(job);
  json out = header(job, "qexp");
  out.erase("group");
  out["weight"] = job.weight;
  out["expansion"] = to_json(eis_qexp(f, job.weight, job.terms));
  return out;
}

json cmd_verify(const Job& job, bool& failed) {
  std::vector<Residual> r;
  if (job.suite == "mellin") r = mellin_suite();
  else if (job.suite == "delta") r = delta_suite();
  else r = petersson_suite();
  json out{{"command", "verify"}, {"suite", job.suite}};
  json rs = json::array();
  failed = false;
  for (const Residual& x : r) {
    rs.push_back(json{{"name", x.name}, {"residual", x.value}, {"tolerance", x.tol}, {"pass", x.pass()}});
    failed = failed || !x.pass();
  }
  out["residuals"] = rs;
  return out;
}

void emit(const json& out, const std::string& path) {
  const std::string text = out.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact modular symbols, pairings and Hecke operators"};
  app.require_subcommand(1);
  app.fallthrough();
  Job job;
  app.add_option("--output", job.output, "write JSON here instead of stdout");
  app.add_option("--format", job.format, "output format")->check(CLI::IsMember({"json"}));
  app.add_option("--threads", job.threads, "worker threads for matrix assembly (0: OpenMP default)")
      ->check(CLI::NonNegativeNumber);

  auto level = [&](CLI::App* c) { c->add_option("--level", job.level)->required()->check(CLI::PositiveNumber); };
  auto weight = [&](CLI::App* c) { c->add_option("--weight", job.weight)->required(); };
  auto kind = [&](CLI::App* c, bool required) {
    auto o = c->add_option("--group", job.group)->check(CLI::IsMember({"gamma0", "gamma1", "gamma"}));
    if (required) o->required();
  };

  auto* farey = app.add_subcommand("farey", "Farey symbol of a congruence subgroup");
  kind(farey, true);
  level(farey);
  farey->add_option("--parent", job.parent_file, "JSON file with \"group\" and \"level\" of a containing group")
      ->check(CLI::ExistingFile);
  auto* space = app.add_subcommand("modsym-space", "basis of Hom(Delta_0, V_k)");
  kind(space, false);
  level(space);
  weight(space);
  auto* eisbasis = app.add_subcommand("eisbasis", "orbit basis of the Gamma0(N) Eisenstein symbols");
  level(eisbasis);
  weight(eisbasis);
  auto* eis = app.add_subcommand("eis-symbol", "rational Eisenstein symbol of a torsion function");
  level(eis);
  weight(eis);
  eis->add_option("--fn", job.fn_file)->required()->check(CLI::ExistingFile);
  auto* pm = app.add_subcommand("pairing-matrix", "Gram matrix of the pairing on Gamma0(N)");
  level(pm);
  weight(pm);
  pm->add_flag("--eisenstein", job.eisenstein, "rows are the Eisenstein basis symbols");
  auto* hecke = app.add_subcommand("hecke", "T_ell on the Gamma0(N) symbol space");
  hecke->add_option("--ell", job.ell)->required();
  level(hecke);
  weight(hecke);
  auto* cusp = app.add_subcommand("cuspidal", "cuspidal subspace on Gamma0(N)");
  level(cusp);
  weight(cusp);
  auto* qexp = app.add_subcommand("qexp", "q-expansion of an Eisenstein series");
  level(qexp);
  weight(qexp);
  qexp->add_option("--terms", job.terms)->required()->check(CLI::PositiveNumber);
  qexp->add_option("--fn", job.fn_file)->required()->check(CLI::ExistingFile);
  auto* verify = app.add_subcommand("verify", "numeric acceptance suites");
  verify->add_option("--suite", job.suite)->required()->check(CLI::IsMember({"mellin", "delta", "petersson"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (job.threads > 0) omp_set_num_threads(job.threads);

  try {
    json out;
    bool failed = false;
    if (*farey) out = cmd_farey(job);
    else if (*space) out = cmd_modsym_space(job);
    else if (*eisbasis) out = cmd_eisbasis(job);
    else if (*eis) out = cmd_eis_symbol(job);
    else if (*pm) out = cmd_pairing_matrix(job);
    else if (*hecke) out = cmd_hecke(job);
    else if (*cusp) out = cmd_cuspidal(job);
    else if (*qexp) out = cmd_qexp(job);
    else out = cmd_verify(job, failed);
    emit(out, job.output);
    return failed ? 4 : 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const PrecisionError& e) {
    std::cerr << "precision failure: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
