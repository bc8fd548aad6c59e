#include "hstar/cli.hpp"

#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "hstar/decomposition.hpp"
#include "hstar/ehrhart.hpp"
#include "hstar/error.hpp"
#include "hstar/gorenstein.hpp"
#include "hstar/oracle.hpp"
#include "hstar/rational_ehrhart.hpp"
#include "hstar/triangulation.hpp"

namespace hstar {
namespace {

struct Options {
  std::string file;
  std::string vertices;
  bool json = false;
  std::string dump_path;
  bool project = false;
  std::uint64_t seed = 0;
  std::int64_t period = 0;
  bool refined = false;
  bool decompose = false;
  std::int64_t m = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Polytope load(const Options& o) {
  if (o.file.empty() == o.vertices.empty()) throw UsageError("give exactly one of -f and --vertices");
  Polytope p;
  try {
    p = o.file.empty() ? parse_vertices(o.vertices) : read_polytope_file(o.file);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ParseError && e.kind() != ErrorKind::EmptyInput) throw;
    throw UsageError(std::string(o.file.empty() ? "--vertices: " : "-f: ") + e.what());
  }
  if (!p.is_full_dimensional()) {
    if (!o.project) {
      throw Error(ErrorKind::NotFullDimensional,
                  "polytope has dimension " + std::to_string(p.dim()) + " in ambient dimension " +
                      std::to_string(p.ambient_dim()) + "; pass --project to work in its affine hull");
    }
    p = project_to_affine_hull(p);
  }
  return p;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string facet_text(const Halfspace& h) {
  std::string s = "(";
  for (std::size_t i = 0; i < h.normal.size(); ++i) s += (i ? "," : "") + to_string(h.normal[i]);
  return s + ") . x <= " + to_string(h.offset);
}

std::string integers_text(const std::vector<Integer>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

int emit(const Options& o, const Polytope& p, const Json& result, const std::string& text, std::ostream& out) {
  if (o.json) {
    out << envelope(p, result).dump(2) << "\n";
  } else {
    out << text;
  }
  return 0;
}

int cmd_info(const Options& o, const Polytope& p, std::ostream& out) {
  const PolytopeInfo info = describe(p);
  std::string text = "dim=" + std::to_string(info.dim) + ", ambient=" + std::to_string(info.ambient_dim) +
                     ", vertices=" + std::to_string(info.vertex_count) + ", q=" + std::to_string(info.q) + "\n";
  text += "ℓ=" + std::to_string(info.ell) + ", r=" + std::to_string(info.r) + ", origin " + info.origin + "\n";
  text += "facets (" + std::to_string(info.facets.size()) + "):\n";
  for (const auto& h : info.facets) text += "  " + facet_text(h) + "\n";
  return emit(o, p, info, text, out);
}

int cmd_polynomial(const Options& o, const Polytope& p, const std::string& kind, std::ostream& out) {
  HstarOptions ho{o.period, o.seed, {}};
  PolynomialResult r;
  r.kind = kind;
  r.q = o.period ? o.period : p.denominator();
  r.d = p.dim();
  if (kind == "hstar") {
    r.value = hstar_polytope(p, ho);
  } else if (kind == "boundary") {
    r.value = hstar_boundary(p, ho);
  } else {
    r.value = hstar_interior(p, ho);
  }
  const std::string label = kind == "hstar" ? "h*" : kind == "boundary" ? "h*_bd" : "h*_int";
  const std::string text =
      label + " = " + r.value.to_string() + " (q=" + std::to_string(r.q) + ", d=" + std::to_string(r.d) + ")\n";
  return emit(o, p, r, text, out);
}

int cmd_decompose(const Options& o, const Polytope& p, std::ostream& out) {
  const DecompositionReport r = decomposition_report(p, {o.period, o.seed});
  const AuditReport audit = inequality_audit(p, r);
  std::string text = "q=" + std::to_string(r.q) + ", d=" + std::to_string(r.d) + ", apex " + to_string(r.apex) + "\n";
  text += "h* = " + r.hstar.to_string() + "\n";
  text += "h*_bd = " + r.boundary.to_string() + "\n";
  text += "ℓ=" + std::to_string(r.ell) + ", a = " + r.a.to_string() + ", b = " + r.b.to_string() + "\n";
  text += "pyramid route: b = " + r.b_pyramid.to_string() + (r.pyramid_agrees ? " (agrees)" : " (DIFFERS)") + "\n";
  text += "audit:\n";
  for (const auto& item : audit.items) {
    text += "  " + item.name + ": " + (item.passed ? "pass" : item.warning_only ? "warn" : "FAIL");
    if (!item.detail.empty()) text += " (" + item.detail + ")";
    text += "\n";
  }
  emit(o, p, Json{{"decomposition", r}, {"audit", audit}}, text, out);
  return audit.all_passed() ? 0 : 1;
}

int cmd_gorenstein(const Options& o, const Polytope& p, std::ostream& out) {
  const GorensteinReport r = verify_gorenstein_identities(p);
  std::string text = "kind=" + to_string(r.status.kind);
  if (r.status.g) text += ", g=" + std::to_string(*r.status.g);
  if (r.status.translate) text += ", translate=" + integers_text(*r.status.translate);
  text += "\nrational reflexive: " + yes_no(r.status.rational_reflexive) + "\n";
  for (const auto& c : r.checks) text += "identity " + c.name + ": " + (c.passed ? "ok" : "VIOLATED") + "\n";
  for (const auto& s : r.skipped) text += "skipped " + s + "\n";
  return emit(o, p, r, text, out);
}

int cmd_rational(const Options& o, const Polytope& p, std::ostream& out) {
  if (o.refined && o.decompose) throw UsageError("--refined: the decomposition picks its own grid; drop --refined");
  const RationalSeriesReport r = o.decompose ? rational_decompose(p, o.m) : rational_series(p, o.refined, o.m);
  std::string text = "r=" + std::to_string(r.r) + ", m=" + std::to_string(r.m) + ", h̃ = " + r.numerator.to_string() + "\n";
  text += "grid=" + std::to_string(r.grid) + (r.refined ? " (refined)" : "") + ", origin " + to_string(r.origin) + "\n";
  if (r.decomposition) {
    const auto& d = *r.decomposition;
    text += "ℓ=" + std::to_string(d.ell) + ", a = " + d.a.to_string() + ", b = " + d.b.to_string() + "\n";
  }
  return emit(o, p, r, text, out);
}

int cmd_verify(const Options& o, const Polytope& p, std::ostream& out) {
  const VerifyReport r = verify_against_oracle(p);
  std::string text;
  for (const auto& c : r.checks) {
    text += c.name + ": ";
    text += c.passed ? "ok (" + c.computed.to_string() + ")\n"
                     : "MISMATCH computed " + c.computed.to_string() + ", oracle " + c.oracle.to_string() + "\n";
  }
  emit(o, p, r, text, out);
  return r.all_passed() ? 0 : 1;
}

void dump_triangulation(const Options& o, const Polytope& p) {
  std::ofstream f(o.dump_path);
  if (!f) throw UsageError("--dump-triangulation: cannot write " + o.dump_path);
  f << envelope(p, triangulation_json(boundary_decomposition(p, {std::nullopt, o.seed}))).dump(2) << "\n";
}

}  // namespace

PolytopeInfo describe(const Polytope& p) {
  PolytopeInfo info;
  info.dim = p.dim();
  info.ambient_dim = p.ambient_dim();
  info.q = p.denominator();
  info.vertex_count = p.vertices().size();
  if (p.is_full_dimensional()) {
    info.facets = p.facets();
    info.ell = find_interior_point(p).ell;
    info.r = codenominator(p);
    info.origin = to_string(origin_position(p));
  }
  return info;
}

VerifyReport verify_against_oracle(const Polytope& p) {
  VerifyReport r;
  r.checks.push_back({"hstar", hstar_polytope(p), oracle::hstar_from_counts(p, Containment::closed), false});
  r.checks.push_back({"boundary", hstar_boundary(p), oracle::hstar_from_counts(p, Containment::boundary), false});
  r.checks.push_back({"interior", hstar_interior(p), oracle::hstar_from_counts(p, Containment::interior), false});
  for (auto& c : r.checks) c.passed = c.computed == c.oracle;
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Ehrhart h*-polynomials of rational polytopes", "hstar"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* sub) {
    sub->add_option("-f,--file", o.file, "polytope JSON file");
    sub->add_option("--vertices", o.vertices, "inline vertices, e.g. \"0,0; 1/2,1\"");
    sub->add_flag("--json", o.json, "emit JSON instead of text");
    sub->add_option("--dump-triangulation", o.dump_path, "write the half-open boundary triangulation as JSON");
    sub->add_flag("--project", o.project, "project lower-dimensional input onto its affine hull");
    sub->add_option("--seed", o.seed, "generic point seed");
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"info", "vertices, facets, denominator, ell and codenominator"},
           {"hstar", "h*-polynomial"},
           {"boundary", "boundary h*-polynomial"},
           {"interior", "interior h*-polynomial"},
           {"decompose", "symmetric decomposition with inequality audit"},
           {"gorenstein", "reflexive and Gorenstein classification"},
           {"rational", "rational Ehrhart series"},
           {"verify", "compare against brute-force counts"}}) {
    subs[name] = app.add_subcommand(name, help);
    common(subs[name]);
  }
  for (const char* name : {"hstar", "boundary", "interior", "decompose"}) {
    subs[name]->add_option("--period", o.period, "series period, a multiple of the denominator")->check(CLI::PositiveNumber);
  }
  subs["rational"]->add_flag("--refined", o.refined, "use the grid 2r");
  subs["rational"]->add_flag("--decompose", o.decompose, "attach the symmetric decomposition");
  subs["rational"]->add_option("--m", o.m, "dilation period m")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const Polytope p = load(o);
    if (!o.dump_path.empty()) dump_triangulation(o, p);
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "info") return cmd_info(o, p, out);
    if (name == "hstar" || name == "boundary" || name == "interior") return cmd_polynomial(o, p, name, out);
    if (name == "decompose") return cmd_decompose(o, p, out);
    if (name == "gorenstein") return cmd_gorenstein(o, p, out);
    if (name == "rational") return cmd_rational(o, p, out);
    return cmd_verify(o, p, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace hstar
