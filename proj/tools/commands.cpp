#include "commands.hpp"

#include <fstream>
#include <map>
#include <set>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "coxkit/classify.hpp"
#include "coxkit/errors.hpp"
#include "coxkit/examples.hpp"
#include "coxkit/homology.hpp"
#include "coxkit/polytope.hpp"
#include "coxkit/surgery.hpp"
#include "coxkit/weights.hpp"
#include "run_report.hpp"

namespace coxkit::cli {

namespace {

struct InputError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

Rational parse_rational(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(s));
    boost::multiprecision::cpp_int den(s.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + s + "'");
    return Rational(boost::multiprecision::cpp_int(s.substr(0, slash)), den);
  } catch (const std::runtime_error&) {
    throw InputError("not a rational number: '" + s + "'");
  }
}

nlohmann::json flat_json(const CoxeterMatrix& m, const AffineFlat& f) {
  return {{"generators", sorted_names(m, f.generators)},
          {"flat_dim", f.flat_dim},
          {"families", classify(m, f.generators).families}};
}

nlohmann::json fvector_json(const FVector& f) { return {{"a", f.a}, {"c", f.c}}; }

struct Loaded {
  CoxeterMatrix matrix;
  std::string digest;
};

Loaded load(const std::string& path) {
  const auto text = read_file(path);
  return {parse_diagram(text), sha256_hex(text)};
}

// Options shared by the audit subcommands.
struct AuditArgs {
  std::string file;
  int dim = 0;
  bool force = false;
  int i = 0, k = 1;
};

PolytopeModel audit_model(const CoxeterMatrix& m, const AuditArgs& a, RunReport& r) {
  Nerve nv = mark_cone_vertices(build_nerve(m), a.dim);
  PolytopeModel p = build_polytope(nv, a.dim, !a.force);
  r.result["f_vector"] = fvector_json(f_vector(p));
  r.result["cone_vertices"] = sorted_names(m, nv.cone_vertices);
  return p;
}

int emit(const RunReport& r, std::ostream& out) {
  out << to_json(r).dump(2) << "\n";
  return r.passed() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coxeter diagram, nerve and polytope audits"};
  app.name("coxkit");
  app.require_subcommand(1);

  std::string file, file2, out_path, flat_arg, match_arg, prefix, c_arg = "29/3";
  std::size_t cap = default_cap();
  int dim = 0, pairs = 8;
  bool right_angled = false, general = false;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a diagram");
  classify_cmd->add_option("FILE", file, "diagram (.cox)")->required();

  auto* nerve_cmd = app.add_subcommand("nerve", "Build the nerve and export it as JSON");
  nerve_cmd->add_option("FILE", file)->required();
  nerve_cmd->add_option("--out", out_path, "write the nerve JSON here");
  nerve_cmd->add_option("--cap", cap, "simplex enumeration cap");

  auto* flats_cmd = app.add_subcommand("flats", "List maximal affine flats");
  flats_cmd->add_option("FILE", file)->required();
  flats_cmd->add_option("--dim", dim, "check codimension-1 flats and isolation in this dimension");
  flats_cmd->add_option("--cap", cap);

  auto* hm_cmd = app.add_subcommand("check-hm", "Homology sphere, flat and boundary-position checks");
  hm_cmd->add_option("FILE", file)->required();
  hm_cmd->add_option("--dim", dim)->required();

  auto* cut_cmd = app.add_subcommand("cut", "Cut along a separating flat");
  cut_cmd->add_option("FILE", file)->required();
  cut_cmd->add_option("--flat", flat_arg, "comma-separated generators")->required();
  cut_cmd->add_option("--prefix", prefix, "output prefix for the two pieces");

  auto* glue_cmd = app.add_subcommand("glue", "Glue two nerves along boundary flats");
  glue_cmd->add_option("F1", file)->required();
  glue_cmd->add_option("F2", file2)->required();
  glue_cmd->add_option("--match", match_arg, "a=b,... from F1 to F2")->required();
  glue_cmd->add_option("--out", out_path, "write the glued diagram here");

  auto* audit_cmd = app.add_subcommand("audit", "Polytope audits");
  audit_cmd->require_subcommand(1);
  AuditArgs aa;
  auto audit_sub = [&](const char* name, const char* help) {
    auto* s = audit_cmd->add_subcommand(name, help);
    s->add_option("FILE", aa.file)->required();
    s->add_option("--dim", aa.dim)->required();
    s->add_flag("--force", aa.force, "skip the codimension-1 flat check when building the model");
    return s;
  };
  auto* a_ra = audit_sub("rightangled", "Face-count inequalities for right-angled groups");
  auto* a_nk = audit_sub("nikulin", "Average face count against the Nikulin bound");
  a_nk->add_option("--i", aa.i)->required();
  a_nk->add_option("--k", aa.k)->required();
  auto* a_wt = audit_sub("weights", "Weight sums on edges and good 3-faces");
  auto* a_p4 = audit_sub("prop4", "Facet adjacency statements");

  auto* bound_cmd = app.add_subcommand("bound", "Print dimension bounds");
  bound_cmd->add_flag("--right-angled", right_angled);
  bound_cmd->add_flag("--general", general);
  bound_cmd->add_option("--C", c_arg, "constant of the general bound");

  auto* example_cmd = app.add_subcommand("example", "Print example diagrams");
  example_cmd->require_subcommand(1);
  auto* ex_cube = example_cmd->add_subcommand("cube", "Right-angled cube group");
  ex_cube->add_option("--pairs", pairs)->required();
  auto* ex_pv = example_cmd->add_subcommand("pv", "Modified cube with extra inf edges");
  ex_pv->add_option("--pairs", pairs, "8 or 12");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    RunReport r;
    if (classify_cmd->parsed()) {
      r.command = "classify";
      auto in = load(file);
      r.input_digest = in.digest;
      const auto t = classify(in.matrix);
      r.result = {{"generators", in.matrix.generators()},
                  {"kind", to_string(t.kind)},
                  {"families", t.families},
                  {"right_angled", in.matrix.is_right_angled()},
                  {"quasi_lanner", in.matrix.rank() >= 3 && is_connected(in.matrix, in.matrix.all()) &&
                                       is_quasi_lanner(in.matrix)}};
      return emit(r, out);
    }
    if (nerve_cmd->parsed()) {
      r.command = "nerve";
      auto in = load(file);
      r.input_digest = in.digest;
      const Nerve nv = build_nerve(in.matrix, cap);
      auto j = nerve_to_json(nv, maximal_flats(in.matrix, cap));
      if (!out_path.empty()) {
        write_file(out_path, j.dump(2) + "\n");
        r.result = {{"written", out_path}, {"simplex_count", j["simplex_count"]}, {"dimension", j["dimension"]}};
      } else {
        r.result = j;
      }
      return emit(r, out);
    }
    if (flats_cmd->parsed()) {
      r.command = "flats";
      auto in = load(file);
      r.input_digest = in.digest;
      nlohmann::json list = nlohmann::json::array();
      std::set<int> dims;
      for (const auto& f : maximal_flats(in.matrix, cap)) {
        list.push_back(flat_json(in.matrix, f));
        dims.insert(f.flat_dim);
      }
      r.result = {{"maximal_flats", list}, {"dimensions", dims}};
      if (flats_cmd->count("--dim")) {
        const Nerve nv = build_nerve(in.matrix, cap);
        r.audits.push_back(check_codim1_flats(nv, dim));
        r.audits.push_back(check_flat_isolation(nv));
      }
      return emit(r, out);
    }
    if (hm_cmd->parsed()) {
      r.command = "check-hm";
      auto in = load(file);
      r.input_digest = in.digest;
      const Nerve nv = mark_cone_vertices(build_nerve(in.matrix), dim);
      r.audits.push_back(is_ghs(nv.complex, dim - 1));
      r.audits.push_back(check_codim1_flats(nv, dim));
      r.audits.push_back(check_flat_isolation(nv));
      AuditReport pos;
      pos.name = "boundary position";
      nlohmann::json positions = nlohmann::json::array();
      for (const auto& f : maximal_flats(in.matrix)) {
        if (f.flat_dim != dim - 1) continue;
        const auto bp = flat_boundary_position(nv, f.generators);
        nlohmann::json e = {{"flat", sorted_names(in.matrix, f.generators)},
                            {"position", to_string(bp.kind)},
                            {"components", bp.complement_components.size()}};
        if (bp.kind == BoundaryPosition::Kind::Boundary) e["cone_vertex"] = in.matrix.name(bp.cone_vertex);
        positions.push_back(e);
        pos.add("flat bounds or separates", bp.kind != BoundaryPosition::Kind::NonSeparating,
                to_string(bp.kind), bp.kind == BoundaryPosition::Kind::NonSeparating ? e : nlohmann::json{});
      }
      r.audits.push_back(pos);
      r.result = {{"positions", positions}, {"cone_vertices", sorted_names(in.matrix, nv.cone_vertices)}};
      return emit(r, out);
    }
    if (cut_cmd->parsed()) {
      r.command = "cut";
      auto in = load(file);
      r.input_digest = in.digest;
      const Mask flat = in.matrix.mask_of(split(flat_arg, ','));
      const auto res = cut_along_flat(build_nerve(in.matrix), flat);
      if (prefix.empty()) {
        prefix = file;
        if (prefix.size() > 4 && prefix.substr(prefix.size() - 4) == ".cox") prefix.resize(prefix.size() - 4);
      }
      nlohmann::json pieces = nlohmann::json::array();
      for (int i = 0; i < 2; ++i) {
        const auto& piece = res.pieces[static_cast<std::size_t>(i)];
        const std::string path = prefix + ".piece" + std::to_string(i + 1) + ".cox";
        write_file(path, to_cox(piece.matrix));
        pieces.push_back({{"file", path},
                          {"cone_vertex", res.cone_vertex_names[static_cast<std::size_t>(i)]},
                          {"generators", piece.matrix.generators()}});
      }
      r.result = {{"flat", res.flat}, {"pieces", pieces}};
      return emit(r, out);
    }
    if (glue_cmd->parsed()) {
      r.command = "glue";
      const auto t1 = read_file(file), t2 = read_file(file2);
      r.input_digest = sha256_hex(t1 + t2);
      const auto m1 = parse_diagram(t1), m2 = parse_diagram(t2);
      std::map<std::string, std::string> match;
      std::vector<std::string> side1, side2;
      for (const auto& kv : split(match_arg, ',')) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw InputError("bad --match entry '" + kv + "'");
        match[kv.substr(0, eq)] = kv.substr(eq + 1);
        side1.push_back(kv.substr(0, eq));
        side2.push_back(kv.substr(eq + 1));
      }
      const Nerve g =
          glue_along_flat(build_nerve(m1), m1.mask_of(side1), build_nerve(m2), m2.mask_of(side2), match);
      const auto text = to_cox(g.matrix);
      if (!out_path.empty()) {
        write_file(out_path, text);
        r.result["written"] = out_path;
      } else {
        r.result["cox"] = text;
      }
      r.result["generators"] = g.matrix.generators();
      return emit(r, out);
    }
    if (audit_cmd->parsed()) {
      auto in = load(aa.file);
      r.input_digest = in.digest;
      const auto& m = in.matrix;
      if (a_ra->parsed()) {
        r.command = "audit rightangled";
        if (!m.is_right_angled()) throw InputError("audit rightangled needs a right-angled diagram");
        const auto p = audit_model(m, aa, r);
        AuditReport hyp;
        hyp.name = "right-angled hypotheses";
        hyp.add("nerve is flag", is_flag(p.nerve().complex));
        hyp.add("dimension <= " + std::to_string(rightangled_dimension_bound()),
                aa.dim <= rightangled_dimension_bound(), "n=" + std::to_string(aa.dim));
        r.audits.push_back(hyp);
        r.audits.push_back(audit_section4(p));
      } else if (a_nk->parsed()) {
        r.command = "audit nikulin";
        const auto p = audit_model(m, aa, r);
        r.audits.push_back(audit_nikulin(p, aa.i, aa.k));
      } else if (a_wt->parsed()) {
        r.command = "audit weights";
        const auto p = audit_model(m, aa, r);
        const auto w = weight_report(p);
        r.result["weights"] = to_json(p, w);
        AuditReport edges;
        edges.name = "edge weight sums";
        for (const auto& e : w.edges)
          if (!e.sigma.ok)
            edges.add("sigma(edge) <= 29(n-1)/3", false, e.sigma.value.str(),
                      nlohmann::json(sorted_names(m, e.edge)));
        if (edges.findings.empty())
          edges.add("sigma(edge) <= 29(n-1)/3", true, std::to_string(w.edges.size()) + " edges");
        r.audits.push_back(edges);
        r.audits.push_back(good_face_audit(p));
        if (aa.dim >= 8) r.audits.push_back(bad_ratio_audit(p));
      } else if (a_p4->parsed()) {
        r.command = "audit prop4";
        const auto p = audit_model(m, aa, r);
        r.audits.push_back(check_proposition4(p));
      }
      return emit(r, out);
    }
    if (bound_cmd->parsed()) {
      if (!right_angled && !general) throw InputError("bound needs --right-angled or --general");
      if (right_angled) out << rightangled_dimension_bound() << "\n";
      if (general) out << general_bound(parse_rational(c_arg)).str() << "\n";
      return 0;
    }
    if (example_cmd->parsed()) {
      out << to_cox(ex_cube->parsed() ? build_rac_cube(pairs) : build_pv_example(pairs));
      return 0;
    }
  } catch (const Error& e) {
    err << "coxkit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "coxkit: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace coxkit::cli
