// fanoweb command line. Every subcommand reads JSON (a file path, "-" for
// stdin, or inline text starting with '{' or '[') and writes JSON, or SVG for
// render. Exit codes: 0 ok, 1 bad input, 2 not found in box, 3 verification failed.

#include "fanoweb/bundles.hpp"
#include "fanoweb/svg.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace fanoweb;

namespace {

struct exit_with : std::runtime_error {
  int code;
  exit_with(int c, const std::string& what) : std::runtime_error(what), code(c) {}
};

json load(const std::string& arg) {
  std::string text;
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
    text = arg;
  } else if (arg == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    text = s.str();
  } else {
    std::ifstream in(arg);
    if (!in) throw format_error("cannot open " + arg);
    std::ostringstream s;
    s << in.rdbuf();
    text = s.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw format_error(std::string("invalid JSON: ") + e.what());
  }
}

/// A polytope, or the hull of a PGS / fibered set.
Polytope load_polytope(const std::string& arg) {
  json j = load(arg);
  if (j.is_object() && j.contains("set")) return hull(vectors_from_json(j.at("set")));
  return polytope_from_json(j);
}

FiberedSet load_fibered(const std::string& arg) {
  json j = load(arg);
  if (j.is_object() && j.contains("set")) return fibered_from_json(j);
  Polytope P = polytope_from_json(j);
  auto mfs = mori_fiber_structures(P);
  if (mfs.empty()) throw format_error("polytope has no Mori fiber structure; pass {\"set\", \"fiber\"}");
  return {primitive_set(P), mfs.front().fiber};
}

json class_json(const Polytope& P) {
  json j = to_json(classify(P));
  j["polytope"] = to_json(P);
  return j;
}

json mmp_json(const MmpResult& r) {
  json chain = json::array(), removed = json::array();
  for (const auto& P : r.chain) chain.push_back(to_json(P));
  for (const auto& v : r.removed) removed.push_back(to_json(v));
  return {{"chain", chain}, {"removed", removed}, {"mfp", to_json(r.mfp())}, {"fiber", to_json(r.fiber)}};
}

json report_json(const std::vector<std::string>& failures) {
  json j = {{"ok", failures.empty()}, {"failures", failures}};
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Primitive generating sets, Fano polygons and elementary links"};
  app.require_subcommand(1);
  std::string out_path, cls_name = "terminal";
  int box = 4, cell = 24;
  std::optional<std::uint64_t> seed;
  app.add_option("--out", out_path, "write the result here instead of stdout");

  auto with_class = [&](CLI::App* s) {
    s->add_option("--class", cls_name, "terminal, canonical or reflexive")
        ->check(CLI::IsMember({"terminal", "canonical", "reflexive", "none"}));
  };
  auto with_box = [&](CLI::App* s) { s->add_option("--box", box, "coordinate bound |x_i| <= N")->check(CLI::Range(1, 50)); };

  std::string a, b;
  bool mfp_only = false, set_level = false;

  auto* classify_cmd = app.add_subcommand("classify", "class flags of a polytope");
  classify_cmd->add_option("polytope", a)->required();
  auto* dual_cmd = app.add_subcommand("dual", "polar and Mavlyutov duals");
  dual_cmd->add_option("polytope", a)->required();
  auto* points_cmd = app.add_subcommand("points", "lattice, interior and primitive points");
  points_cmd->add_option("polytope", a)->required();
  auto* reduce_cmd = app.add_subcommand("reduce", "reductions of a polytope, or of a PGS with --set");
  reduce_cmd->add_option("input", a)->required();
  reduce_cmd->add_flag("--set", set_level, "treat the input as a primitive generating set");
  auto* fibers_cmd = app.add_subcommand("fibers", "fiber structures of the primitive points");
  fibers_cmd->add_option("input", a)->required();
  fibers_cmd->add_flag("--set", set_level, "treat the input as a primitive generating set");
  auto* links_cmd = app.add_subcommand("links", "elementary links starting at a Mori fibered set");
  links_cmd->add_option("fibered", a)->required();
  with_class(links_cmd);
  with_box(links_cmd);
  auto* mmp_cmd = app.add_subcommand("mmp", "reduce to a Mori fiber polytope");
  mmp_cmd->add_option("polytope", a)->required();
  with_class(mmp_cmd);
  auto* connect_cmd = app.add_subcommand("connect", "certificate joining two polygons");
  connect_cmd->add_option("from", a)->required();
  connect_cmd->add_option("to", b)->required();
  with_class(connect_cmd);
  auto* bfs_cmd = app.add_subcommand("bfs", "shortest link certificate within a box");
  bfs_cmd->add_option("from", a)->required();
  bfs_cmd->add_option("to", b)->required();
  with_class(bfs_cmd);
  with_box(bfs_cmd);
  auto* verify_cmd = app.add_subcommand("verify", "check a certificate, link sequence or link");
  verify_cmd->add_option("input", a)->required();
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Fano polygons in a box up to unimodular equivalence");
  with_class(enumerate_cmd);
  with_box(enumerate_cmd);
  enumerate_cmd->add_flag("--mfp", mfp_only, "only Mori fiber polygons");
  enumerate_cmd->add_option("--seed", seed, "also check normal forms against random unimodular images");
  auto* render_cmd = app.add_subcommand("render", "SVG of a certificate or link sequence");
  render_cmd->add_option("input", a)->required();
  render_cmd->add_option("--cell", cell, "pixels per lattice unit")->check(CLI::Range(4, 200));
  auto* ex_cmd = app.add_subcommand("bundles", "the two three-dimensional sequences and their checks");

  CLI11_PARSE(app, argc, argv);

  std::string output;
  int code = 0;
  try {
    const PolytopeClass cls = parse_class(cls_name);
    json result;
    if (classify_cmd->parsed()) {
      result = class_json(load_polytope(a));
    } else if (dual_cmd->parsed()) {
      Polytope P = load_polytope(a);
      result = {{"polar", to_json(polar_dual(P))}, {"mavlyutov", to_json(mavlyutov_dual(P))}};
    } else if (points_cmd->parsed()) {
      Polytope P = load_polytope(a);
      result = {{"lattice_points", to_json(lattice_points(P))}, {"interior", to_json(interior_lattice_points(P))}};
      result["primitive"] = is_fano(P) ? to_json(primitive_points(P)) : json(nullptr);
    } else if (reduce_cmd->parsed()) {
      json list = json::array();
      if (set_level) {
        for (const auto& r : reductions(pgs_from_json(load(a))))
          list.push_back({{"removed", to_json(r.removed)}, {"result", to_json(r.result)}});
      } else {
        Polytope P = load_polytope(a);
        for (const auto& v : P.sorted_vertices()) {
          PolytopeReduction r = polytope_reduction(P, v);
          json e = {{"vertex", to_json(v)}};
          if (r) e["result"] = to_json(*r.result);
          else e["failure"] = to_string(r.failure);
          list.push_back(e);
        }
      }
      result = {{"reductions", list}};
    } else if (fibers_cmd->parsed()) {
      PrimGenSet A = set_level ? pgs_from_json(load(a)) : primitive_set(load_polytope(a));
      json list = json::array();
      for (const auto& f : fiber_structures(A)) list.push_back(to_json(f));
      result = {{"set", to_json(A)}, {"fiber_structures", list}};
    } else if (links_cmd->parsed()) {
      json list = json::array();
      for (const auto& l : enumerate_links(load_fibered(a), cls, box)) list.push_back(to_json(l));
      result = {{"links", list}};
    } else if (mmp_cmd->parsed()) {
      result = mmp_json(mmp_reduce(load_polytope(a), cls));
    } else if (connect_cmd->parsed()) {
      ConnectCertificate c = connect(load_polytope(a), load_polytope(b), cls);
      CertificateReport r = verify_certificate(c);
      if (!r.ok()) throw exit_with(3, "internal certificate failed verification: " + r.failures.front());
      result = to_json(c);
    } else if (bfs_cmd->parsed()) {
      auto c = bfs_connect(load_polytope(a), load_polytope(b), cls, box);
      if (!c) throw exit_with(2, "not found within box " + std::to_string(box));
      result = to_json(*c);
    } else if (verify_cmd->parsed()) {
      json j = load(a);
      std::vector<std::string> failures;
      if (j.contains("chain")) failures = verify_certificate(certificate_from_json(j)).failures;
      else if (j.contains("steps")) failures = validate_sequence(sequence_from_json(j)).failures;
      else {
        LinkReport r = validate_link(link_from_json(j));
        failures = r.failures;
        failures.insert(failures.end(), r.base_failures.begin(), r.base_failures.end());
      }
      result = report_json(failures);
      if (!failures.empty()) code = 3;
    } else if (enumerate_cmd->parsed()) {
      FanoEnumeration e = enumerate_fano(box, cls, mfp_only);
      json classes = json::array();
      for (const auto& c : e.classes)
        classes.push_back({{"normal_form", to_json(c.normal_form.vertices())},
                           {"count", c.count},
                           {"example", to_json(c.example.vertices())}});
      result = {{"class", to_string(cls)}, {"box", box}, {"mfp_only", mfp_only}, {"polygons", e.polygons},
                {"classes", classes}};
      if (seed) {
        std::cerr << "seed " << *seed << "\n";
        std::mt19937_64 rng(*seed);
        std::size_t mismatches = 0;
        for (const auto& c : e.classes) {
          UnimodularMap g = random_unimodular(2, rng);
          if (!(normal_form(transform(g, c.example)) == c.normal_form)) ++mismatches;
        }
        result["seed"] = *seed;
        result["orbit_mismatches"] = mismatches;
        if (mismatches) code = 3;
      }
    } else if (render_cmd->parsed()) {
      json j = load(a);
      std::vector<Panel> ps = j.contains("chain") ? panels(certificate_from_json(j)) : panels(sequence_from_json(j));
      output = render_svg(ps, cell);
    } else if (ex_cmd->parsed()) {
      using namespace bundles;
      auto purity = [](const LinkSequence& s) {
        json l = json::array();
        for (const auto& A : fano_purity_report(s)) l.push_back(to_json(A.points()));
        return l;
      };
      LinkSequence f1 = impure_sequence(), f2 = fano_sequence();
      ConnectCertificate c2 = fano_certificate();
      Polytope H = polytope("12357");
      result = {{"impure_sequence", {{"valid", validate_sequence(f1).ok()}, {"impure", purity(f1)}, {"sequence", to_json(f1)}}},
                {"fano_sequence", {{"valid", validate_sequence(f2).ok()}, {"impure", purity(f2)}, {"sequence", to_json(f2)}}},
                {"fano_certificate", report_json(verify_certificate(c2).failures)},
                {"v4_in_hull_A12357", H.contains(v(4))},
                {"v6_in_hull_A12357", H.contains(v(6))}};
      if (!validate_sequence(f1).ok() || !validate_sequence(f2).ok() || !verify_certificate(c2).ok()) code = 3;
    }
    if (output.empty()) output = result.dump(2) + "\n";
  } catch (const exit_with& e) {
    std::cout << json{{"error", e.code == 2 ? "not_found" : "verification_failed"}, {"message", e.what()}}.dump() << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cout << json{{"error", "invalid_input"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }

  if (out_path.empty()) {
    std::cout << output;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cout << json{{"error", "io"}, {"message", "cannot write " + out_path}}.dump() << "\n";
      return 1;
    }
    out << output;
  }
  return code;
}
