#pragma once

#include "fanoweb/links.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace fanoweb {

using json = nlohmann::ordered_json;

/** @brief Malformed JSON input. */
class format_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Integers are JSON numbers when they fit in 64 bits and decimal strings otherwise.

inline json to_json(const Integer& v) {
  if (v.is_small()) return v.small_value();
  return v.str();
}

inline Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) return Integer(std::string_view(j.get_ref<const std::string&>()));
  throw format_error("expected an integer, got " + j.dump());
}

inline json to_json(const LatticeVector& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(to_json(c));
  return a;
}

inline LatticeVector vector_from_json(const json& j) {
  if (!j.is_array()) throw format_error("expected a coordinate array, got " + j.dump());
  LatticeVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = integer_from_json(j[i]);
  return v;
}

inline json to_json(const std::vector<LatticeVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

inline std::vector<LatticeVector> vectors_from_json(const json& j) {
  if (!j.is_array()) throw format_error("expected an array of points");
  std::vector<LatticeVector> out;
  for (const auto& e : j) out.push_back(vector_from_json(e));
  return out;
}

inline json to_json(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

inline IntMatrix matrix_from_json(const json& j, std::size_t cols) {
  auto rows = vectors_from_json(j);
  if (!rows.empty()) cols = rows.front().dim();
  return IntMatrix::from_rows(rows, cols);
}

inline json to_json(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(q) == 1) return to_json(Integer(BigInt(numerator(q))));
  return rational_str(q);
}

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(std::string_view(s)).to_big());
    BigInt p = Integer(std::string_view(s).substr(0, slash)).to_big();
    BigInt q = Integer(std::string_view(s).substr(slash + 1)).to_big();
    if (q == 0) throw format_error("zero denominator in " + s);
    return Rational(p, q);
  }
  return Rational(integer_from_json(j).to_big());
}

inline json to_json(const Polytope& P) {
  json facets = json::array();
  for (const auto& f : P.facets()) facets.push_back({{"normal", to_json(f.normal)}, {"level", to_json(f.level)}});
  return {{"dim", P.dim()}, {"vertices", to_json(P.vertices())}, {"facets", facets}};
}

/// Accepts {"dim", "points"} or {"dim", "vertices"}, or a bare point array; the hull is taken.
inline Polytope polytope_from_json(const json& j) {
  std::vector<LatticeVector> pts;
  if (j.is_array()) {
    pts = vectors_from_json(j);
  } else if (j.is_object()) {
    if (j.contains("points")) pts = vectors_from_json(j.at("points"));
    else if (j.contains("vertices")) pts = vectors_from_json(j.at("vertices"));
    else throw format_error("polytope needs \"points\" or \"vertices\"");
    if (j.contains("dim")) {
      auto d = j.at("dim").get<std::size_t>();
      for (const auto& p : pts)
        if (p.dim() != d) throw format_error("point " + p.str() + " does not have dimension " + std::to_string(d));
    }
  } else {
    throw format_error("expected a polytope object");
  }
  if (pts.empty()) throw format_error("polytope without points");
  return hull(std::move(pts));
}

inline json to_json(const RationalPolytope& P) {
  json verts = json::array();
  for (const auto& v : P.vertices()) {
    json a = json::array();
    for (const auto& c : v) a.push_back(to_json(c));
    verts.push_back(a);
  }
  json facets = json::array();
  for (const auto& f : P.facets()) facets.push_back({{"normal", to_json(f.normal)}, {"level", to_json(f.level)}});
  return {{"dim", P.dim()}, {"rational", true}, {"vertices", verts}, {"facets", facets}};
}

inline RationalPolytope rational_polytope_from_json(const json& j) {
  std::vector<RationalVector> pts;
  for (const auto& v : j.at("vertices")) {
    RationalVector r;
    for (const auto& c : v) r.push_back(rational_from_json(c));
    pts.push_back(std::move(r));
  }
  return RationalPolytope::hull_of(pts);
}

inline json to_json(const MavlyutovDual& m) {
  json j = {{"dimension", m.dimension}, {"lattice_points", to_json(m.lattice_points)}};
  j["polytope"] = m.polytope ? to_json(*m.polytope) : json(nullptr);
  return j;
}

inline MavlyutovDual mavlyutov_from_json(const json& j) {
  MavlyutovDual m;
  m.dimension = j.at("dimension").get<int>();
  m.lattice_points = vectors_from_json(j.at("lattice_points"));
  if (!j.at("polytope").is_null()) m.polytope = polytope_from_json(j.at("polytope"));
  return m;
}

inline json to_json(const ClassFlags& c) {
  return {{"fano", c.fano},
          {"canonical", c.canonical},
          {"terminal", c.terminal},
          {"reflexive", c.reflexive},
          {"pseudoreflexive", c.pseudoreflexive},
          {"almost_pseudoreflexive", c.almost_pseudoreflexive}};
}

inline ClassFlags flags_from_json(const json& j) {
  return {j.at("fano").get<bool>(),           j.at("canonical").get<bool>(),
          j.at("terminal").get<bool>(),       j.at("reflexive").get<bool>(),
          j.at("pseudoreflexive").get<bool>(), j.at("almost_pseudoreflexive").get<bool>()};
}

inline json to_json(const PrimGenSet& A) { return {{"as", "pgs"}, {"dim", A.dim()}, {"points", to_json(A.points())}}; }

/// Validates; {"dim", "points"} with optional "as": "pgs", or a bare point array.
inline PrimGenSet pgs_from_json(const json& j) {
  if (j.is_array()) {
    auto pts = vectors_from_json(j);
    if (pts.empty()) throw format_error("bare point array must be nonempty");
    std::size_t d = pts.front().dim();
    return PrimGenSet::make(std::move(pts), d);
  }
  if (j.contains("as") && j.at("as") != "pgs") throw format_error("expected \"as\": \"pgs\"");
  return PrimGenSet::make(vectors_from_json(j.at("points")), j.at("dim").get<std::size_t>());
}

inline json to_json(const FiberStructure& f) {
  return {{"parent", to_json(f.parent)},
          {"fiber", to_json(f.fiber)},
          {"span_basis", to_json(f.span_basis)},
          {"projection", to_json(f.projection.matrix)},
          {"base", to_json(f.base)},
          {"irreducible", f.irreducible},
          {"mori", f.mori}};
}

/// Recomputes the structure from parent and fiber and checks the stored data against it.
inline FiberStructure fiber_structure_from_json(const json& j) {
  PrimGenSet A = pgs_from_json(j.at("parent"));
  FiberCheck c = fiber_structure(A, vectors_from_json(j.at("fiber")));
  if (!c) throw format_error("not a fiber structure: " + c.failure);
  const FiberStructure& f = *c.structure;
  if (j.contains("projection") && !(matrix_from_json(j.at("projection"), A.dim()) == f.projection.matrix))
    throw format_error("stored projection does not match the canonical one");
  if (j.contains("mori") && j.at("mori").get<bool>() != f.mori) throw format_error("stored Mori flag is wrong");
  if (j.contains("irreducible") && j.at("irreducible").get<bool>() != f.irreducible)
    throw format_error("stored irreducibility flag is wrong");
  return std::move(*c.structure);
}

inline json to_json(const FiberedSet& f) { return {{"set", to_json(f.set.points())}, {"fiber", to_json(f.fiber)}}; }

inline FiberedSet fibered_from_json(const json& j) {
  auto pts = vectors_from_json(j.at("set"));
  if (pts.empty()) throw format_error("empty set");
  std::size_t d = pts.front().dim();
  for (const auto& p : pts)
    if (p.dim() != d) throw format_error("mixed dimensions in set");
  return FiberedSet::make(PrimGenSet::unchecked(std::move(pts), d), vectors_from_json(j.at("fiber")));
}

inline json to_json(const ElementaryLink& l) {
  json j = {{"kind", to_string(l.kind)}, {"mode", to_string(l.mode)}, {"left", to_json(l.left)}};
  j["middle"] = l.middle ? to_json(*l.middle) : json(nullptr);
  j["right"] = to_json(l.right);
  return j;
}

inline ElementaryLink link_from_json(const json& j) {
  ElementaryLink l;
  l.kind = parse_link_kind(j.at("kind").get<std::string>());
  l.mode = j.contains("mode") ? parse_link_mode(j.at("mode").get<std::string>()) : LinkMode::polytope;
  l.left = fibered_from_json(j.at("left"));
  if (j.contains("middle") && !j.at("middle").is_null()) l.middle = fibered_from_json(j.at("middle"));
  l.right = fibered_from_json(j.at("right"));
  return l;
}

inline json to_json(const LinkSequence& s) {
  json steps = json::array(), joints = json::array();
  for (const auto& l : s.steps) steps.push_back(to_json(l));
  for (const auto& jt : s.joints) joints.push_back(to_json(jt.map.matrix()));
  return {{"class", to_string(s.class_constraint)}, {"steps", steps}, {"joints", joints}};
}

inline LinkSequence sequence_from_json(const json& j) {
  LinkSequence s;
  s.class_constraint = j.contains("class") ? parse_class(j.at("class").get<std::string>()) : PolytopeClass::none;
  for (const auto& e : j.at("steps")) s.steps.push_back(link_from_json(e));
  const std::size_t d = s.steps.empty() ? 0 : s.steps.front().left.set.dim();
  if (j.contains("joints")) {
    for (const auto& e : j.at("joints")) s.joints.push_back(Joint{UnimodularMap(matrix_from_json(e, d))});
  } else if (!s.steps.empty()) {
    s.joints.assign(s.steps.size() - 1, Joint{UnimodularMap::identity(d)});
  }
  return s;
}

inline std::string to_string(const json& j) { return j.dump(); }

}  // namespace fanoweb
