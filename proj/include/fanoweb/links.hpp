#pragma once

#include "fanoweb/pgs.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace fanoweb {

enum class LinkKind { I_d, I_m, II_irr, II_ni, III_d, III_m, IV_m, IV_s };
enum class LinkMode { set, polytope };

inline std::string to_string(LinkKind k) {
  switch (k) {
    case LinkKind::I_d: return "I_d";
    case LinkKind::I_m: return "I_m";
    case LinkKind::II_irr: return "II_irr";
    case LinkKind::II_ni: return "II_ni";
    case LinkKind::III_d: return "III_d";
    case LinkKind::III_m: return "III_m";
    case LinkKind::IV_m: return "IV_m";
    case LinkKind::IV_s: return "IV_s";
  }
  return "?";
}

inline LinkKind parse_link_kind(const std::string& s) {
  for (LinkKind k : {LinkKind::I_d, LinkKind::I_m, LinkKind::II_irr, LinkKind::II_ni, LinkKind::III_d,
                     LinkKind::III_m, LinkKind::IV_m, LinkKind::IV_s})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown link kind '" + s + "'");
}

inline std::string to_string(LinkMode m) { return m == LinkMode::set ? "set" : "polytope"; }

inline LinkMode parse_link_mode(const std::string& s) {
  if (s == "set") return LinkMode::set;
  if (s == "polytope") return LinkMode::polytope;
  throw std::invalid_argument("unknown link mode '" + s + "'");
}

inline bool has_middle(LinkKind k) { return k != LinkKind::I_d && k != LinkKind::III_d && k != LinkKind::IV_s; }

/** @brief A primitive generating set together with a chosen fiber A_f ⊂ A. */
struct FiberedSet {
  PrimGenSet set;
  std::vector<LatticeVector> fiber;  // sorted

  static FiberedSet make(PrimGenSet s, std::vector<LatticeVector> f) {
    std::sort(f.begin(), f.end());
    return {std::move(s), std::move(f)};
  }
  static FiberedSet of(const Polytope& P, std::vector<LatticeVector> f) { return make(primitive_set(P), std::move(f)); }
  static FiberedSet whole(const Polytope& P) {
    PrimGenSet s = primitive_set(P);
    auto f = s.points();
    return {std::move(s), std::move(f)};
  }

  [[nodiscard]] Polytope polytope() const { return hull(set.points()); }
  [[nodiscard]] FiberCheck structure() const { return fiber_structure(set, fiber); }
  [[nodiscard]] bool fiber_is_whole() const { return fiber == set.points(); }

  [[nodiscard]] std::string key() const {
    std::string s = set.str() + "|{";
    for (std::size_t i = 0; i < fiber.size(); ++i) {
      if (i) s += ',';
      s += fiber[i].str();
    }
    return s + "}";
  }

  friend bool operator==(const FiberedSet&, const FiberedSet&) = default;
  friend auto operator<=>(const FiberedSet& a, const FiberedSet& b) {
    if (auto c = a.set <=> b.set; c != 0) return c;
    return std::lexicographical_compare_three_way(a.fiber.begin(), a.fiber.end(), b.fiber.begin(), b.fiber.end());
  }
};

/** @brief One diagram of the link grammar: left, optional middle, right. */
struct ElementaryLink {
  LinkKind kind = LinkKind::IV_s;
  FiberedSet left;
  std::optional<FiberedSet> middle;
  FiberedSet right;
  LinkMode mode = LinkMode::polytope;

  [[nodiscard]] std::string key() const {
    std::string s = to_string(kind) + "/" + to_string(mode) + "/" + left.key();
    if (middle) s += "/" + middle->key();
    return s + "/" + right.key();
  }

  /// left, middle (when present), right
  [[nodiscard]] std::vector<const FiberedSet*> constituents() const {
    std::vector<const FiberedSet*> out{&left};
    if (middle) out.push_back(&*middle);
    out.push_back(&right);
    return out;
  }

  friend bool operator==(const ElementaryLink&, const ElementaryLink&) = default;
};

struct LinkReport {
  std::vector<std::string> failures;
  std::vector<std::string> base_failures;
  [[nodiscard]] bool ok() const { return failures.empty() && base_failures.empty(); }
};

namespace detail {

inline bool same_span(const FiberStructure& a, const FiberStructure& b) { return a.span_basis == b.span_basis; }

/// `small` is a Mori fiber structure inside the fiber of `big`, computed in the coordinates of the span of `big`.
inline bool mori_inside(const FiberStructure& small, const FiberStructure& big) {
  std::vector<LatticeVector> loc;
  try {
    for (const auto& v : small.fiber) loc.push_back(big.projection.fiber_coordinates(v));
  } catch (const lattice_error&) {
    return false;
  }
  FiberCheck c = fiber_structure(big.local_fiber(), loc);
  return c && c.structure->mori;
}

/// Base-level dashed arrow: the base of `from` fibers over the base of `to` (span of from ⊂ span of to).
inline std::optional<std::string> base_fibers_over(const FiberStructure& from, const FiberStructure& to) {
  IntMatrix m = to.projection.matrix * from.projection.section;
  std::vector<LatticeVector> kernel, images;
  for (const auto& a : from.base.points()) {
    LatticeVector u = m * a;
    if (u.is_zero()) kernel.push_back(a);
    else images.push_back(primitivize(u).w);
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  FiberCheck c = fiber_structure(from.base, kernel);
  if (!c) return "base does not fiber: " + c.failure;
  if (!c.structure->mori) return "base fibration is not Mori";
  if (images != to.base.points()) return "image of the base fibration differs from the target base";
  return std::nullopt;
}

struct Built {
  std::optional<FiberStructure> left, middle, right;
};

inline std::optional<FiberStructure> build(const FiberedSet& f, const std::string& name, LinkReport& r) {
  FiberCheck c = f.structure();
  if (!c) {
    r.failures.push_back(name + ": not a fiber structure (" + c.failure + ")");
    return std::nullopt;
  }
  return std::move(c.structure);
}

inline void require(bool cond, LinkReport& r, const std::string& msg) {
  if (!cond) r.failures.push_back(msg);
}

inline void require_mori(const std::optional<FiberStructure>& f, const std::string& name, LinkReport& r) {
  if (f) require(f->mori, r, name + ": fiber structure is not Mori");
}

/// A ⊃· A' as point sets of the same rank
inline bool reduces_to(const std::vector<LatticeVector>& a, const std::vector<LatticeVector>& b) {
  return single_removed(a, b).has_value();
}

// The checks below take the diagram in its I-type reading x -> m -> y.

inline void check_Id(const FiberedSet& x, const FiberedSet& y, LinkReport& r) {
  auto fx = build(x, "A_f ⊂ A", r), fy = build(y, "A_f' ⊂ A'", r);
  require(is_reduction(x.set, y.set), r, "top row: A ⊃· A' fails");
  require(x.fiber == y.fiber, r, "bottom row: A_f = A_f' fails");
  require_mori(fx, "A_f ⊂ A", r);
  require_mori(fy, "A_f' ⊂ A'", r);
  if (fx && fy && !is_reduction(fx->base, fy->base)) r.base_failures.push_back("base: Ā ⊃· Ā' fails");
}

inline void check_Im(const FiberedSet& x, const FiberedSet& m, const FiberedSet& y, LinkReport& r) {
  auto fx = build(x, "A_f ⊂ A", r), fm = build(m, "A_f'' ⊂ A''", r), fy = build(y, "A_f' ⊂ A'", r);
  require(x.set == m.set, r, "top row: A = A'' fails");
  require(is_reduction(m.set, y.set), r, "top row: A'' ⊃· A' fails");
  require_mori(fx, "A_f ⊂ A", r);
  require_mori(fy, "A_f' ⊂ A'", r);
  if (fx && fm) require(mori_inside(*fx, *fm), r, "bottom row: A_f ⊂m A_f'' fails");
  if (fm && fy) require(reduces_to(m.fiber, y.fiber) && same_span(*fm, *fy), r, "bottom row: A_f'' ⊃· A_f' fails");
  if (fx && fm && fy && r.failures.empty()) {
    if (fm->base != fy->base) r.base_failures.push_back("base: Ā'' = Ā' fails");
    if (auto e = base_fibers_over(*fx, *fm)) r.base_failures.push_back("base: Ā ⇢ Ā'': " + *e);
  }
}

inline void check_II(const FiberedSet& x, const FiberedSet& m, const FiberedSet& y, bool irreducible,
                     LinkReport& r) {
  auto fx = build(x, "A_f ⊂ A", r), fm = build(m, "A_f'' ⊂ A''", r), fy = build(y, "A_f' ⊂ A'", r);
  require(is_reduction(m.set, x.set), r, "top row: A ⊂· A'' fails");
  require(is_reduction(m.set, y.set), r, "top row: A'' ⊃· A' fails");
  require_mori(fx, "A_f ⊂ A", r);
  require_mori(fy, "A_f' ⊂ A'", r);
  if (irreducible) {
    require(reduces_to(m.fiber, x.fiber), r, "bottom row: A_f ⊂· A_f'' fails");
    require(reduces_to(m.fiber, y.fiber), r, "bottom row: A_f'' ⊃· A_f' fails");
    if (fm) require(fm->irreducible, r, "A_f'' ⊂ A'': middle fiber structure is not irreducible");
  } else {
    require(x.fiber == m.fiber && m.fiber == y.fiber, r, "bottom row: A_f = A_f'' = A_f' fails");
  }
  if (fx && fm && fy && r.failures.empty())
    if (!(fx->base == fm->base && fm->base == fy->base)) r.base_failures.push_back("base: Ā = Ā'' = Ā' fails");
}

inline void check_IVm(const FiberedSet& x, const FiberedSet& m, const FiberedSet& y, LinkReport& r) {
  auto fx = build(x, "A_f ⊂ A", r), fm = build(m, "A_f'' ⊂ A''", r), fy = build(y, "A_f' ⊂ A'", r);
  require(x.set == m.set && m.set == y.set, r, "top row: A = A'' = A' fails");
  require(x.fiber != y.fiber, r, "bottom row: A_f and A_f' coincide");
  require_mori(fx, "A_f ⊂ A", r);
  require_mori(fy, "A_f' ⊂ A'", r);
  if (fx && fm) require(mori_inside(*fx, *fm), r, "bottom row: A_f ⊂m A_f'' fails");
  if (fy && fm) require(mori_inside(*fy, *fm), r, "bottom row: A_f'' ⊃m A_f' fails");
  if (fx && fm && fy && r.failures.empty()) {
    if (auto e = base_fibers_over(*fx, *fm)) r.base_failures.push_back("base: Ā ⇢ Ā'': " + *e);
    if (auto e = base_fibers_over(*fy, *fm)) r.base_failures.push_back("base: Ā' ⇢ Ā'': " + *e);
  }
}

inline void check_IVs(const FiberedSet& x, const FiberedSet& y, LinkReport& r) {
  auto fx = build(x, "A_f ⊂ A", r), fy = build(y, "A_f' ⊂ A'", r);
  require(x.set == y.set, r, "top row: A = A' fails");
  require(x.fiber == y.fiber, r, "bottom row: A_f = A_f' fails");
  require_mori(fx, "A_f ⊂ A", r);
  require_mori(fy, "A_f' ⊂ A'", r);
}

}  // namespace detail

/// Checks every condition of the link's diagram; III types are read as mirrored I types.
inline LinkReport validate_link(const ElementaryLink& L) {
  LinkReport r;
  const std::size_t d = L.left.set.dim();
  for (const FiberedSet* f : L.constituents())
    if (f->set.dim() != d) {
      r.failures.push_back("constituents live in different dimensions");
      return r;
    }
  for (const FiberedSet* f : L.constituents())
    if (PgsCheck c = is_pgs(f->set.points(), d); !c) {
      r.failures.push_back("constituent " + f->set.str() + " is not a primitive generating set: " + to_string(c.reason));
      return r;
    }
  if (has_middle(L.kind) != L.middle.has_value()) {
    r.failures.push_back(std::string("diagram of type ") + to_string(L.kind) +
                         (L.middle ? " has no middle column" : " needs a middle column"));
    return r;
  }
  switch (L.kind) {
    case LinkKind::I_d: detail::check_Id(L.left, L.right, r); break;
    case LinkKind::III_d: detail::check_Id(L.right, L.left, r); break;
    case LinkKind::I_m: detail::check_Im(L.left, *L.middle, L.right, r); break;
    case LinkKind::III_m: detail::check_Im(L.right, *L.middle, L.left, r); break;
    case LinkKind::II_irr: detail::check_II(L.left, *L.middle, L.right, true, r); break;
    case LinkKind::II_ni: detail::check_II(L.left, *L.middle, L.right, false, r); break;
    case LinkKind::IV_m: detail::check_IVm(L.left, *L.middle, L.right, r); break;
    case LinkKind::IV_s: detail::check_IVs(L.left, L.right, r); break;
  }
  if (L.mode == LinkMode::polytope)
    for (const FiberedSet* f : L.constituents()) {
      Polytope P = f->polytope();
      if (primitive_points(P) != f->set.points())
        r.failures.push_back("polytope mode: " + f->set.str() + " is not the primitive point set of its hull");
    }
  return r;
}

inline LinkKind inverse_kind(LinkKind k) {
  switch (k) {
    case LinkKind::I_d: return LinkKind::III_d;
    case LinkKind::III_d: return LinkKind::I_d;
    case LinkKind::I_m: return LinkKind::III_m;
    case LinkKind::III_m: return LinkKind::I_m;
    default: return k;
  }
}

inline ElementaryLink inverse(const ElementaryLink& L) {
  return {inverse_kind(L.kind), L.right, L.middle, L.left, L.mode};
}

inline FiberedSet conjugate(const UnimodularMap& g, const FiberedSet& f) {
  return FiberedSet::make(PrimGenSet::unchecked(g.apply(f.set.points()), f.set.dim()), g.apply(f.fiber));
}

/// g applied to every constituent point.
inline ElementaryLink conjugate(const UnimodularMap& g, const ElementaryLink& L) {
  ElementaryLink out{L.kind, conjugate(g, L.left), std::nullopt, conjugate(g, L.right), L.mode};
  if (L.middle) out.middle = conjugate(g, *L.middle);
  return out;
}

// ---------------------------------------------------------------------------
// standard polygons and the named links

inline LatticeVector e1() { return {1, 0}; }
inline LatticeVector e2() { return {0, 1}; }

/// conv(e1, e2, -e1-e2)
inline Polytope nabla_inf() { return hull({{1, 0}, {0, 1}, {-1, -1}}); }

/// conv(e1, e2, -e1, -m e1 - e2)
inline Polytope nabla(int m) {
  if (m < 0) throw std::invalid_argument("nabla(m) needs m >= 0");
  return hull({{1, 0}, {0, 1}, {-1, 0}, {Integer(-m), -1}});
}

inline std::vector<LatticeVector> pm_e1() { return {{-1, 0}, {1, 0}}; }
inline std::vector<LatticeVector> pm_e2() { return {{0, -1}, {0, 1}}; }

/// l_m^+ (sign > 0) from ∇_m to ∇_{m+1}, or its inverse l_m^-.
inline ElementaryLink make_ell_m(int m, int sign) {
  if (m < 0) throw std::invalid_argument("make_ell_m needs m >= 0");
  Polytope a = nabla(m), b = nabla(m + 1);
  ElementaryLink L{LinkKind::II_ni, FiberedSet::of(a, pm_e1()), FiberedSet::of(hull(a.vertices(), b.vertices()), pm_e1()),
                   FiberedSet::of(b, pm_e1()), LinkMode::polytope};
  return sign > 0 ? L : inverse(L);
}

/// l_{-∞}^+ (type III_m) from ∇_{-∞} over a point to ∇_1 over conv(±e1), or its inverse.
inline ElementaryLink make_ell_inf(int sign) {
  ElementaryLink L{LinkKind::III_m, FiberedSet::whole(nabla_inf()), FiberedSet::whole(nabla(1)),
                   FiberedSet::of(nabla(1), pm_e1()), LinkMode::polytope};
  return sign > 0 ? L : inverse(L);
}

/// l^+ (type IV_m) swapping the two rulings of ∇_0, or its inverse.
inline ElementaryLink make_ell(int sign) {
  ElementaryLink L{LinkKind::IV_m, FiberedSet::of(nabla(0), pm_e1()), FiberedSet::whole(nabla(0)),
                   FiberedSet::of(nabla(0), pm_e2()), LinkMode::polytope};
  return sign > 0 ? L : inverse(L);
}

// ---------------------------------------------------------------------------
// sequences

/** @brief Identification of consecutive endpoints; always the identity in certificates built here. */
struct Joint {
  UnimodularMap map;
  friend bool operator==(const Joint&, const Joint&) = default;
};

struct LinkSequence {
  std::vector<ElementaryLink> steps;
  std::vector<Joint> joints;  // steps.size() - 1 entries (none when empty)
  PolytopeClass class_constraint = PolytopeClass::none;

  [[nodiscard]] bool empty() const { return steps.empty(); }
  friend bool operator==(const LinkSequence&, const LinkSequence&) = default;
};

inline LinkSequence make_sequence(std::vector<ElementaryLink> steps, PolytopeClass cls) {
  LinkSequence s;
  s.class_constraint = cls;
  if (!steps.empty()) {
    const std::size_t d = steps.front().left.set.dim();
    s.joints.assign(steps.size() - 1, Joint{UnimodularMap::identity(d)});
  }
  s.steps = std::move(steps);
  return s;
}

struct SequenceReport {
  std::vector<std::string> failures;  // each prefixed with its step or joint index
  [[nodiscard]] bool ok() const { return failures.empty(); }
};

inline SequenceReport validate_sequence(const LinkSequence& s) {
  SequenceReport r;
  if (!s.steps.empty() && s.joints.size() != s.steps.size() - 1)
    r.failures.push_back("joint count does not match step count");
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    LinkReport lr = validate_link(s.steps[i]);
    for (const auto& f : lr.failures) r.failures.push_back("step " + std::to_string(i) + ": " + f);
    for (const auto& f : lr.base_failures) r.failures.push_back("step " + std::to_string(i) + ": " + f);
    if (s.class_constraint != PolytopeClass::none)
      for (const FiberedSet* f : s.steps[i].constituents())
        if (!satisfies(f->polytope(), s.class_constraint))
          r.failures.push_back("step " + std::to_string(i) + ": " + f->set.str() + " violates class " +
                               to_string(s.class_constraint));
  }
  for (std::size_t i = 0; i + 1 < s.steps.size() && i < s.joints.size(); ++i)
    if (!(conjugate(s.joints[i].map, s.steps[i].right) == s.steps[i + 1].left))
      r.failures.push_back("joint " + std::to_string(i) + ": endpoints do not match");
  return r;
}

inline LinkSequence inverse(const LinkSequence& s) {
  std::vector<ElementaryLink> steps;
  for (auto it = s.steps.rbegin(); it != s.steps.rend(); ++it) steps.push_back(inverse(*it));
  return make_sequence(std::move(steps), s.class_constraint);
}

inline LinkSequence conjugate(const UnimodularMap& g, const LinkSequence& s) {
  std::vector<ElementaryLink> steps;
  for (const auto& l : s.steps) steps.push_back(conjugate(g, l));
  return make_sequence(std::move(steps), s.class_constraint);
}

inline LinkSequence concatenate(const LinkSequence& a, const LinkSequence& b) {
  std::vector<ElementaryLink> steps = a.steps;
  steps.insert(steps.end(), b.steps.begin(), b.steps.end());
  return make_sequence(std::move(steps), a.class_constraint);
}

// ---------------------------------------------------------------------------
// enumeration

/// Points with all coordinates in [-box, box] that are primitive.
inline std::vector<LatticeVector> primitive_box(std::size_t d, int box) {
  std::vector<LatticeVector> out;
  LatticeVector x(d);
  for (std::size_t i = 0; i < d; ++i) x[i] = -box;
  for (;;) {
    if (is_primitive(x)) out.push_back(x);
    std::size_t i = d;
    while (i-- > 0) {
      if (x[i] < box) {
        x[i] += 1;
        break;
      }
      x[i] = -box;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

namespace detail {

inline std::vector<LatticeVector> with(std::vector<LatticeVector> a, const LatticeVector& v) {
  a.insert(std::upper_bound(a.begin(), a.end(), v), v);
  return a;
}

inline bool in_span(const FiberStructure& f, const LatticeVector& v) { return f.projection.apply(v).is_zero(); }

/// Fiber structures of A whose fibers strictly contain `fiber` and carry it as a Mori fiber structure.
inline std::vector<FiberStructure> mori_overstructures(const PrimGenSet& A, const FiberStructure& inner) {
  std::vector<FiberStructure> out;
  for (auto& f : fiber_structures(A))
    if (f.fiber_dim() > inner.fiber_dim() && mori_inside(inner, f)) out.push_back(std::move(f));
  return out;
}

/// Mori fiber structures of A sitting as Mori fiber structures inside the fiber of `outer`.
inline std::vector<FiberStructure> mori_understructures(const PrimGenSet& A, const FiberStructure& outer) {
  std::vector<FiberStructure> out;
  for (auto& f : fiber_structures(A))
    if (f.mori && f.fiber_dim() < outer.fiber_dim() && mori_inside(f, outer)) out.push_back(std::move(f));
  return out;
}

inline bool hull_saturated(const std::vector<LatticeVector>& pts) {
  if (!positively_spanning(pts, pts.front().dim())) return false;
  return primitive_points(hull(pts)) == pts;
}

}  // namespace detail

/**
 * Valid polytope-mode links whose left endpoint is `from`. Points added by a
 * link are drawn from the coordinate box; every constituent must satisfy
 * `cls`. Sorted by (kind, serialization). IV_s is never produced.
 */
inline std::vector<ElementaryLink> enumerate_links(const FiberedSet& from, PolytopeClass cls, int box) {
  std::vector<ElementaryLink> cand;
  FiberCheck fc = from.structure();
  if (!fc || !fc.structure->mori) return {};
  const FiberStructure& F = *fc.structure;
  const PrimGenSet& A = from.set;
  const std::size_t d = A.dim();
  auto mk = [&](std::vector<LatticeVector> s) { return PrimGenSet::unchecked(std::move(s), d); };

  std::vector<LatticeVector> added;
  for (auto& p : primitive_box(d, box))
    if (!A.contains(p)) added.push_back(std::move(p));

  // I_d: drop a point outside the fiber
  for (const auto& v : A.points()) {
    if (std::binary_search(from.fiber.begin(), from.fiber.end(), v)) continue;
    auto rest = without(A.points(), v);
    cand.push_back({LinkKind::I_d, from, std::nullopt, {mk(rest), from.fiber}, LinkMode::polytope});
  }
  // III_d: add a point outside the fiber span
  for (const auto& p : added) {
    if (detail::in_span(F, p)) continue;
    cand.push_back({LinkKind::III_d, from, std::nullopt, {mk(detail::with(A.points(), p)), from.fiber}, LinkMode::polytope});
  }
  // I_m: enlarge the fiber inside A, then drop a point of the enlarged fiber
  for (const auto& over : detail::mori_overstructures(A, F))
    for (const auto& v : over.fiber)
      cand.push_back({LinkKind::I_m, from, FiberedSet{A, over.fiber},
                      {mk(without(A.points(), v)), without(over.fiber, v)}, LinkMode::polytope});
  // III_m: add a point to the fiber span, then shrink the fiber
  for (const auto& p : added) {
    if (!detail::in_span(F, p)) continue;
    PrimGenSet big = mk(detail::with(A.points(), p));
    FiberCheck mid = fiber_structure(big, detail::with(from.fiber, p));
    if (!mid) continue;
    for (const auto& under : detail::mori_understructures(big, *mid.structure))
      cand.push_back({LinkKind::III_m, from, FiberedSet{big, mid.structure->fiber}, FiberedSet{big, under.fiber},
                      LinkMode::polytope});
  }
  // II: add any point, then drop a different one
  for (const auto& p : added) {
    PrimGenSet big = mk(detail::with(A.points(), p));
    const bool in_fiber = detail::in_span(F, p);
    auto mid_fiber = in_fiber ? detail::with(from.fiber, p) : from.fiber;
    for (const auto& q : big.points()) {
      if (q == p) continue;
      bool q_in_fiber = std::binary_search(mid_fiber.begin(), mid_fiber.end(), q);
      if (in_fiber != q_in_fiber) continue;
      auto right_fiber = in_fiber ? without(mid_fiber, q) : mid_fiber;
      cand.push_back({in_fiber ? LinkKind::II_irr : LinkKind::II_ni, from, FiberedSet{big, mid_fiber},
                      {mk(without(big.points(), q)), right_fiber}, LinkMode::polytope});
    }
  }
  // IV_m: another Mori fiber structure under a common enlarged fiber
  for (const auto& over : detail::mori_overstructures(A, F))
    for (const auto& other : detail::mori_understructures(A, over))
      if (other.fiber != from.fiber)
        cand.push_back({LinkKind::IV_m, from, FiberedSet{A, over.fiber}, FiberedSet{A, other.fiber}, LinkMode::polytope});

  std::vector<std::pair<std::string, ElementaryLink>> keyed;
  std::set<std::string> seen;
  for (auto& l : cand) {
    bool saturated = true;
    for (const FiberedSet* f : l.constituents())
      if (!detail::hull_saturated(f->set.points())) {
        saturated = false;
        break;
      }
    if (!saturated) continue;
    if (cls != PolytopeClass::none) {
      bool in_class = true;
      for (const FiberedSet* f : l.constituents())
        if (!satisfies(f->polytope(), cls)) {
          in_class = false;
          break;
        }
      if (!in_class) continue;
    }
    if (!validate_link(l).ok()) continue;
    std::string k = l.key();
    if (seen.insert(k).second) keyed.emplace_back(std::move(k), std::move(l));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.second.kind != b.second.kind) return a.second.kind < b.second.kind;
    return a.first < b.first;
  });
  std::vector<ElementaryLink> out;
  for (auto& [k, l] : keyed) out.push_back(std::move(l));
  return out;
}

}  // namespace fanoweb
