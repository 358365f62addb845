#pragma once

#include "fanoweb/zlattice.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fanoweb {

/** @brief Input points do not affinely span their ambient space. */
class degenerate_hull : public std::invalid_argument {
 public:
  degenerate_hull(int affine_dim, std::size_t ambient)
      : std::invalid_argument("degenerate hull: points span affine dimension " + std::to_string(affine_dim) +
                              " in ambient dimension " + std::to_string(ambient)),
        affine_dimension(affine_dim) {}
  int affine_dimension;
};

class origin_not_interior : public std::invalid_argument {
 public:
  origin_not_interior() : std::invalid_argument("the origin is not an interior point") {}
};

class not_fano : public std::invalid_argument {
 public:
  not_fano() : std::invalid_argument("polytope is not Fano") {}
};

/// Half-space normal . x >= -level with a primitive inner normal.
struct Facet {
  LatticeVector normal;
  Integer level;

  [[nodiscard]] Integer slack(const LatticeVector& x) const { return dot(normal, x) + level; }
  friend bool operator==(const Facet&, const Facet&) = default;
  friend auto operator<=>(const Facet& a, const Facet& b) {
    if (auto c = a.normal <=> b.normal; c != 0) return c;
    return a.level <=> b.level;
  }
};

class Polytope;
Polytope hull(std::vector<LatticeVector> points);

/**
 * @brief Full-dimensional lattice polytope.
 *
 * Vertices run counterclockwise from the lexicographic minimum in the plane
 * and are sorted lexicographically otherwise. Built only through hull().
 */
class Polytope {
 public:
  Polytope() = default;

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] const std::vector<LatticeVector>& vertices() const noexcept { return vertices_; }
  [[nodiscard]] const std::vector<Facet>& facets() const noexcept { return facets_; }

  [[nodiscard]] bool contains(const LatticeVector& x) const {
    return std::all_of(facets_.begin(), facets_.end(), [&](const Facet& f) { return f.slack(x).sign() >= 0; });
  }
  [[nodiscard]] bool contains_strictly(const LatticeVector& x) const {
    return std::all_of(facets_.begin(), facets_.end(), [&](const Facet& f) { return f.slack(x).sign() > 0; });
  }
  [[nodiscard]] bool has_vertex(const LatticeVector& x) const {
    return std::find(vertices_.begin(), vertices_.end(), x) != vertices_.end();
  }
  [[nodiscard]] bool origin_interior() const {
    return std::all_of(facets_.begin(), facets_.end(), [](const Facet& f) { return f.level.sign() > 0; });
  }

  /// Vertices in lexicographic order, independent of the display order.
  [[nodiscard]] std::vector<LatticeVector> sorted_vertices() const {
    auto v = vertices_;
    std::sort(v.begin(), v.end());
    return v;
  }

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

  [[nodiscard]] std::string str() const {
    std::string s = "conv{";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (i) s += ',';
      s += vertices_[i].str();
    }
    return s + "}";
  }

 private:
  friend Polytope hull(std::vector<LatticeVector> points);
  std::size_t dim_ = 0;
  std::vector<LatticeVector> vertices_;
  std::vector<Facet> facets_;
};

/// Dimension of the affine span; -1 for the empty set.
inline int affine_dimension(const std::vector<LatticeVector>& pts) {
  if (pts.empty()) return -1;
  if (pts.front().dim() == 2) {
    std::size_t i = 1;
    while (i < pts.size() && pts[i] == pts[0]) ++i;
    if (i == pts.size()) return 0;
    for (std::size_t k = i + 1; k < pts.size(); ++k) {
      const Integer c = (pts[i][0] - pts[0][0]) * (pts[k][1] - pts[0][1]) - (pts[i][1] - pts[0][1]) * (pts[k][0] - pts[0][0]);
      if (!c.is_zero()) return 2;
    }
    return 1;
  }
  std::vector<LatticeVector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
  return static_cast<int>(rank(diffs));
}

namespace detail {

inline Integer cross2(const LatticeVector& o, const LatticeVector& a, const LatticeVector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

inline LatticeVector cross3(const LatticeVector& a, const LatticeVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Facet facet_through(LatticeVector inner_normal, const LatticeVector& on_facet) {
  LatticeVector n = primitivize(inner_normal).w;
  Integer level = -dot(n, on_facet);
  return {std::move(n), std::move(level)};
}

}  // namespace detail

/**
 * Convex hull of lattice points in dimension 1, 2 or 3.
 * Throws degenerate_hull when the points do not span the ambient space.
 */
inline Polytope hull(std::vector<LatticeVector> points) {
  if (points.empty()) throw degenerate_hull(-1, 0);
  const std::size_t d = points.front().dim();
  for (const auto& p : points)
    if (p.dim() != d) throw lattice_error("hull: mixed dimensions");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const int ad = affine_dimension(points);
  if (ad != static_cast<int>(d)) throw degenerate_hull(ad, d);

  Polytope P;
  P.dim_ = d;
  if (d == 1) {
    P.vertices_ = {points.front(), points.back()};
    P.facets_ = {detail::facet_through({1}, points.front()), detail::facet_through({-1}, points.back())};
  } else if (d == 2) {
    // monotone chain; yields the counterclockwise cycle starting at the lexicographic minimum
    std::vector<LatticeVector> h(2 * points.size());
    std::size_t k = 0;
    for (const auto& p : points) {
      while (k >= 2 && detail::cross2(h[k - 2], h[k - 1], p).sign() <= 0) --k;
      h[k++] = p;
    }
    for (std::size_t i = points.size() - 1, t = k + 1; i-- > 0;) {
      while (k >= t && detail::cross2(h[k - 2], h[k - 1], points[i]).sign() <= 0) --k;
      h[k++] = points[i];
    }
    h.resize(k - 1);
    P.vertices_ = std::move(h);
    const std::size_t n = P.vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = P.vertices_[i];
      const auto& b = P.vertices_[(i + 1) % n];
      P.facets_.push_back(detail::facet_through({a[1] - b[1], b[0] - a[0]}, a));
    }
  } else if (d == 3) {
    // supporting planes through point triples
    std::set<Facet> found;
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          LatticeVector nv = detail::cross3(points[j] - points[i], points[k] - points[i]);
          if (nv.is_zero()) continue;
          int side = 0;
          bool supporting = true;
          for (std::size_t t = 0; t < n && supporting; ++t) {
            int s = dot(nv, points[t] - points[i]).sign();
            if (s == 0) continue;
            if (side == 0) side = s;
            else if (s != side) supporting = false;
          }
          if (!supporting) continue;
          if (side < 0) nv = -nv;
          found.insert(detail::facet_through(nv, points[i]));
        }
    P.facets_.assign(found.begin(), found.end());
    for (const auto& p : points) {
      std::vector<LatticeVector> tight;
      for (const auto& f : P.facets_)
        if (f.slack(p).is_zero()) tight.push_back(f.normal);
      if (rank(tight) == d) P.vertices_.push_back(p);
    }
  } else {
    throw lattice_error("hull is implemented for dimensions 1 to 3 only");
  }
  return P;
}

inline Polytope hull(const std::vector<LatticeVector>& a, const std::vector<LatticeVector>& b) {
  std::vector<LatticeVector> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return hull(std::move(all));
}

/// Image of P under g.
inline Polytope transform(const UnimodularMap& g, const Polytope& P) { return hull(g.apply(P.vertices())); }

/// All lattice points of P, sorted lexicographically.
inline std::vector<LatticeVector> lattice_points(const Polytope& P) {
  const std::size_t d = P.dim();
  LatticeVector lo = P.vertices().front(), hi = lo;
  for (const auto& v : P.vertices())
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  std::vector<LatticeVector> out;
  LatticeVector x = lo;
  for (;;) {
    if (P.contains(x)) out.push_back(x);
    std::size_t i = d;
    while (i-- > 0) {
      if (x[i] < hi[i]) {
        x[i] += 1;
        break;
      }
      x[i] = lo[i];
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

inline std::vector<LatticeVector> interior_lattice_points(const Polytope& P) {
  std::vector<LatticeVector> out;
  for (auto& x : lattice_points(P))
    if (P.contains_strictly(x)) out.push_back(std::move(x));
  return out;
}

// ---------------------------------------------------------------------------
// rational polytopes and duals

using RationalVector = std::vector<Rational>;

inline std::string rational_str(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

/** @brief Facet normal . u >= -level with rational level. */
struct RationalFacet {
  LatticeVector normal;
  Rational level;
  friend bool operator==(const RationalFacet&, const RationalFacet&) = default;
};

/** @brief Full-dimensional polytope with rational vertices, kept as a scaled lattice polytope. */
class RationalPolytope {
 public:
  RationalPolytope() = default;

  /// Hull of rational points, computed on the lattice polytope scaled by the common denominator.
  static RationalPolytope hull_of(const std::vector<RationalVector>& pts) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    BigInt den = 1;
    for (const auto& p : pts)
      for (const auto& c : p) den = boost::multiprecision::lcm(den, BigInt(denominator(c)));
    std::vector<LatticeVector> scaled;
    for (const auto& p : pts) {
      LatticeVector v(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) v[i] = Integer(BigInt(numerator(Rational(p[i] * den))));
      scaled.push_back(std::move(v));
    }
    RationalPolytope R;
    R.scaled_ = hull(std::move(scaled));
    R.denominator_ = Integer(den);
    return R;
  }

  static RationalPolytope from_lattice(const Polytope& P) {
    RationalPolytope R;
    R.scaled_ = P;
    R.denominator_ = 1;
    return R;
  }

  [[nodiscard]] std::size_t dim() const { return scaled_.dim(); }
  [[nodiscard]] const Integer& denominator() const { return denominator_; }
  [[nodiscard]] const Polytope& scaled() const { return scaled_; }

  [[nodiscard]] std::vector<RationalVector> vertices() const {
    std::vector<RationalVector> out;
    const BigInt den = denominator_.to_big();
    for (const auto& v : scaled_.vertices()) {
      RationalVector r;
      for (const auto& c : v) r.emplace_back(c.to_big(), den);
      out.push_back(std::move(r));
    }
    return out;
  }

  [[nodiscard]] std::vector<RationalFacet> facets() const {
    std::vector<RationalFacet> out;
    for (const auto& f : scaled_.facets()) out.push_back({f.normal, Rational(f.level.to_big(), denominator_.to_big())});
    return out;
  }

  [[nodiscard]] bool is_lattice() const { return denominator_ == 1; }

  /// The polytope itself when all vertices are integral.
  [[nodiscard]] std::optional<Polytope> as_lattice() const {
    if (denominator_ == 1) return scaled_;
    for (const auto& v : scaled_.vertices())
      for (const auto& c : v)
        if (!(c % denominator_).is_zero()) return std::nullopt;
    std::vector<LatticeVector> pts;
    for (auto v : scaled_.vertices()) {
      for (auto& c : v) c /= denominator_;
      pts.push_back(std::move(v));
    }
    return hull(std::move(pts));
  }

  [[nodiscard]] bool contains(const LatticeVector& x) const {
    for (const auto& f : scaled_.facets())
      if ((dot(f.normal, x) * denominator_ + f.level).sign() < 0) return false;
    return true;
  }

  [[nodiscard]] bool origin_interior() const { return scaled_.origin_interior(); }

  /// Lattice points inside, sorted.
  [[nodiscard]] std::vector<LatticeVector> lattice_points() const {
    const std::size_t d = dim();
    LatticeVector lo = scaled_.vertices().front(), hi = lo;
    for (const auto& v : scaled_.vertices())
      for (std::size_t i = 0; i < d; ++i) {
        lo[i] = std::min(lo[i], v[i]);
        hi[i] = std::max(hi[i], v[i]);
      }
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = ceil_div(lo[i], denominator_);
      hi[i] = floor_div(hi[i], denominator_);
      if (lo[i] > hi[i]) return {};
    }
    std::vector<LatticeVector> out;
    LatticeVector x = lo;
    for (;;) {
      if (contains(x)) out.push_back(x);
      std::size_t i = d;
      while (i-- > 0) {
        if (x[i] < hi[i]) {
          x[i] += 1;
          break;
        }
        x[i] = lo[i];
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
    return out;
  }

  friend bool operator==(const RationalPolytope& a, const RationalPolytope& b) {
    return a.denominator_ == b.denominator_ && a.scaled_ == b.scaled_;
  }

 private:
  Polytope scaled_;
  Integer denominator_ = 1;
};

namespace detail {
inline RationalPolytope polar_from_facets(const std::vector<Facet>& facets, const Integer& den) {
  // facet n.x >= -L/den of the primal gives dual vertex n*den/L
  std::vector<RationalVector> verts;
  for (const auto& f : facets) {
    RationalVector u;
    for (const auto& c : f.normal) u.emplace_back(c.to_big() * den.to_big(), f.level.to_big());
    verts.push_back(std::move(u));
  }
  return RationalPolytope::hull_of(verts);
}
}  // namespace detail

/// P* = {u : <u, v> >= -1 for all v in P}.
inline RationalPolytope polar_dual(const Polytope& P) {
  if (!P.origin_interior()) throw origin_not_interior();
  return detail::polar_from_facets(P.facets(), 1);
}

inline RationalPolytope polar_dual(const RationalPolytope& P) {
  if (!P.origin_interior()) throw origin_not_interior();
  return detail::polar_from_facets(P.scaled().facets(), P.denominator());
}

/** @brief conv(P* ∩ M); may be lower-dimensional, in which case `polytope` is empty. */
struct MavlyutovDual {
  int dimension = -1;
  std::vector<LatticeVector> lattice_points;
  std::optional<Polytope> polytope;
};

inline MavlyutovDual mavlyutov_dual(const Polytope& P) {
  MavlyutovDual m;
  m.lattice_points = polar_dual(P).lattice_points();
  m.dimension = affine_dimension(m.lattice_points);
  if (m.dimension == static_cast<int>(P.dim())) m.polytope = hull(m.lattice_points);
  return m;
}

struct ClassFlags {
  bool fano = false;
  bool canonical = false;
  bool terminal = false;
  bool reflexive = false;
  bool pseudoreflexive = false;
  bool almost_pseudoreflexive = false;
  friend bool operator==(const ClassFlags&, const ClassFlags&) = default;
};

inline bool all_vertices_primitive(const Polytope& P) {
  return std::all_of(P.vertices().begin(), P.vertices().end(), [](const LatticeVector& v) { return is_primitive(v); });
}

inline bool is_fano(const Polytope& P) { return P.origin_interior() && all_vertices_primitive(P); }

namespace detail {
inline bool only_origin_interior(const Polytope& P) {
  auto in = interior_lattice_points(P);
  return in.size() == 1 && in.front().is_zero();
}
inline bool points_are_vertices_and_origin(const Polytope& P) {
  auto pts = lattice_points(P);
  if (pts.size() != P.vertices().size() + 1) return false;
  return std::all_of(pts.begin(), pts.end(), [&](const LatticeVector& x) { return x.is_zero() || P.has_vertex(x); });
}
inline bool all_levels_one(const Polytope& P) {
  return std::all_of(P.facets().begin(), P.facets().end(), [](const Facet& f) { return f.level == 1; });
}
}  // namespace detail

/**
 * The class predicates. Every flag is false unless P is Fano; the classes
 * are only defined for Fano polytopes.
 */
inline ClassFlags classify(const Polytope& P) {
  ClassFlags c;
  if (!is_fano(P)) return c;
  c.fano = true;
  c.canonical = detail::only_origin_interior(P);
  c.terminal = detail::points_are_vertices_and_origin(P);
  c.reflexive = detail::all_levels_one(P);
  MavlyutovDual m = mavlyutov_dual(P);
  if (m.polytope && m.polytope->origin_interior()) {
    c.almost_pseudoreflexive = true;
    RationalPolytope back = polar_dual(*m.polytope);
    auto pts = back.lattice_points();
    if (affine_dimension(pts) == static_cast<int>(P.dim())) c.pseudoreflexive = hull(pts) == P;
  }
  return c;
}

enum class PolytopeClass { none, canonical, terminal, reflexive };

inline std::string to_string(PolytopeClass c) {
  switch (c) {
    case PolytopeClass::none: return "none";
    case PolytopeClass::canonical: return "canonical";
    case PolytopeClass::terminal: return "terminal";
    case PolytopeClass::reflexive: return "reflexive";
  }
  return "none";
}

inline PolytopeClass parse_class(const std::string& s) {
  if (s == "none") return PolytopeClass::none;
  if (s == "canonical") return PolytopeClass::canonical;
  if (s == "terminal") return PolytopeClass::terminal;
  if (s == "reflexive") return PolytopeClass::reflexive;
  throw std::invalid_argument("unknown class '" + s + "'");
}

/// Class membership without computing duals. `none` still demands a Fano polytope.
inline bool satisfies(const Polytope& P, PolytopeClass cls) {
  if (!is_fano(P)) return false;
  switch (cls) {
    case PolytopeClass::none: return true;
    case PolytopeClass::canonical: return detail::only_origin_interior(P);
    case PolytopeClass::terminal: return detail::points_are_vertices_and_origin(P);
    case PolytopeClass::reflexive: return detail::all_levels_one(P);
  }
  return false;
}

/// Nonzero primitive lattice points of a Fano polytope, sorted.
inline std::vector<LatticeVector> primitive_points(const Polytope& P) {
  if (!is_fano(P)) throw not_fano();
  std::vector<LatticeVector> out;
  for (auto& x : lattice_points(P))
    if (is_primitive(x)) out.push_back(std::move(x));
  return out;
}

/**
 * Representative of the GL(d, Z)-orbit of P.
 *
 * For each ordered d-tuple of vertices with nonzero determinant, take the
 * unimodular U putting the tuple (as columns) into Hermite normal form, apply
 * U to all vertices and sort. The lexicographically least list wins.
 */
inline Polytope normal_form(const Polytope& P) {
  const std::size_t d = P.dim();
  const auto& V = P.vertices();
  const std::size_t n = V.size();
  std::optional<std::vector<LatticeVector>> best;
  std::vector<std::size_t> idx(d, 0);
  std::vector<bool> used(n, false);

  auto consider = [&]() {
    IntMatrix B(d, d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i) B(i, j) = V[idx[j]][i];
    if (determinant(B).is_zero()) return;
    HermiteForm h = hermite_normal_form(B);
    std::vector<LatticeVector> img;
    img.reserve(n);
    for (const auto& v : V) img.push_back(h.transform * v);
    std::sort(img.begin(), img.end());
    if (!best || img < *best) best = std::move(img);
  };

  // depth-first over ordered tuples of distinct vertices
  std::size_t depth = 0;
  std::vector<std::size_t> next(d + 1, 0);
  while (true) {
    if (depth == d) {
      consider();
      --depth;
      used[idx[depth]] = false;
      continue;
    }
    std::size_t& j = next[depth];
    while (j < n && used[j]) ++j;
    if (j == n) {
      if (depth == 0) break;
      j = 0;
      --depth;
      used[idx[depth]] = false;
      continue;
    }
    idx[depth] = j;
    used[j] = true;
    ++j;
    ++depth;
  }
  return hull(*best);
}

}  // namespace fanoweb
