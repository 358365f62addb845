#pragma once

#include "fanoweb/polytope.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fanoweb {

enum class PgsFailure { none, dimension_mismatch, non_primitive, duplicate, cone_not_full };

inline std::string to_string(PgsFailure f) {
  switch (f) {
    case PgsFailure::none: return "ok";
    case PgsFailure::dimension_mismatch: return "dimension mismatch";
    case PgsFailure::non_primitive: return "non-primitive member";
    case PgsFailure::duplicate: return "duplicate member";
    case PgsFailure::cone_not_full: return "cone not full";
  }
  return "?";
}

struct PgsCheck {
  PgsFailure reason = PgsFailure::none;
  std::optional<LatticeVector> witness;
  explicit operator bool() const { return reason == PgsFailure::none; }
};

/// True when the points positively span R^dim. The empty set spans the zero space.
inline bool positively_spanning(const std::vector<LatticeVector>& pts, std::size_t dim) {
  if (dim == 0) return true;
  if (pts.empty()) return false;
  if (dim == 1) {
    bool pos = false, neg = false;
    for (const auto& p : pts) (p[0].sign() > 0 ? pos : neg) = true;
    return pos && neg;
  }
  if (affine_dimension(pts) != static_cast<int>(dim)) return false;
  return hull(pts).origin_interior();
}

inline PgsCheck is_pgs(const std::vector<LatticeVector>& pts, std::size_t dim) {
  for (const auto& p : pts)
    if (p.dim() != dim) return {PgsFailure::dimension_mismatch, p};
  for (const auto& p : pts)
    if (!is_primitive(p)) return {PgsFailure::non_primitive, p};
  auto sorted = pts;
  std::sort(sorted.begin(), sorted.end());
  if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end())
    return {PgsFailure::duplicate, *it};
  if (!positively_spanning(pts, dim)) return {PgsFailure::cone_not_full, std::nullopt};
  return {};
}

/** @brief Primitive generating set: sorted, primitive, positively spanning. */
class PrimGenSet {
 public:
  PrimGenSet() = default;

  static PrimGenSet make(std::vector<LatticeVector> pts, std::size_t dim) {
    PgsCheck c = is_pgs(pts, dim);
    if (!c)
      throw std::invalid_argument("not a primitive generating set: " + to_string(c.reason) +
                                  (c.witness ? " " + c.witness->str() : std::string()));
    return unchecked(std::move(pts), dim);
  }

  /// Caller guarantees validity; only sorts.
  static PrimGenSet unchecked(std::vector<LatticeVector> pts, std::size_t dim) {
    PrimGenSet s;
    std::sort(pts.begin(), pts.end());
    s.points_ = std::move(pts);
    s.dim_ = dim;
    return s;
  }

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] const std::vector<LatticeVector>& points() const noexcept { return points_; }
  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
  [[nodiscard]] bool contains(const LatticeVector& v) const {
    return std::binary_search(points_.begin(), points_.end(), v);
  }

  friend bool operator==(const PrimGenSet& a, const PrimGenSet& b) {
    return a.dim_ == b.dim_ && a.points_ == b.points_;
  }
  friend auto operator<=>(const PrimGenSet& a, const PrimGenSet& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.points_.begin(), a.points_.end(), b.points_.begin(),
                                                  b.points_.end());
  }

  [[nodiscard]] std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (i) s += ',';
      s += points_[i].str();
    }
    return s + "}";
  }

 private:
  std::size_t dim_ = 0;
  std::vector<LatticeVector> points_;
};

inline PrimGenSet primitive_set(const Polytope& P) { return PrimGenSet::unchecked(primitive_points(P), P.dim()); }

/// A \ {v}
inline std::vector<LatticeVector> without(const std::vector<LatticeVector>& a, const LatticeVector& v) {
  std::vector<LatticeVector> out;
  out.reserve(a.size());
  for (const auto& x : a)
    if (!(x == v)) out.push_back(x);
  return out;
}

/// small ⊂ big with exactly one point missing; returns that point.
inline std::optional<LatticeVector> single_removed(const std::vector<LatticeVector>& big,
                                                   const std::vector<LatticeVector>& small) {
  if (big.size() != small.size() + 1) return std::nullopt;
  std::optional<LatticeVector> missing;
  std::size_t j = 0;
  for (const auto& x : big) {
    if (j < small.size() && small[j] == x) {
      ++j;
    } else {
      if (missing) return std::nullopt;
      missing = x;
    }
  }
  if (j != small.size()) return std::nullopt;
  return missing;
}

/** @brief Fiber structure A_f = A ∩ L with its base. */
struct FiberStructure {
  PrimGenSet parent;
  std::vector<LatticeVector> fiber;        // sorted, ambient coordinates
  std::vector<LatticeVector> span_basis;   // basis of N ∩ L in Hermite normal form
  QuotientProjection projection;
  PrimGenSet base;
  bool irreducible = false;
  bool mori = false;

  [[nodiscard]] std::size_t fiber_dim() const { return span_basis.size(); }

  /// The fiber as a primitive generating set of N ∩ L.
  [[nodiscard]] PrimGenSet local_fiber() const {
    std::vector<LatticeVector> loc;
    for (const auto& v : fiber) loc.push_back(projection.fiber_coordinates(v));
    return PrimGenSet::unchecked(std::move(loc), fiber_dim());
  }
};

struct FiberCheck {
  std::optional<FiberStructure> structure;
  std::string failure;
  explicit operator bool() const { return structure.has_value(); }
};

/// Checks whether `fiber` is a fiber structure on A and builds it.
inline FiberCheck fiber_structure(const PrimGenSet& A, std::vector<LatticeVector> fiber) {
  std::sort(fiber.begin(), fiber.end());
  fiber.erase(std::unique(fiber.begin(), fiber.end()), fiber.end());
  if (fiber.empty()) return {std::nullopt, "empty fiber"};
  for (const auto& v : fiber)
    if (!A.contains(v)) return {std::nullopt, "fiber point " + v.str() + " is not in the set"};

  FiberStructure fs;
  fs.parent = A;
  fs.span_basis = saturate_span(fiber);
  fs.projection = quotient_projection(fs.span_basis, A.dim());
  std::vector<LatticeVector> rest;
  for (const auto& v : A.points()) {
    bool in_l = fs.projection.apply(v).is_zero();
    if (in_l != std::binary_search(fiber.begin(), fiber.end(), v))
      return {std::nullopt, "fiber is not the intersection of the set with its span (" + v.str() + ")"};
    if (!in_l) rest.push_back(v);
  }
  fs.fiber = std::move(fiber);
  PrimGenSet loc = fs.local_fiber();
  if (PgsCheck c = is_pgs(loc.points(), loc.dim()); !c)
    return {std::nullopt, "fiber is not a primitive generating set of its span: " + to_string(c.reason)};

  std::vector<LatticeVector> base;
  for (const auto& v : rest) base.push_back(pibar(fs.projection, v));
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  const std::size_t bdim = A.dim() - fs.fiber_dim();
  if (PgsCheck c = is_pgs(base, bdim); !c)
    return {std::nullopt, "base is not a primitive generating set: " + to_string(c.reason)};
  fs.base = PrimGenSet::unchecked(std::move(base), bdim);
  fs.irreducible = A.size() == fs.fiber.size() + fs.base.size();
  fs.mori = fs.irreducible && fs.fiber.size() == fs.fiber_dim() + 1;
  return {std::move(fs), {}};
}

namespace detail {
inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i-- > 0)
      if (idx[i] < n - k + i) break;
    if (i == static_cast<std::size_t>(-1)) return;
    ++idx[i];
    for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}
}  // namespace detail

/**
 * All fiber structures on A, one per span L (proper spans generated by
 * subsets of A, plus L = N). Sorted by (dim L, fiber).
 */
inline std::vector<FiberStructure> fiber_structures(const PrimGenSet& A) {
  const std::size_t d = A.dim();
  const auto& pts = A.points();
  std::set<std::vector<LatticeVector>> spans;  // keyed by HNF basis of N ∩ L
  for (std::size_t k = 1; k < d; ++k)
    detail::for_each_subset(pts.size(), k, [&](const std::vector<std::size_t>& idx) {
      std::vector<LatticeVector> sub;
      for (auto i : idx) sub.push_back(pts[i]);
      if (rank(sub) != k) return;
      spans.insert(saturate_span(sub));
    });

  std::vector<FiberStructure> out;
  for (const auto& basis : spans) {
    std::vector<LatticeVector> fiber;
    QuotientProjection q = quotient_projection(basis, d);
    for (const auto& v : pts)
      if (q.apply(v).is_zero()) fiber.push_back(v);
    if (FiberCheck c = fiber_structure(A, fiber)) out.push_back(std::move(*c.structure));
  }
  if (!pts.empty())
    if (FiberCheck c = fiber_structure(A, pts)) out.push_back(std::move(*c.structure));
  std::sort(out.begin(), out.end(), [](const FiberStructure& a, const FiberStructure& b) {
    if (a.fiber_dim() != b.fiber_dim()) return a.fiber_dim() < b.fiber_dim();
    return a.fiber < b.fiber;
  });
  return out;
}

inline std::vector<FiberStructure> mori_fiber_structures(const PrimGenSet& A) {
  std::vector<FiberStructure> out;
  for (auto& f : fiber_structures(A))
    if (f.mori) out.push_back(std::move(f));
  return out;
}

/// Polytope version. The hull of each fiber is checked to be a terminal simplex in its span.
inline std::vector<FiberStructure> mori_fiber_structures(const Polytope& P) {
  auto out = mori_fiber_structures(primitive_set(P));
  for (const auto& f : out) {
    PrimGenSet loc = f.local_fiber();
    Polytope simplex = hull(loc.points());
    bool terminal = simplex.vertices().size() == f.fiber_dim() + 1 && lattice_points(simplex).size() == loc.size() + 1;
    if (!terminal) throw std::logic_error("fiber of a Mori fiber polytope is not a terminal simplex");
  }
  return out;
}

inline bool has_mori_fiber_structure(const Polytope& P) { return !mori_fiber_structures(primitive_set(P)).empty(); }

struct Reduction {
  LatticeVector removed;
  PrimGenSet result;
};

/// Every point whose removal leaves a primitive generating set.
inline std::vector<Reduction> reductions(const PrimGenSet& A) {
  std::vector<Reduction> out;
  for (const auto& v : A.points()) {
    auto rest = without(A.points(), v);
    if (positively_spanning(rest, A.dim())) out.push_back({v, PrimGenSet::unchecked(std::move(rest), A.dim())});
  }
  return out;
}

/// A ⊃· A'
inline bool is_reduction(const PrimGenSet& A, const PrimGenSet& Ap) {
  return A.dim() == Ap.dim() && single_removed(A.points(), Ap.points()).has_value() &&
         positively_spanning(Ap.points(), Ap.dim());
}

enum class ReductionFailure { not_fano, not_a_vertex, not_pgs, vertex_in_hull };

inline std::string to_string(ReductionFailure f) {
  switch (f) {
    case ReductionFailure::not_fano: return "not Fano";
    case ReductionFailure::not_a_vertex: return "not a vertex";
    case ReductionFailure::not_pgs: return "remaining points are not a primitive generating set";
    case ReductionFailure::vertex_in_hull: return "removed vertex lies in the hull of the remaining points";
  }
  return "?";
}

struct PolytopeReduction {
  std::optional<Polytope> result;
  ReductionFailure failure = ReductionFailure::not_fano;
  explicit operator bool() const { return result.has_value(); }
};

/// Hull of the primitive points of P other than the vertex v.
inline PolytopeReduction polytope_reduction(const Polytope& P, const LatticeVector& v) {
  if (!is_fano(P)) return {std::nullopt, ReductionFailure::not_fano};
  if (!P.has_vertex(v)) return {std::nullopt, ReductionFailure::not_a_vertex};
  auto rest = without(primitive_points(P), v);
  if (!positively_spanning(rest, P.dim())) return {std::nullopt, ReductionFailure::not_pgs};
  Polytope Q = hull(std::move(rest));
  if (Q.contains(v)) return {std::nullopt, ReductionFailure::vertex_in_hull};
  return {std::move(Q), {}};
}

/// P ⊃· Q in the polytope sense, witnessed by `v`.
inline bool is_polytope_reduction(const Polytope& P, const Polytope& Q, const LatticeVector& v) {
  PolytopeReduction r = polytope_reduction(P, v);
  return r && *r.result == Q;
}

}  // namespace fanoweb
