#pragma once

#include "fanoweb/base_sequences.hpp"
#include "fanoweb/io.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fanoweb {

/** @brief A reduction dead end without a Mori fiber structure (possible only in dimension >= 3). */
class open_problem_instance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** @brief Input is not a Mori fiber polygon in one of the supported standard forms. */
class not_standard : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// reduction to a Mori fiber polytope

struct MmpResult {
  std::vector<Polytope> chain;          // P = chain[0] ⊃· chain[1] ⊃· ... ⊃· chain.back()
  std::vector<LatticeVector> removed;   // removed[i] is the vertex dropped from chain[i]
  std::vector<LatticeVector> fiber;     // chosen Mori fiber on chain.back()
  [[nodiscard]] const Polytope& mfp() const { return chain.back(); }
};

/**
 * Removes the lexicographically smallest removable vertex (keeping the class)
 * until the polytope has a Mori fiber structure, then picks the
 * lexicographically smallest Mori fiber.
 */
inline MmpResult mmp_reduce(const Polytope& P, PolytopeClass cls) {
  if (!satisfies(P, cls)) throw std::invalid_argument("mmp_reduce: input violates class " + to_string(cls));
  MmpResult r;
  r.chain.push_back(P);
  for (;;) {
    const Polytope& cur = r.chain.back();
    auto mfs = mori_fiber_structures(cur);
    if (!mfs.empty()) {
      auto best = std::min_element(mfs.begin(), mfs.end(),
                                   [](const FiberStructure& a, const FiberStructure& b) { return a.fiber < b.fiber; });
      r.fiber = best->fiber;
      return r;
    }
    std::optional<std::pair<LatticeVector, Polytope>> step;
    for (const auto& v : cur.sorted_vertices()) {
      PolytopeReduction red = polytope_reduction(cur, v);
      if (red && satisfies(*red.result, cls)) {
        step.emplace(v, std::move(*red.result));
        break;
      }
    }
    if (!step)
      throw open_problem_instance("no class-preserving reduction and no Mori fiber structure at " + cur.str());
    r.removed.push_back(std::move(step->first));
    r.chain.push_back(std::move(step->second));
  }
}

// ---------------------------------------------------------------------------
// GL(2, Z) words

enum class Generator { S, S_inv, T, T_inv, U };

inline std::string to_string(Generator g) {
  switch (g) {
    case Generator::S: return "S";
    case Generator::S_inv: return "S^-1";
    case Generator::T: return "T";
    case Generator::T_inv: return "T^-1";
    case Generator::U: return "U";
  }
  return "?";
}

inline UnimodularMap generator_map(Generator g) {
  switch (g) {
    case Generator::S: return UnimodularMap(IntMatrix{{0, -1}, {1, 0}});
    case Generator::S_inv: return UnimodularMap(IntMatrix{{0, 1}, {-1, 0}});
    case Generator::T: return UnimodularMap(IntMatrix{{1, 1}, {0, 1}});
    case Generator::T_inv: return UnimodularMap(IntMatrix{{1, -1}, {0, 1}});
    case Generator::U: return UnimodularMap(IntMatrix{{-1, 0}, {0, 1}});
  }
  return UnimodularMap::identity(2);
}

using Word = std::vector<Generator>;

/// X1 X2 ... Xn
inline UnimodularMap word_map(const Word& w) {
  UnimodularMap m = UnimodularMap::identity(2);
  for (Generator g : w) m = m * generator_map(g);
  return m;
}

inline std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += to_string(w[i]);
  }
  return s;
}

/**
 * Word in S, T, U and inverses with product h, by the Euclidean algorithm on
 * the first column. Not minimized.
 */
inline Word factor(const UnimodularMap& h) {
  if (h.dim() != 2) throw std::invalid_argument("factor: only GL(2, Z) is supported");
  Word tail;
  IntMatrix m = h.matrix();
  if (h.det() == -1) {
    m = m * generator_map(Generator::U).matrix();  // h = (h U) U
    tail.push_back(Generator::U);
  }
  Word word;
  // m = (T^q1 S)(T^q2 S) ... R with R upper triangular
  while (!m(1, 0).is_zero()) {
    Integer q = floor_div(m(0, 0), m(1, 0));
    for (Integer i = 0; i < abs(q); i += 1) word.push_back(q.sign() > 0 ? Generator::T : Generator::T_inv);
    word.push_back(Generator::S);
    // m <- S^-1 T^-q m
    IntMatrix next = generator_map(Generator::S_inv).matrix() * IntMatrix{{1, -q}, {0, 1}} * m;
    m = std::move(next);
  }
  Integer b = m(0, 1);
  if (m(0, 0) == -1) {
    // -T^b' = S^2 T^-b'
    word.push_back(Generator::S);
    word.push_back(Generator::S);
    b = -b;
  }
  for (Integer i = 0; i < abs(b); i += 1) word.push_back(b.sign() > 0 ? Generator::T : Generator::T_inv);
  word.insert(word.end(), tail.begin(), tail.end());
  return word;
}

// ---------------------------------------------------------------------------
// standard forms

/// Index of a standard polygon: -1 for ∇_{-∞}, m >= 0 for ∇_m.
inline Polytope standard_polygon(int index) { return index < 0 ? nabla_inf() : nabla(index); }

/// The Mori fiber of a standard polygon: the whole set for ∇_{-∞}, conv(±e1) otherwise.
inline FiberedSet standard_fibered(int index) {
  return index < 0 ? FiberedSet::whole(nabla_inf()) : FiberedSet::of(nabla(index), pm_e1());
}

inline std::string standard_name(int index) { return index < 0 ? "inf" : std::to_string(index); }

/// Frozen sequences from (F, f) to X(F, f) for the letters T and U.
inline const std::map<std::string, LinkSequence>& frozen_base_sequences() {
  static const std::map<std::string, LinkSequence> table = [] {
    std::map<std::string, LinkSequence> t;
    json j = json::parse(kBaseSequencesJson);
    for (const auto& [key, val] : j.items()) t.emplace(key, sequence_from_json(val.at("sequence")));
    return t;
  }();
  return table;
}

inline PolytopeClass standard_class(int index) { return index >= 2 ? PolytopeClass::canonical : PolytopeClass::terminal; }

namespace detail {
inline LinkSequence build_base_sequence(Generator X, int index);
}

/// A sequence from standard_fibered(index) to X applied to it. Built once per (X, index).
inline const LinkSequence& base_sequence(Generator X, int index) {
  static std::recursive_mutex mu;
  static std::map<std::pair<Generator, int>, LinkSequence> memo;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = memo.find({X, index});
  if (it == memo.end()) it = memo.emplace(std::pair{X, index}, detail::build_base_sequence(X, index)).first;
  return it->second;
}

inline LinkSequence detail::build_base_sequence(Generator X, int index) {
  const PolytopeClass cls = standard_class(index);
  switch (X) {
    case Generator::S: {
      const UnimodularMap U = generator_map(Generator::U), S = generator_map(Generator::S);
      if (index < 0)
        return make_sequence({make_ell_inf(1), make_ell_m(0, -1), conjugate(U, make_ell_m(0, 1)),
                              conjugate(U, make_ell_inf(-1))},
                             cls);
      std::vector<ElementaryLink> steps;
      for (int j = index - 1; j >= 0; --j) steps.push_back(make_ell_m(j, -1));
      steps.push_back(make_ell(1));
      for (int j = 0; j < index; ++j) steps.push_back(conjugate(S, make_ell_m(j, 1)));
      return make_sequence(std::move(steps), cls);
    }
    case Generator::S_inv:
      return conjugate(generator_map(Generator::S_inv), inverse(base_sequence(Generator::S, index)));
    case Generator::T_inv:
      return conjugate(generator_map(Generator::T_inv), inverse(base_sequence(Generator::T, index)));
    case Generator::T:
    case Generator::U: {
      const auto& t = frozen_base_sequences();
      auto it = t.find(to_string(X) + ":" + standard_name(index));
      if (it == t.end())
        throw not_standard("no base sequence for " + to_string(X) + " on standard polygon " + standard_name(index));
      return it->second;
    }
  }
  return {};
}

struct StandardForm {
  int index = 0;          // which standard polygon
  UnimodularMap h;        // h (F, f) = (P, fiber)
  Word word;              // factorization of h
  LinkSequence sequence;  // from (P, fiber) to (F, f)
};

/// Candidate maps h with h (F, f) = target, over all supported standard polygons.
inline std::vector<std::pair<int, UnimodularMap>> standard_candidates(const FiberedSet& target) {
  std::vector<std::pair<int, UnimodularMap>> out;
  if (target.set.dim() != 2) return out;
  const auto& pts = target.set.points();
  for (int index : {-1, 0, 1, 2}) {
    FiberedSet F = standard_fibered(index);
    if (F.set.size() != pts.size() || F.fiber.size() != target.fiber.size()) continue;
    for (const auto& p : pts)
      for (const auto& q : pts) {
        IntMatrix m{{p[0], q[0]}, {p[1], q[1]}};
        Integer det = determinant(m);
        if (det != 1 && det != -1) continue;
        UnimodularMap h(m);
        if (conjugate(h, F) == target) out.emplace_back(index, h);
      }
  }
  return out;
}

/**
 * Moves a 2D Mori fiber polygon to standard form. Among all maps h with
 * h (F, f) = (P, fiber) the one with the shortest word (then the
 * lexicographically least) is used.
 */
inline StandardForm to_standard_form(const Polytope& P, const std::vector<LatticeVector>& fiber, PolytopeClass cls) {
  if (P.dim() != 2) throw not_standard("standard forms exist only for polygons");
  FiberedSet target = FiberedSet::of(P, fiber);
  FiberCheck fc = target.structure();
  if (!fc || !fc.structure->mori) throw not_standard("not a Mori fiber polygon: " + target.key());
  std::optional<StandardForm> best;
  for (auto& [index, h] : standard_candidates(target)) {
    Word w = factor(h);
    if (!best || w.size() < best->word.size() || (w.size() == best->word.size() && w < best->word))
      best = StandardForm{index, h, w, {}};
  }
  if (!best) throw not_standard("no standard form among ∇_-inf, ∇_0, ∇_1, ∇_2 for " + target.key());
  if (!satisfies(standard_polygon(best->index), cls))
    throw not_standard("standard form " + standard_name(best->index) + " violates class " + to_string(cls));

  // F -> X1 F -> X1 X2 F -> ... -> h F, then reversed
  LinkSequence forward = make_sequence({}, cls);
  UnimodularMap prefix = UnimodularMap::identity(2);
  for (Generator X : best->word) {
    forward = concatenate(forward, conjugate(prefix, base_sequence(X, best->index)));
    prefix = prefix * generator_map(X);
  }
  best->sequence = inverse(forward);
  best->sequence.class_constraint = cls;
  return *best;
}

inline StandardForm to_standard_form(const FiberStructure& f, PolytopeClass cls) {
  return to_standard_form(hull(f.parent.points()), f.fiber, cls);
}

/// Links joining two standard polygons along ∇_{-∞} - ∇_1 - ∇_0 and ∇_1 - ∇_2.
inline LinkSequence ladder(int from, int to, PolytopeClass cls) {
  auto up = [](int i) -> ElementaryLink {  // towards ∇_1
    if (i < 0) return make_ell_inf(1);
    if (i == 0) return make_ell_m(0, 1);
    return make_ell_m(i - 1, -1);
  };
  auto down = [](int i) -> ElementaryLink {  // away from ∇_1
    if (i < 0) return make_ell_inf(-1);
    if (i == 0) return make_ell_m(0, -1);
    return make_ell_m(i - 1, 1);
  };
  if (from > 2 || to > 2) throw not_standard("ladder covers ∇_-inf, ∇_0, ∇_1, ∇_2 only");
  std::vector<ElementaryLink> steps;
  if (from != to) {
    if (from != 1) steps.push_back(up(from));
    if (to != 1) steps.push_back(down(to));
  }
  return make_sequence(std::move(steps), cls);
}

// ---------------------------------------------------------------------------
// certificates

enum class RelationKind { inclusion, reverse_inclusion, equality };

inline std::string to_string(RelationKind k) {
  switch (k) {
    case RelationKind::inclusion: return "inclusion";
    case RelationKind::reverse_inclusion: return "reverse_inclusion";
    case RelationKind::equality: return "equality";
  }
  return "?";
}

inline RelationKind parse_relation_kind(const std::string& s) {
  if (s == "inclusion") return RelationKind::inclusion;
  if (s == "reverse_inclusion") return RelationKind::reverse_inclusion;
  if (s == "equality") return RelationKind::equality;
  throw format_error("unknown relation '" + s + "'");
}

/// chain[i] R chain[i+1]; `point` is the added or removed point, `step` the link the relation belongs to.
struct Relation {
  RelationKind kind = RelationKind::equality;
  std::optional<LatticeVector> point;
  std::optional<std::size_t> step;
  friend bool operator==(const Relation&, const Relation&) = default;
};

struct ConnectCertificate {
  PolytopeClass cls = PolytopeClass::none;
  std::vector<Polytope> chain;
  std::vector<Relation> relations;
  LinkSequence sequence;
  std::vector<std::size_t> step_positions;  // chain index of each step's left column
  friend bool operator==(const ConnectCertificate&, const ConnectCertificate&) = default;
};

namespace detail {

inline Relation top_relation(const FiberedSet& a, const FiberedSet& b, std::size_t step) {
  if (a.set == b.set) return {RelationKind::equality, std::nullopt, step};
  if (auto p = single_removed(b.set.points(), a.set.points())) return {RelationKind::inclusion, *p, step};
  if (auto p = single_removed(a.set.points(), b.set.points())) return {RelationKind::reverse_inclusion, *p, step};
  throw std::logic_error("link columns are not related by inclusion");
}

}  // namespace detail

/**
 * Flattens reductions of P, links and the reversed reductions of Q into one
 * chain. Consecutive link endpoints share a chain member.
 */
inline ConnectCertificate assemble_certificate(const MmpResult& rp, const LinkSequence& links, const MmpResult& rq,
                                               PolytopeClass cls) {
  ConnectCertificate c;
  c.cls = cls;
  c.sequence = links;
  c.sequence.class_constraint = cls;
  c.chain.push_back(rp.chain.front());
  for (std::size_t i = 1; i < rp.chain.size(); ++i) {
    c.relations.push_back({RelationKind::reverse_inclusion, rp.removed[i - 1], std::nullopt});
    c.chain.push_back(rp.chain[i]);
  }
  for (std::size_t s = 0; s < links.steps.size(); ++s) {
    const ElementaryLink& l = links.steps[s];
    if (!(l.left.polytope() == c.chain.back())) throw std::logic_error("link does not start at the current polytope");
    c.step_positions.push_back(c.chain.size() - 1);
    const FiberedSet* prev = &l.left;
    for (const FiberedSet* f : l.constituents()) {
      if (f == &l.left) continue;
      c.relations.push_back(detail::top_relation(*prev, *f, s));
      c.chain.push_back(f->polytope());
      prev = f;
    }
  }
  if (!(rq.chain.back() == c.chain.back())) throw std::logic_error("link sequence does not end at the target");
  for (std::size_t i = rq.chain.size() - 1; i-- > 0;) {
    c.relations.push_back({RelationKind::inclusion, rq.removed[i], std::nullopt});
    c.chain.push_back(rq.chain[i]);
  }
  return c;
}

inline ConnectCertificate trivial_certificate(const Polytope& P, PolytopeClass cls) {
  ConnectCertificate c;
  c.cls = cls;
  c.chain = {P};
  c.sequence = make_sequence({}, cls);
  return c;
}

/// One end of a connection: the reduction of a polygon and the standard form of its Mori fiber polygon.
struct ReducedEnd {
  MmpResult reduction;
  StandardForm standard;
};

inline ReducedEnd reduce_to_standard(const Polytope& P, PolytopeClass cls) {
  ReducedEnd e{mmp_reduce(P, cls), {}};
  e.standard = to_standard_form(e.reduction.mfp(), e.reduction.fiber, cls);
  return e;
}

/// Reduced ends keyed by polytope and class, for callers connecting many pairs.
struct ConnectCache {
  std::map<std::pair<std::string, PolytopeClass>, ReducedEnd> ends;
};

/// Constructive connection of two polygons of the class through standard forms.
inline ConnectCertificate connect(const Polytope& P, const Polytope& Q, PolytopeClass cls,
                                  ConnectCache* cache = nullptr) {
  if (cls == PolytopeClass::reflexive) cls = PolytopeClass::canonical;
  if (!satisfies(P, cls)) throw std::invalid_argument("connect: first polytope violates class " + to_string(cls));
  if (!satisfies(Q, cls)) throw std::invalid_argument("connect: second polytope violates class " + to_string(cls));
  if (P == Q) return trivial_certificate(P, cls);
  auto end = [&](const Polytope& X) -> ReducedEnd {
    if (!cache) return reduce_to_standard(X, cls);
    auto key = std::pair{X.str(), cls};
    auto it = cache->ends.find(key);
    if (it == cache->ends.end()) it = cache->ends.emplace(key, reduce_to_standard(X, cls)).first;
    return it->second;
  };
  const ReducedEnd ep = end(P), eq = end(Q);
  const StandardForm &sp = ep.standard, &sq = eq.standard;
  LinkSequence links = concatenate(concatenate(sp.sequence, ladder(sp.index, sq.index, cls)), inverse(sq.sequence));
  return assemble_certificate(ep.reduction, links, eq.reduction, cls);
}

struct CertificateReport {
  std::vector<std::string> failures;
  [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Outcomes of link and class checks, keyed by exact serialization.
struct VerifyCache {
  std::unordered_map<std::string, bool> links;
  std::unordered_map<std::string, bool> classes;
  std::unordered_map<std::string, bool> reductions;
};

/**
 * Re-checks every relation, link and class membership. Link and class checks
 * are shared within this call, and across calls when a cache is passed.
 */
inline CertificateReport verify_certificate(const ConnectCertificate& c, VerifyCache* cache = nullptr) {
  VerifyCache local;
  VerifyCache& memo = cache ? *cache : local;
  CertificateReport r;
  auto fail = [&](std::string s) { r.failures.push_back(std::move(s)); };
  if (c.chain.empty()) {
    fail("empty chain");
    return r;
  }
  if (c.relations.size() + 1 != c.chain.size()) fail("relation count does not match chain length");
  if (c.step_positions.size() != c.sequence.steps.size()) fail("step position count does not match step count");
  if (!r.ok()) return r;

  for (std::size_t i = 0; i < c.chain.size(); ++i) {
    const std::string key = c.chain[i].str();
    auto [it, fresh] = memo.classes.try_emplace(to_string(c.cls) + key, false);
    if (fresh) it->second = satisfies(c.chain[i], c.cls);
    if (!it->second) fail("chain " + std::to_string(i) + ": " + key + " violates class " + to_string(c.cls));
  }
  auto reduces = [&](const Polytope& big, const Polytope& small, const LatticeVector& v) {
    auto [it, fresh] = memo.reductions.try_emplace(big.str() + ">" + small.str() + "-" + v.str(), false);
    if (fresh) it->second = is_polytope_reduction(big, small, v);
    return it->second;
  };
  for (std::size_t i = 0; i < c.relations.size(); ++i) {
    const Relation& rel = c.relations[i];
    const Polytope &a = c.chain[i], &b = c.chain[i + 1];
    const std::string at = "relation " + std::to_string(i) + ": ";
    switch (rel.kind) {
      case RelationKind::equality:
        if (!(a == b)) fail(at + "members differ");
        break;
      case RelationKind::reverse_inclusion:
        if (!rel.point || !reduces(a, b, *rel.point)) fail(at + "not a reduction " + a.str() + " ⊃· " + b.str());
        break;
      case RelationKind::inclusion:
        if (!rel.point || !reduces(b, a, *rel.point)) fail(at + "not a reduction " + b.str() + " ⊃· " + a.str());
        break;
    }
  }

  std::vector<std::optional<std::size_t>> owner(c.relations.size());
  for (std::size_t s = 0; s < c.sequence.steps.size(); ++s) {
    const ElementaryLink& l = c.sequence.steps[s];
    const std::string at = "step " + std::to_string(s) + ": ";
    auto [it, fresh] = memo.links.try_emplace(l.key(), false);
    if (fresh) {
      LinkReport lr = validate_link(l);
      it->second = lr.ok();
      for (const auto& f : lr.failures) fail(at + f);
      for (const auto& f : lr.base_failures) fail(at + f);
    } else if (!it->second) {
      fail(at + "invalid link (repeated)");
    }
    std::size_t pos = c.step_positions[s];
    auto cols = l.constituents();
    if (pos + cols.size() > c.chain.size()) {
      fail(at + "runs past the end of the chain");
      continue;
    }
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (!(cols[k]->polytope() == c.chain[pos + k])) fail(at + "column " + std::to_string(k) + " does not match chain " + std::to_string(pos + k));
    for (std::size_t k = 0; k + 1 < cols.size(); ++k) {
      if (owner[pos + k]) fail(at + "overlaps step " + std::to_string(*owner[pos + k]));
      owner[pos + k] = s;
      const Relation& rel = c.relations[pos + k];
      if (rel.step != s) fail("relation " + std::to_string(pos + k) + ": not attributed to step " + std::to_string(s));
      try {
        if (!(detail::top_relation(*cols[k], *cols[k + 1], s) == rel))
          fail("relation " + std::to_string(pos + k) + ": does not match the columns of step " + std::to_string(s));
      } catch (const std::logic_error& e) {
        fail(at + e.what());
      }
    }
    if (s + 1 < c.sequence.steps.size() && !(l.right == c.sequence.steps[s + 1].left))
      fail("joint " + std::to_string(s) + ": endpoints do not match");
  }
  for (std::size_t i = 0; i < c.relations.size(); ++i) {
    if (owner[i]) continue;
    if (c.relations[i].step) fail("relation " + std::to_string(i) + ": claims a step that does not cover it");
    if (c.relations[i].kind == RelationKind::equality) fail("relation " + std::to_string(i) + ": equality outside a link");
  }
  if (c.sequence.joints.size() + 1 != std::max<std::size_t>(c.sequence.steps.size(), 1))
    fail("joint count does not match step count");
  for (std::size_t i = 0; i < c.sequence.joints.size(); ++i)
    if (!c.sequence.joints[i].map.is_identity()) fail("joint " + std::to_string(i) + ": not the identity");
  return r;
}

/// Constituent sets that differ from the primitive points of their hull, each listed once.
inline std::vector<PrimGenSet> fano_purity_report(const LinkSequence& s) {
  std::vector<PrimGenSet> out;
  for (const auto& l : s.steps)
    for (const FiberedSet* f : l.constituents()) {
      if (std::find(out.begin(), out.end(), f->set) != out.end()) continue;
      if (primitive_points(hull(f->set.points())) != f->set.points()) out.push_back(f->set);
    }
  return out;
}

// ---------------------------------------------------------------------------
// breadth-first search

/// Shortest link path from any source to a fibered set accepted by `goal`; nullopt when none exists in the box.
template <class Goal>
std::optional<LinkSequence> bfs_links(const std::vector<FiberedSet>& sources, Goal goal, PolytopeClass cls, int box,
                                      std::size_t max_states = 200000) {
  struct Node {
    std::optional<std::size_t> parent;
    std::optional<ElementaryLink> via;
    FiberedSet state;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> seen;
  std::deque<std::size_t> frontier;
  auto path_to = [&](std::size_t i) {
    std::vector<ElementaryLink> steps;
    for (std::size_t k = i; nodes[k].parent; k = *nodes[k].parent) steps.push_back(*nodes[k].via);
    std::reverse(steps.begin(), steps.end());
    return make_sequence(std::move(steps), cls);
  };
  for (const auto& s : sources)
    if (seen.emplace(s.key(), nodes.size()).second) {
      nodes.push_back({std::nullopt, std::nullopt, s});
      if (goal(s)) return path_to(nodes.size() - 1);
      frontier.push_back(nodes.size() - 1);
    }
  while (!frontier.empty() && nodes.size() < max_states) {
    std::size_t i = frontier.front();
    frontier.pop_front();
    FiberedSet cur = nodes[i].state;
    for (auto& l : enumerate_links(cur, cls, box)) {
      FiberedSet next = l.right;
      if (!seen.emplace(next.key(), nodes.size()).second) continue;
      nodes.push_back({i, std::move(l), next});
      if (goal(next)) return path_to(nodes.size() - 1);
      frontier.push_back(nodes.size() - 1);
    }
  }
  return std::nullopt;
}

/// Mori fibered sets on a polytope, as BFS states.
inline std::vector<FiberedSet> mori_states(const Polytope& P) {
  std::vector<FiberedSet> out;
  PrimGenSet A = primitive_set(P);
  for (const auto& f : mori_fiber_structures(A)) out.push_back({A, f.fiber});
  return out;
}

/// Reduces both ends as connect does, then searches a shortest link path between any of their Mori fiber structures.
inline std::optional<ConnectCertificate> bfs_connect(const Polytope& P, const Polytope& Q, PolytopeClass cls, int box) {
  if (cls == PolytopeClass::reflexive) cls = PolytopeClass::canonical;
  if (!satisfies(P, cls) || !satisfies(Q, cls)) throw std::invalid_argument("bfs_connect: input violates class " + to_string(cls));
  if (P == Q) return trivial_certificate(P, cls);
  MmpResult rp = mmp_reduce(P, cls), rq = mmp_reduce(Q, cls);
  const PrimGenSet target = primitive_set(rq.mfp());
  auto path = bfs_links(mori_states(rp.mfp()), [&](const FiberedSet& f) { return f.set == target; }, cls, box);
  if (!path) return std::nullopt;
  return assemble_certificate(rp, *path, rq, cls);
}

// ---------------------------------------------------------------------------
// enumeration of Fano polygons

/**
 * Fano polygons with vertices in [-box, box]^2, each listed once, for which
 * satisfies(P, cls) holds. Polygons are grown counterclockwise from their
 * lexicographically least vertex.
 */
inline std::vector<Polytope> enumerate_polygons(int box, PolytopeClass cls) {
  std::vector<LatticeVector> pts = primitive_box(2, box);
  auto edge_ok = [&](const LatticeVector& a, const LatticeVector& b) {
    Integer det = a[0] * b[1] - a[1] * b[0];
    if (det.sign() <= 0) return false;
    switch (cls) {
      case PolytopeClass::terminal: return det == 1;
      case PolytopeClass::canonical:
      case PolytopeClass::reflexive: return det == gcd(b[0] - a[0], b[1] - a[1]);
      case PolytopeClass::none: return true;
    }
    return true;
  };
  auto left_turn = [](const LatticeVector& o, const LatticeVector& a, const LatticeVector& b) {
    return ((a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])).sign() > 0;
  };

  std::vector<Polytope> out;
  for (const auto& anchor : pts) {
    std::vector<LatticeVector> cand;
    for (const auto& p : pts)
      if (anchor < p) cand.push_back(p);
    // angular order around the anchor; all candidates lie in a half-plane
    std::stable_sort(cand.begin(), cand.end(), [&](const LatticeVector& a, const LatticeVector& b) {
      return left_turn(anchor, a, b);
    });
    std::vector<LatticeVector> path{anchor};
    std::function<void(std::size_t)> grow = [&](std::size_t start) {
      const LatticeVector last = path.back();
      if (path.size() >= 3 && edge_ok(last, anchor) && left_turn(path[path.size() - 2], last, anchor) &&
          left_turn(last, anchor, path[1])) {
        Polytope P = hull(path);
        if (satisfies(P, cls)) out.push_back(std::move(P));
      }
      for (std::size_t i = start; i < cand.size(); ++i) {
        const LatticeVector& p = cand[i];
        if (!left_turn(anchor, last, p) && path.size() > 1) continue;
        if (!edge_ok(last, p)) continue;
        if (path.size() >= 2 && !left_turn(path[path.size() - 2], last, p)) continue;
        path.push_back(p);
        grow(i + 1);
        path.pop_back();
      }
    };
    grow(0);
  }
  std::sort(out.begin(), out.end(), [](const Polytope& a, const Polytope& b) { return a.vertices() < b.vertices(); });
  return out;
}

struct NormalFormClass {
  Polytope normal_form;
  std::size_t count = 0;
  Polytope example;
};

struct FanoEnumeration {
  std::size_t polygons = 0;
  std::vector<NormalFormClass> classes;  // sorted by normal form vertices
};

/// Polygons of the class in the box, optionally only Mori fiber polygons, grouped by normal form.
inline FanoEnumeration enumerate_fano(int box, PolytopeClass cls, bool mfp_only) {
  FanoEnumeration e;
  std::map<std::vector<LatticeVector>, NormalFormClass> groups;
  for (auto& P : enumerate_polygons(box, cls)) {
    if (mfp_only && !has_mori_fiber_structure(P)) continue;
    ++e.polygons;
    Polytope nf = normal_form(P);
    auto [it, fresh] = groups.try_emplace(nf.vertices(), NormalFormClass{nf, 0, P});
    ++it->second.count;
  }
  for (auto& [k, g] : groups) e.classes.push_back(std::move(g));
  return e;
}

// ---------------------------------------------------------------------------
// certificate JSON

inline json to_json(const Relation& r) {
  json j = {{"kind", to_string(r.kind)}};
  j["point"] = r.point ? to_json(*r.point) : json(nullptr);
  j["step"] = r.step ? json(*r.step) : json(nullptr);
  return j;
}

inline Relation relation_from_json(const json& j) {
  Relation r;
  r.kind = parse_relation_kind(j.at("kind").get<std::string>());
  if (j.contains("point") && !j.at("point").is_null()) r.point = vector_from_json(j.at("point"));
  if (j.contains("step") && !j.at("step").is_null()) r.step = j.at("step").get<std::size_t>();
  return r;
}

inline json to_json(const ConnectCertificate& c) {
  json chain = json::array(), rels = json::array();
  for (const auto& P : c.chain) chain.push_back({{"dim", P.dim()}, {"vertices", to_json(P.vertices())}});
  for (const auto& r : c.relations) rels.push_back(to_json(r));
  return {{"class", to_string(c.cls)},
          {"chain", chain},
          {"relations", rels},
          {"step_positions", c.step_positions},
          {"sequence", to_json(c.sequence)}};
}

inline ConnectCertificate certificate_from_json(const json& j) {
  ConnectCertificate c;
  c.cls = parse_class(j.at("class").get<std::string>());
  for (const auto& p : j.at("chain")) c.chain.push_back(polytope_from_json(p));
  for (const auto& r : j.at("relations")) c.relations.push_back(relation_from_json(r));
  c.step_positions = j.at("step_positions").get<std::vector<std::size_t>>();
  c.sequence = sequence_from_json(j.at("sequence"));
  return c;
}

}  // namespace fanoweb
