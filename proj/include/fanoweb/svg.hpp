#pragma once

// Polygon strips in SVG 1.1. One panel per polytope; +y points up.

#include "fanoweb/web.hpp"

#include <sstream>

namespace fanoweb {

struct Panel {
  Polytope polytope;
  std::optional<std::vector<LatticeVector>> fiber;  // drawn in gray when present
  bool mori = false;                                // "Mfp" marker
  std::string relation;                             // symbol to the next panel
};

namespace detail {

inline Panel panel_of(const FiberedSet& f) {
  FiberCheck c = f.structure();
  return {f.polytope(), f.fiber, c && c.structure->mori, ""};
}

inline std::string relation_symbol(RelationKind k) {
  switch (k) {
    case RelationKind::inclusion: return "⊂·";
    case RelationKind::reverse_inclusion: return "⊃·";
    case RelationKind::equality: return "=";
  }
  return "";
}

}  // namespace detail

inline std::vector<Panel> panels(const LinkSequence& s) {
  std::vector<Panel> out;
  for (const auto& l : s.steps) {
    auto cols = l.constituents();
    if (out.empty()) out.push_back(detail::panel_of(*cols.front()));
    for (std::size_t k = 1; k < cols.size(); ++k) {
      out.back().relation = detail::relation_symbol(detail::top_relation(*cols[k - 1], *cols[k], 0).kind);
      out.push_back(detail::panel_of(*cols[k]));
    }
  }
  return out;
}

inline std::vector<Panel> panels(const ConnectCertificate& c) {
  std::vector<Panel> out;
  for (const auto& P : c.chain) out.push_back({P, std::nullopt, false, ""});
  for (std::size_t i = 0; i < c.relations.size() && i + 1 < out.size(); ++i)
    out[i].relation = detail::relation_symbol(c.relations[i].kind);
  for (std::size_t s = 0; s < c.sequence.steps.size() && s < c.step_positions.size(); ++s) {
    auto cols = c.sequence.steps[s].constituents();
    for (std::size_t k = 0; k < cols.size() && c.step_positions[s] + k < out.size(); ++k) {
      Panel p = detail::panel_of(*cols[k]);
      Panel& q = out[c.step_positions[s] + k];
      q.fiber = p.fiber;
      q.mori = p.mori;
    }
  }
  return out;
}

/// Byte-identical output for identical panels.
inline std::string render_svg(const std::vector<Panel>& ps, int cell = 24) {
  if (cell <= 0) throw std::invalid_argument("render: cell size must be positive");
  long lo = -1, hi = 1;
  for (const auto& p : ps) {
    if (p.polytope.dim() != 2) throw std::invalid_argument("render: only polygons can be drawn");
    for (const auto& v : p.polytope.vertices())
      for (std::size_t i = 0; i < 2; ++i) {
        if (!v[i].is_small()) throw std::invalid_argument("render: coordinates too large");
        lo = std::min<long>(lo, v[i].small_value());
        hi = std::max<long>(hi, v[i].small_value());
      }
  }
  const long span = hi - lo, pad = cell, gap = 2 * cell;
  const long w = span * cell + 2 * pad, h = span * cell + 2 * pad + cell;
  const long total_w = static_cast<long>(ps.size()) * w + (ps.empty() ? 0 : static_cast<long>(ps.size() - 1) * gap);
  auto X = [&](std::size_t k, const LatticeVector& v) {
    return static_cast<long>(k) * (w + gap) + pad + (v[0].small_value() - lo) * cell;
  };
  auto Y = [&](const LatticeVector& v) { return cell + pad + (hi - v[1].small_value()) * cell; };

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << std::max<long>(total_w, 1)
    << "\" height=\"" << h << "\" font-family=\"sans-serif\" font-size=\"" << cell / 2 << "\">\n";
  for (std::size_t k = 0; k < ps.size(); ++k) {
    const Panel& p = ps[k];
    const auto& vs = p.polytope.vertices();
    o << "<g class=\"panel\" id=\"panel-" << k + 1 << "\">\n";
    auto points_attr = [&](const std::vector<LatticeVector>& pts) {
      std::string s;
      for (std::size_t i = 0; i < pts.size(); ++i)
        s += (i ? " " : "") + std::to_string(X(k, pts[i])) + "," + std::to_string(Y(pts[i]));
      return s;
    };
    if (p.fiber) {
      bool whole = p.fiber->size() >= 3 || rank(*p.fiber) == 2;
      if (whole) {
        o << "<polygon class=\"fiber\" points=\"" << points_attr(vs) << "\" fill=\"#bbbbbb\" stroke=\"none\"/>\n";
      } else {
        auto f = *p.fiber;
        std::sort(f.begin(), f.end());
        o << "<line class=\"fiber\" x1=\"" << X(k, f.front()) << "\" y1=\"" << Y(f.front()) << "\" x2=\"" << X(k, f.back())
          << "\" y2=\"" << Y(f.back()) << "\" stroke=\"#999999\" stroke-width=\"" << std::max(2, cell / 4)
          << "\" stroke-linecap=\"round\"/>\n";
      }
    }
    o << "<polygon class=\"polytope\" points=\"" << points_attr(vs) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    for (long x = lo; x <= hi; ++x)
      for (long y = lo; y <= hi; ++y) {
        LatticeVector q{x, y};
        bool origin = x == 0 && y == 0;
        bool in = p.polytope.contains(q);
        o << "<circle cx=\"" << X(k, q) << "\" cy=\"" << Y(q) << "\" r=\"" << (in ? 3 : 1.5) << "\" fill=\""
          << (origin ? "white" : in ? "black" : "#cccccc") << "\"" << (origin ? " stroke=\"black\"" : "") << "/>\n";
      }
    if (p.mori)
      o << "<text class=\"mfp\" x=\"" << static_cast<long>(k) * (w + gap) + pad << "\" y=\"" << cell << "\">Mfp</text>\n";
    if (!p.relation.empty() && k + 1 < ps.size())
      o << "<text class=\"relation\" x=\"" << static_cast<long>(k) * (w + gap) + w + gap / 4 << "\" y=\"" << cell + pad + span * cell / 2
        << "\">" << p.relation << "</text>\n";
    o << "</g>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace fanoweb
