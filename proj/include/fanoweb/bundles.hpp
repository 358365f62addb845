#pragma once

// The seven points v1..v7 in Z^3 and the two link sequences between the
// Mori fiber polytopes (∇_123457, ∇_14) and (∇_12356, ∇_123).

#include "fanoweb/web.hpp"

#include <string_view>

namespace fanoweb::bundles {

inline LatticeVector v(int i) {
  static const LatticeVector pts[] = {{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {-1, 0, 0},
                                      {0, 0, 1}, {-1, 0, -1}, {-2, 0, -1}};
  if (i < 1 || i > 7) throw std::out_of_range("bundles: index " + std::to_string(i));
  return pts[i - 1];
}

/// "1234" -> {v1, v2, v3, v4}
inline std::vector<LatticeVector> points(std::string_view digits) {
  std::vector<LatticeVector> out;
  for (char c : digits) out.push_back(v(c - '0'));
  std::sort(out.begin(), out.end());
  return out;
}

inline PrimGenSet set(std::string_view digits) { return PrimGenSet::make(points(digits), 3); }

inline Polytope polytope(std::string_view digits) { return hull(points(digits)); }

inline FiberedSet fibered(std::string_view digits, std::string_view fiber) {
  return FiberedSet::make(set(digits), points(fiber));
}

/// Through A_12357 and A_123567, which are not primitive sets of their hulls.
inline LinkSequence impure_sequence() {
  ElementaryLink a{LinkKind::I_m, fibered("123457", "14"), fibered("123457", "1234"), fibered("12357", "123"),
                   LinkMode::set};
  ElementaryLink b{LinkKind::II_ni, fibered("12357", "123"), fibered("123567", "123"), fibered("12356", "123"),
                   LinkMode::set};
  return make_sequence({a, b}, PolytopeClass::none);
}

/// Only Fano polytopes.
inline LinkSequence fano_sequence() {
  ElementaryLink a{LinkKind::II_ni, fibered("123457", "14"), fibered("1234567", "14"), fibered("123456", "14"),
                   LinkMode::polytope};
  ElementaryLink b{LinkKind::I_m, fibered("123456", "14"), fibered("123456", "1234"), fibered("12356", "123"),
                   LinkMode::polytope};
  return make_sequence({a, b}, PolytopeClass::none);
}

/// fano_sequence as a certificate between the two Mori fiber polytopes.
inline ConnectCertificate fano_certificate() {
  MmpResult from{{polytope("123457")}, {}, points("14")};
  MmpResult to{{polytope("12356")}, {}, points("123")};
  return assemble_certificate(from, fano_sequence(), to, PolytopeClass::none);
}

}  // namespace fanoweb::bundles
