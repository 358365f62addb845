#pragma once

#include "fanoweb/integer.hpp"

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fanoweb {

/** @brief Raised on malformed lattice input (zero vectors, non-saturated fibers, ...). */
class lattice_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/** @brief Integer vector in N = Z^d. */
class LatticeVector {
 public:
  using storage = boost::container::small_vector<Integer, 3>;

  LatticeVector() = default;
  LatticeVector(std::initializer_list<Integer> c) : c_(c.begin(), c.end()) {}
  explicit LatticeVector(std::size_t d) : c_(d) {}
  explicit LatticeVector(const std::vector<Integer>& c) : c_(c.begin(), c.end()) {}

  static LatticeVector zero(std::size_t d) { return LatticeVector(d); }
  static LatticeVector unit(std::size_t d, std::size_t i) {
    LatticeVector v(d);
    v[i] = 1;
    return v;
  }

  [[nodiscard]] std::size_t dim() const noexcept { return c_.size(); }
  Integer& operator[](std::size_t i) { return c_[i]; }
  const Integer& operator[](std::size_t i) const { return c_[i]; }
  [[nodiscard]] auto begin() const { return c_.begin(); }
  [[nodiscard]] auto end() const { return c_.end(); }
  [[nodiscard]] auto begin() { return c_.begin(); }
  [[nodiscard]] auto end() { return c_.end(); }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Integer& x) { return x.is_zero(); });
  }

  LatticeVector& operator+=(const LatticeVector& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  LatticeVector& operator-=(const LatticeVector& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  LatticeVector& operator*=(const Integer& k) {
    for (auto& x : c_) x *= k;
    return *this;
  }

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(const Integer& k, LatticeVector a) { return a *= k; }
  friend LatticeVector operator-(LatticeVector a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) { return a.c_ == b.c_; }
  friend std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b) {
    return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
  }

  /// "(1,-2)"
  [[nodiscard]] std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ',';
      s += c_[i].str();
    }
    return s + ")";
  }

 private:
  void check_same(const LatticeVector& o) const {
    if (o.c_.size() != c_.size()) throw lattice_error("dimension mismatch");
  }
  storage c_;
};

inline std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << v.str(); }

inline Integer dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.dim() != b.dim()) throw lattice_error("dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

/// gcd of the coordinates (0 for the zero vector).
inline Integer content(const LatticeVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

inline bool is_primitive(const LatticeVector& v) { return content(v) == 1; }

struct Primitivized {
  LatticeVector w;
  Integer k;
};

/** v = k*w with w primitive and k >= 1. Throws on the zero vector. */
inline Primitivized primitivize(const LatticeVector& v) {
  Integer g = content(v);
  if (g.is_zero()) throw lattice_error("cannot primitivize the zero vector");
  LatticeVector w = v;
  if (g != 1)
    for (auto& x : w) x /= g;
  return {std::move(w), std::move(g)};
}

/** @brief Dense integer matrix, row-major. */
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw lattice_error("ragged matrix literal");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Matrix whose rows are the given vectors; `cols` is used when the list is empty.
  static IntMatrix from_rows(const std::vector<LatticeVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].dim() != cols) throw lattice_error("dimension mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  [[nodiscard]] LatticeVector row(std::size_t i) const {
    LatticeVector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
  }
  [[nodiscard]] LatticeVector col(std::size_t j) const {
    LatticeVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  [[nodiscard]] std::vector<LatticeVector> row_vectors() const {
    std::vector<LatticeVector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  [[nodiscard]] IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw lattice_error("matrix shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
      }
    return c;
  }

  friend LatticeVector operator*(const IntMatrix& a, const LatticeVector& v) {
    if (a.cols_ != v.dim()) throw lattice_error("matrix shape mismatch");
    LatticeVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
  }
  /// row_i += q * row_k
  void add_row(std::size_t i, std::size_t k, const Integer& q) {
    if (q.is_zero()) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) += q * (*this)(k, j);
  }
  /// col_j += q * col_k
  void add_col(std::size_t j, std::size_t k, const Integer& q) {
    if (q.is_zero()) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) += q * (*this)(i, k);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }
  /// (row_i, row_k) <- (x row_i + y row_k, u row_i + v row_k)
  void combine_rows(std::size_t i, std::size_t k, const Integer& x, const Integer& y, const Integer& u,
                    const Integer& v) {
    for (std::size_t j = 0; j < cols_; ++j) {
      Integer a = (*this)(i, j), b = (*this)(k, j);
      (*this)(i, j) = x * a + y * b;
      (*this)(k, j) = u * a + v * b;
    }
  }

  [[nodiscard]] std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) s += ',';
      s += '[';
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ',';
        s += (*this)(i, j).str();
      }
      s += ']';
    }
    return s + "]";
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> a_;
};

/// Fraction-free Gaussian elimination.
inline Integer determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw lattice_error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Determinant of the square matrix whose rows are `vs`.
inline Integer determinant(const std::vector<LatticeVector>& vs) {
  if (vs.empty()) return 1;
  return determinant(IntMatrix::from_rows(vs, vs.front().dim()));
}

struct HermiteForm {
  IntMatrix form;       // H, row echelon, positive pivots, entries above a pivot in [0, pivot)
  IntMatrix transform;  // U unimodular with U * A = H
  std::size_t rank = 0;
};

inline HermiteForm hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (h(i, c).is_zero()) continue;
      ExtendedGcd e = extended_gcd(h(r, c), h(i, c));
      Integer p = h(r, c) / e.g, q = h(i, c) / e.g;
      h.combine_rows(r, i, e.x, e.y, -q, p);
      u.combine_rows(r, i, e.x, e.y, -q, p);
    }
    if (h(r, c).is_zero()) continue;
    if (h(r, c).sign() < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      h.add_row(i, r, -q);
      u.add_row(i, r, -q);
    }
    ++r;
  }
  return {std::move(h), std::move(u), r};
}

struct SmithForm {
  IntMatrix diagonal;  // D = L * A * R, diagonal with d_1 | d_2 | ... and d_i > 0 for i < rank
  IntMatrix left;
  IntMatrix right;
  std::size_t rank = 0;
};

inline SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix d = a;
  IntMatrix l = IntMatrix::identity(m);
  IntMatrix r = IntMatrix::identity(n);
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (!d(i, j).is_zero() && (pi == m || abs(d(i, j)) < abs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) goto done;
      d.swap_rows(t, pi);
      l.swap_rows(t, pi);
      d.swap_cols(t, pj);
      r.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        Integer q = d(i, t) / d(t, t);
        d.add_row(i, t, -q);
        l.add_row(i, t, -q);
        if (!d(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        Integer q = d(t, j) / d(t, t);
        d.add_col(j, t, -q);
        r.add_col(j, t, -q);
        if (!d(t, j).is_zero()) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!(d(i, j) % d(t, t)).is_zero()) {
            d.add_row(t, i, 1);
            l.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t).sign() < 0) {
      d.negate_row(t);
      l.negate_row(t);
    }
  }
done:
  return {std::move(d), std::move(l), std::move(r), t};
}

/// Fraction-free elimination; no transform is kept.
inline std::size_t rank(const IntMatrix& a) {
  IntMatrix m = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(r, piv);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      Integer g = gcd(m(r, c), m(i, c));
      Integer p = m(r, c) / g, q = m(i, c) / g;
      for (std::size_t k = c; k < m.cols(); ++k) m(i, k) = m(i, k) * p - m(r, k) * q;
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(const std::vector<LatticeVector>& vs) {
  if (vs.empty()) return 0;
  return rank(IntMatrix::from_rows(vs, vs.front().dim()));
}

/// Inverse of a unimodular matrix; throws if the matrix is not unimodular.
inline IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw lattice_error("inverse of a non-square matrix");
  HermiteForm h = hermite_normal_form(m);
  if (!(h.form == IntMatrix::identity(m.rows()))) throw lattice_error("matrix is not unimodular");
  return h.transform;
}

/// Rows of the HNF of `vs`, dropping zero rows.
inline std::vector<LatticeVector> hnf_basis(const std::vector<LatticeVector>& vs, std::size_t d) {
  HermiteForm h = hermite_normal_form(IntMatrix::from_rows(vs, d));
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < h.rank; ++i) out.push_back(h.form.row(i));
  return out;
}

/**
 * Lattice basis of N ∩ span_R(vs), in Hermite normal form.
 * Uses the Smith factorization L*B*R = D: the first rank rows of R^-1 span the saturation.
 */
inline std::vector<LatticeVector> saturate_span(const std::vector<LatticeVector>& vs) {
  if (vs.empty()) throw lattice_error("saturate_span of an empty list");
  const std::size_t d = vs.front().dim();
  SmithForm s = smith_normal_form(IntMatrix::from_rows(vs, d));
  if (s.rank == 0) throw lattice_error("saturate_span of zero vectors");
  IntMatrix rinv = inverse_unimodular(s.right);
  std::vector<LatticeVector> rows;
  for (std::size_t i = 0; i < s.rank; ++i) rows.push_back(rinv.row(i));
  return hnf_basis(rows, d);
}

/**
 * @brief The projection N -> N / N_f for a saturated sublattice N_f.
 *
 * `matrix` is (d-k) x d in Hermite normal form; `section` is d x (d-k)
 * with matrix * section = identity.
 */
struct QuotientProjection {
  std::size_t source_dim = 0;
  std::vector<LatticeVector> fiber_basis;
  IntMatrix matrix;
  IntMatrix section;

  [[nodiscard]] std::size_t target_dim() const { return matrix.rows(); }
  [[nodiscard]] LatticeVector apply(const LatticeVector& v) const { return matrix * v; }
  [[nodiscard]] LatticeVector lift(const LatticeVector& u) const { return section * u; }

  /// Coordinates of v in `fiber_basis`; throws if v is not in the fiber lattice.
  [[nodiscard]] LatticeVector fiber_coordinates(const LatticeVector& v) const {
    const std::size_t k = fiber_basis.size();
    LatticeVector c(k);
    LatticeVector rest = v;
    // fiber_basis is in echelon form, so coordinates peel off pivot by pivot
    for (std::size_t i = 0; i < k; ++i) {
      const LatticeVector& b = fiber_basis[i];
      std::size_t p = 0;
      while (b[p].is_zero()) ++p;
      if (!(rest[p] % b[p]).is_zero()) throw lattice_error("vector " + v.str() + " is not in the fiber lattice");
      c[i] = rest[p] / b[p];
      rest -= c[i] * b;
    }
    if (!rest.is_zero()) throw lattice_error("vector " + v.str() + " is not in the fiber lattice");
    return c;
  }

  /// Inverse of fiber_coordinates.
  [[nodiscard]] LatticeVector from_fiber_coordinates(const LatticeVector& c) const {
    LatticeVector v(source_dim);
    for (std::size_t i = 0; i < fiber_basis.size(); ++i) v += c[i] * fiber_basis[i];
    return v;
  }
};

inline QuotientProjection quotient_projection(const std::vector<LatticeVector>& fiber_basis, std::size_t d) {
  QuotientProjection q;
  q.source_dim = d;
  for (const auto& b : fiber_basis)
    if (b.dim() != d) throw lattice_error("dimension mismatch");
  const std::size_t k = fiber_basis.size();
  if (k > d) throw lattice_error("fiber basis larger than the ambient dimension");

  IntMatrix r = IntMatrix::identity(d);
  if (k > 0) {
    SmithForm s = smith_normal_form(IntMatrix::from_rows(fiber_basis, d));
    if (s.rank != k) throw lattice_error("fiber basis is linearly dependent");
    for (std::size_t i = 0; i < k; ++i)
      if (s.diagonal(i, i) != 1) throw lattice_error("fiber basis spans a non-saturated sublattice");
    r = s.right;
    q.fiber_basis = hnf_basis(fiber_basis, d);
  }
  IntMatrix rinv = inverse_unimodular(r);
  IntMatrix pi(d - k, d), sec(d, d - k);
  for (std::size_t j = 0; j < d - k; ++j)
    for (std::size_t i = 0; i < d; ++i) {
      pi(j, i) = r(i, k + j);
      sec(i, j) = rinv(k + j, i);
    }
  if (d - k > 0) {
    HermiteForm h = hermite_normal_form(pi);
    q.matrix = h.form;
    q.section = sec * inverse_unimodular(h.transform);
  } else {
    q.matrix = IntMatrix(0, d);
    q.section = IntMatrix(d, 0);
  }
  return q;
}

/// The primitive generator of the ray through pi(v). Throws when pi(v) = 0.
inline LatticeVector pibar(const QuotientProjection& q, const LatticeVector& v) {
  LatticeVector u = q.apply(v);
  if (u.is_zero()) throw lattice_error("pibar of " + v.str() + ": vector lies in the fiber");
  return primitivize(u).w;
}

/** @brief Element of GL(d, Z). */
class UnimodularMap {
 public:
  UnimodularMap() = default;
  explicit UnimodularMap(IntMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw lattice_error("unimodular map must be square");
    Integer det = determinant(m_);
    if (det != 1 && det != -1) throw lattice_error("matrix " + m_.str() + " has determinant " + det.str());
  }

  static UnimodularMap identity(std::size_t d) { return UnimodularMap(IntMatrix::identity(d)); }

  [[nodiscard]] const IntMatrix& matrix() const { return m_; }
  [[nodiscard]] std::size_t dim() const { return m_.rows(); }
  [[nodiscard]] Integer det() const { return determinant(m_); }
  [[nodiscard]] bool is_identity() const { return m_ == IntMatrix::identity(m_.rows()); }

  [[nodiscard]] LatticeVector apply(const LatticeVector& v) const { return m_ * v; }
  [[nodiscard]] std::vector<LatticeVector> apply(const std::vector<LatticeVector>& vs) const {
    std::vector<LatticeVector> out;
    out.reserve(vs.size());
    for (const auto& v : vs) out.push_back(m_ * v);
    return out;
  }
  [[nodiscard]] UnimodularMap inverse() const { return UnimodularMap(inverse_unimodular(m_), 0); }

  /// (a * b)(v) = a(b(v))
  friend UnimodularMap operator*(const UnimodularMap& a, const UnimodularMap& b) {
    return UnimodularMap(a.m_ * b.m_, 0);
  }
  friend bool operator==(const UnimodularMap& a, const UnimodularMap& b) { return a.m_ == b.m_; }

 private:
  UnimodularMap(IntMatrix m, int /*trusted*/) : m_(std::move(m)) {}
  IntMatrix m_;
};

/// Random element of GL(d, Z) built from elementary moves with small multipliers.
inline UnimodularMap random_unimodular(std::size_t d, std::mt19937_64& rng, int moves = 8) {
  IntMatrix m = IntMatrix::identity(d);
  if (d == 0) return UnimodularMap(m);
  std::uniform_int_distribution<std::size_t> pick(0, d - 1);
  std::uniform_int_distribution<int> mult(-2, 2);
  std::uniform_int_distribution<int> kind(0, 3);
  for (int s = 0; s < moves; ++s) {
    std::size_t i = pick(rng), k = pick(rng);
    switch (kind(rng)) {
      case 0:
        m.swap_rows(i, k);
        break;
      case 1:
        m.negate_row(i);
        break;
      default:
        if (i != k) m.add_row(i, k, mult(rng));
        break;
    }
  }
  return UnimodularMap(m);
}

}  // namespace fanoweb

template <>
struct std::hash<fanoweb::LatticeVector> {
  std::size_t operator()(const fanoweb::LatticeVector& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& x : v) h ^= x.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};
