// Matrices over Z and over Z[s^±1], exact determinants, and the order
// Delta_0 (gcd of maximal minors) of a presentation matrix.
//
// Determinants over Z use fraction-free Bareiss elimination. Determinants
// over Z[s^±1] have two independent paths: evaluation at integer points
// followed by exact interpolation, and Bareiss elimination with exact
// polynomial division. The evaluation path is the default for moderate
// degree bounds; both must agree.
#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "alexlin/bigint.hpp"
#include "alexlin/laurent.hpp"
#include "alexlin/util.hpp"

namespace alexlin {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

/// Exact determinant of a square integer matrix (Bareiss, row pivoting).
inline Int int_determinant(IntMatrix m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw math_error("int_determinant: matrix not square");
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num / prev;  // exact by the Bareiss identity
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  LaurentPoly& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const LaurentPoly& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  PolyMatrix submatrix_rows(const std::vector<std::size_t>& rows) const {
    PolyMatrix s(rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) s.at(i, j) = at(rows[i], j);
    return s;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<LaurentPoly> data_;
};

namespace detail {

// Factors s^k out of every row so all entries are polynomials; returns the
// total extracted exponent. Rows that are identically zero are left alone.
inline long normalize_rows_to_poly(PolyMatrix& m) {
  long total = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    bool any = false;
    long lo = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& e = m.at(i, j);
      if (e.is_zero()) continue;
      lo = any ? std::min(lo, e.low_degree()) : e.low_degree();
      any = true;
    }
    if (!any || lo == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) m.at(i, j) = m.at(i, j).shifted(-lo);
    total += lo;
  }
  return total;
}

// Sum over rows of the max entry degree: bounds deg det for a poly matrix.
inline long det_degree_bound(const PolyMatrix& m) {
  long total = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    long d = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) d = std::max(d, m.at(i, j).top_degree());
    total += d;
  }
  return total;
}

inline LaurentPoly interpolate(const std::vector<Int>& xs, const std::vector<Int>& ys) {
  // Newton divided differences over exact rationals; the result must be an
  // integer polynomial.
  const std::size_t n = xs.size();
  std::vector<Rat> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = Rat(ys[i]);
  std::vector<Rat> coef(n);
  coef[0] = dd[0];
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i + k < n; ++i)
      dd[i] = (dd[i + 1] - dd[i]) / Rat(xs[i + k] - xs[i]);
    coef[k] = dd[0];
  }
  // Expand sum_k coef[k] * prod_{j<k}(s - xs[j]).
  std::vector<Rat> poly{coef[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    std::vector<Rat> next(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * Rat(xs[k]);
    }
    next[0] += coef[k];
    poly = std::move(next);
  }
  std::vector<Int> out(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (boost::multiprecision::denominator(poly[i]) != 1)
      throw math_error("interpolate: non-integer coefficient");
    out[i] = boost::multiprecision::numerator(poly[i]);
  }
  return LaurentPoly(0, std::move(out));
}

}  // namespace detail

/// Determinant by evaluation at the fixed points 0, 1, -1, 2, -2, ... and
/// exact interpolation. Deterministic for every thread count.
inline LaurentPoly poly_determinant_eval(PolyMatrix m, std::size_t threads = 1) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw math_error("poly_determinant: matrix not square");
  if (n == 0) return LaurentPoly::one();
  long shift = detail::normalize_rows_to_poly(m);
  long bound = detail::det_degree_bound(m);
  std::vector<Int> xs(static_cast<std::size_t>(bound) + 1);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    long v = static_cast<long>((k + 1) / 2);
    xs[k] = (k % 2 == 1) ? Int(v) : Int(-v);
  }
  std::vector<Int> ys(xs.size());
  parallel_for(xs.size(), threads, [&](std::size_t k) {
    IntMatrix e(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) e.at(i, j) = m.at(i, j).eval(xs[k]);
    ys[k] = int_determinant(std::move(e));
  });
  return detail::interpolate(xs, ys).shifted(shift);
}

/// Determinant by fraction-free Bareiss elimination over Z[s].
inline LaurentPoly poly_determinant_bareiss(PolyMatrix m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw math_error("poly_determinant: matrix not square");
  if (n == 0) return LaurentPoly::one();
  long shift = detail::normalize_rows_to_poly(m);
  int sign = 1;
  LaurentPoly prev = LaurentPoly::one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k).is_zero()) ++p;
      if (p == n) return LaurentPoly::zero();
      for (std::size_t j = k; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
        auto q = exact_divide(num, prev);
        if (!q) throw math_error("poly_determinant_bareiss: inexact division");
        m.at(i, j) = std::move(*q);
      }
      m.at(i, k) = LaurentPoly::zero();
    }
    prev = m.at(k, k);
  }
  LaurentPoly det = m.at(n - 1, n - 1).shifted(shift);
  return sign < 0 ? -det : det;
}

/// Degree-bound threshold below which the evaluation path is preferred.
inline constexpr long kEvalDegreeLimit = 200;

inline LaurentPoly poly_determinant(const PolyMatrix& m, std::size_t threads = 1) {
  PolyMatrix probe = m;
  detail::normalize_rows_to_poly(probe);
  if (detail::det_degree_bound(probe) <= kEvalDegreeLimit)
    return poly_determinant_eval(m, threads);
  return poly_determinant_bareiss(m);
}

namespace detail {

// Enumerates k-subsets of [0, n) in lexicographic order.
inline bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i-- > 0) {
    if (idx[i] + (k - i) < n) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// The order Delta_0 of the module presented by m (rows = relations,
/// columns = generators): gcd of the maximal minors, canonical form.
/// Fewer rows than columns means a free summand survives, so the order is 0.
inline LaurentPoly order_delta0(const PolyMatrix& m, std::size_t threads = 1) {
  if (m.rows() < m.cols()) return LaurentPoly::zero();
  if (m.cols() == 0) return LaurentPoly::one();
  if (m.rows() == m.cols()) return poly_determinant(m, threads).canonical();
  std::vector<std::size_t> idx(m.cols());
  std::iota(idx.begin(), idx.end(), 0);
  LaurentPoly g = LaurentPoly::zero();
  // Running gcd over all maximal minors; a unit gcd divides everything, so
  // enumeration can stop early.
  do {
    LaurentPoly minor = poly_determinant(m.submatrix_rows(idx), threads);
    g = laurent_gcd(g, minor);
    if (g.is_unit()) return LaurentPoly::one();
  } while (detail::next_subset(idx, m.rows()));
  return g.canonical();
}

}  // namespace alexlin
