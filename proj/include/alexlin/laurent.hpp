// Exact Laurent polynomials in one variable over arbitrary-precision integers.
//
// A value is (low, coeffs) with coeffs[k] the coefficient of s^(low+k).
// The zero polynomial is the empty coefficient vector. Units of the ring
// Z[s^±1] are ±s^k; canonical form shifts the lowest degree to 0 and makes
// the lowest coefficient positive, so equality of canonical forms is
// equality up to units.
#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "alexlin/bigint.hpp"
#include "alexlin/util.hpp"

namespace alexlin {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long low, std::vector<Int> coeffs) : low_(low), coeffs_(std::move(coeffs)) {
    trim();
  }
  static LaurentPoly zero() { return {}; }
  static LaurentPoly constant(Int c) {
    return LaurentPoly(0, {std::move(c)});
  }
  static LaurentPoly one() { return constant(1); }
  /// c * s^k
  static LaurentPoly monomial(Int c, long k) { return LaurentPoly(k, {std::move(c)}); }
  /// Polynomial from constant-term-first coefficient list.
  static LaurentPoly from_coeffs(std::vector<Int> coeffs) {
    return LaurentPoly(0, std::move(coeffs));
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_unit() const { return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1); }
  long low_degree() const { return low_; }
  long top_degree() const { return low_ + static_cast<long>(coeffs_.size()) - 1; }
  /// Width of the support: top - low. The natural degree notion for a
  /// polynomial defined only up to units. Zero polynomial reports -1.
  long span() const { return is_zero() ? -1 : static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  Int coeff(long degree) const {
    long k = degree - low_;
    if (k < 0 || k >= static_cast<long>(coeffs_.size())) return 0;
    return coeffs_[k];
  }
  Int lead() const { return is_zero() ? Int(0) : coeffs_.back(); }
  Int trail() const { return is_zero() ? Int(0) : coeffs_.front(); }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  /// Deterministic total order (for canonical sorting of outputs).
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.low_ != b.low_) return a.low_ < b.low_;
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
    return false;
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long low = std::min(a.low_, b.low_);
    long top = std::max(a.top_degree(), b.top_degree());
    std::vector<Int> c(static_cast<std::size_t>(top - low + 1));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[a.low_ - low + i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[b.low_ - low + i] += b.coeffs_[i];
    return LaurentPoly(low, std::move(c));
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        if (b.coeffs_[j] != 0) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return LaurentPoly(a.low_ + b.low_, std::move(c));
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  /// Multiply by s^k.
  LaurentPoly shifted(long k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
  }

  LaurentPoly scaled(const Int& c) const {
    if (c == 0) return {};
    LaurentPoly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
  }

  /// Evaluate at an integer point; requires low_degree() >= 0.
  Int eval(const Int& x) const {
    if (is_zero()) return 0;
    if (low_ < 0) throw math_error("LaurentPoly::eval: negative exponents present");
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    for (long k = 0; k < low_; ++k) acc *= x;
    return acc;
  }

  /// Formal derivative d/ds (requires low >= 0).
  LaurentPoly derivative() const {
    if (is_zero()) return {};
    if (low_ < 0) throw math_error("LaurentPoly::derivative: negative exponents present");
    std::vector<Int> c;
    long start = std::max(1L, low_);
    for (long k = start; k <= top_degree(); ++k) c.push_back(coeff(k) * k);
    return LaurentPoly(start - 1, std::move(c));
  }

  Int content() const {
    Int g = 0;
    for (const auto& c : coeffs_) g = int_gcd(g, c);
    return g;
  }

  /// Canonical unit normalization: lowest degree 0, lowest coefficient > 0.
  LaurentPoly canonical() const {
    if (is_zero()) return {};
    LaurentPoly r = *this;
    r.low_ = 0;
    if (r.coeffs_.front() < 0)
      for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  /// Reverse of the coefficient array: f(s) -> f(s^-1) up to a unit.
  LaurentPoly reversed() const {
    LaurentPoly r = *this;
    std::reverse(r.coeffs_.begin(), r.coeffs_.end());
    return r;
  }

  std::string str(const std::string& var = "s") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = low_; k <= top_degree(); ++k) {
      Int c = coeff(k);
      if (c == 0) continue;
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      Int a = int_abs(c);
      if (k == 0) {
        os << a.str();
      } else {
        if (a != 1) os << a.str() << "*";
        os << var;
        if (k != 1) os << "^" << k;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    std::size_t lo = 0;
    while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
    if (lo == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    std::size_t hi = coeffs_.size();
    while (hi > lo && coeffs_[hi - 1] == 0) --hi;
    if (lo > 0 || hi < coeffs_.size()) {
      coeffs_ = std::vector<Int>(coeffs_.begin() + lo, coeffs_.begin() + hi);
      low_ += static_cast<long>(lo);
    }
  }

  long low_ = 0;
  std::vector<Int> coeffs_;
};

/// True iff f(s^-1) equals f(s) up to multiplication by units ±s^i.
inline bool is_reciprocal(const LaurentPoly& f) {
  if (f.is_zero()) return true;
  LaurentPoly c = f.canonical();
  LaurentPoly r = c.reversed().canonical();
  return c == r;
}

namespace detail {

// Internal polynomial normalization: lowest degree 0, primitive, positive
// leading coefficient (distinct from the public Laurent canonical form).
inline LaurentPoly prim_pos_lead(const LaurentPoly& f) {
  if (f.is_zero()) return {};
  Int g = f.content();
  if (f.lead() < 0) g = -g;
  std::vector<Int> c = f.coeffs();
  for (auto& x : c) x /= g;
  return LaurentPoly(0, std::move(c));
}

// Pseudo-remainder of (f, g) as polynomials (low degrees already 0).
inline LaurentPoly pseudo_rem(LaurentPoly f, const LaurentPoly& g) {
  long dg = g.top_degree();
  Int lg = g.lead();
  while (!f.is_zero() && f.top_degree() >= dg) {
    long shift = f.top_degree() - dg;
    Int lf = f.lead();
    f = f.scaled(lg) - g.scaled(lf).shifted(shift);
  }
  return f;
}

}  // namespace detail

/// GCD in Z[s^±1], canonical form. gcd(0,0) = 0.
inline LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b.canonical();
  if (b.is_zero()) return a.canonical();
  Int cont = int_gcd(a.content(), b.content());
  LaurentPoly f = detail::prim_pos_lead(a.canonical());
  LaurentPoly g = detail::prim_pos_lead(b.canonical());
  if (f.top_degree() < g.top_degree()) std::swap(f, g);
  while (!g.is_zero()) {
    LaurentPoly r = detail::pseudo_rem(f, g);
    f = g;
    g = r.is_zero() ? LaurentPoly() : detail::prim_pos_lead(r.canonical());
  }
  return f.scaled(cont).canonical();
}

/// Exact quotient g / f in Z[s^±1] if it exists (up to nothing: exact).
inline std::optional<LaurentPoly> exact_divide(const LaurentPoly& g, const LaurentPoly& f) {
  if (f.is_zero()) return std::nullopt;
  if (g.is_zero()) return LaurentPoly::zero();
  long low_shift = g.low_degree() - f.low_degree();
  LaurentPoly num = g.shifted(-g.low_degree());
  LaurentPoly den = f.shifted(-f.low_degree());
  if (num.top_degree() < den.top_degree()) return std::nullopt;
  // Long division over Q; by Gauss's lemma the quotient is integral iff
  // divisibility holds in Z[s] after matching contents, so we divide with
  // rationals and demand integrality as we go.
  std::vector<Rat> rem(num.coeffs().begin(), num.coeffs().end());
  long dq = num.top_degree() - den.top_degree();
  std::vector<Rat> quot(static_cast<std::size_t>(dq + 1));
  Rat lead(den.lead());
  for (long k = dq; k >= 0; --k) {
    Rat q = rem[static_cast<std::size_t>(k + den.top_degree())] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (long j = 0; j <= den.top_degree(); ++j)
      rem[static_cast<std::size_t>(k + j)] -= q * Rat(den.coeff(j));
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  std::vector<Int> qi(quot.size());
  for (std::size_t i = 0; i < quot.size(); ++i) {
    if (boost::multiprecision::denominator(quot[i]) != 1) return std::nullopt;
    qi[i] = boost::multiprecision::numerator(quot[i]);
  }
  return LaurentPoly(low_shift, std::move(qi));
}

/// True iff f divides g exactly in Z[s^±1]. f | 0 for every f != 0.
inline bool divides(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero()) throw input_error("divides: zero divisor");
  return exact_divide(g, f).has_value();
}

inline LaurentPoly laurent_pow(const LaurentPoly& f, unsigned e) {
  LaurentPoly r = LaurentPoly::one();
  for (unsigned i = 0; i < e; ++i) r *= f;
  return r;
}

}  // namespace alexlin
