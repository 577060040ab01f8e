// Resultants and root-power transforms of integer polynomials, plus an
// exact product-of-cyclotomics test and Yun squarefree decomposition.
#pragma once

#include <set>
#include <vector>

#include "alexlin/laurent.hpp"
#include "alexlin/polymatrix.hpp"

namespace alexlin {

/// Resultant of two nonzero integer polynomials (Sylvester determinant).
inline Int resultant(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() || g.is_zero()) throw input_error("resultant: zero polynomial");
  LaurentPoly a = f.shifted(-f.low_degree());
  LaurentPoly b = g.shifted(-g.low_degree());
  const long da = a.top_degree(), db = b.top_degree();
  if (da == 0) return boost::multiprecision::pow(a.lead(), static_cast<unsigned>(db));
  if (db == 0) return boost::multiprecision::pow(b.lead(), static_cast<unsigned>(da));
  const std::size_t n = static_cast<std::size_t>(da + db);
  IntMatrix s(n, n);
  for (long i = 0; i < db; ++i)
    for (long j = 0; j <= da; ++j) s.at(i, i + j) = a.coeff(da - j);
  for (long i = 0; i < da; ++i)
    for (long j = 0; j <= db; ++j) s.at(db + i, i + j) = b.coeff(db - j);
  return int_determinant(std::move(s));
}

/// f^(r): the polynomial whose roots are the r-th powers of the roots of f,
/// with leading coefficient lead(f)^r; computed exactly as a resultant in t
/// of f(t) and t^r - s, then unit-normalized.
inline LaurentPoly power_transform(const LaurentPoly& f, unsigned r, std::size_t threads = 1) {
  if (f.is_zero()) throw input_error("power_transform: zero polynomial");
  if (r == 0) throw input_error("power_transform: r must be positive");
  LaurentPoly a = f.canonical();
  const long d = a.span();
  if (d == 0 || r == 1) {
    if (r == 1) return a;
    std::vector<Int> c{boost::multiprecision::pow(a.lead(), r)};
    return LaurentPoly(0, std::move(c)).canonical();
  }
  // Sylvester matrix of (f(t), t^r - s) over Z[s]: r rows of f-coefficients
  // and d rows of the coefficients (1, 0, ..., 0, -s).
  const std::size_t n = static_cast<std::size_t>(d) + r;
  PolyMatrix m(n, n);
  for (unsigned i = 0; i < r; ++i)
    for (long j = 0; j <= d; ++j) m.at(i, i + static_cast<std::size_t>(j)) = LaurentPoly::constant(a.coeff(d - j));
  for (long i = 0; i < d; ++i) {
    m.at(r + static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = LaurentPoly::one();
    m.at(r + static_cast<std::size_t>(i), static_cast<std::size_t>(i) + r) =
        LaurentPoly::monomial(-1, 1);
  }
  return poly_determinant(m, threads).canonical();
}

/// Yun squarefree decomposition of a nonzero integer polynomial:
/// f = content * prod factor[k]^(k+1) with each factor squarefree,
/// pairwise coprime, primitive, positive leading coefficient.
struct SquarefreeDecomposition {
  Int content = 1;
  std::vector<LaurentPoly> factors;  // factors[k] has multiplicity k+1
};

inline SquarefreeDecomposition squarefree_decompose(const LaurentPoly& f) {
  if (f.is_zero()) throw input_error("squarefree_decompose: zero polynomial");
  auto div = [](const LaurentPoly& a, const LaurentPoly& b) {
    auto q = exact_divide(a, b);
    if (!q) throw math_error("squarefree_decompose: inexact division");
    return *q;
  };
  SquarefreeDecomposition out;
  LaurentPoly p = f.canonical();
  out.content = p.content();
  if (p.lead() < 0) out.content = -out.content;
  p = detail::prim_pos_lead(p);
  if (p.span() == 0) return out;
  LaurentPoly dp = p.derivative();
  LaurentPoly g = detail::prim_pos_lead(laurent_gcd(p, dp));
  LaurentPoly w = div(p, g);
  LaurentPoly y = div(dp, g);
  LaurentPoly z = y - w.derivative();
  while (w.span() > 0) {
    LaurentPoly q = detail::prim_pos_lead(laurent_gcd(w, z));
    out.factors.push_back(q);
    w = div(w, q);
    y = div(z, q);
    z = y - w.derivative();
  }
  while (!out.factors.empty() && out.factors.back().span() == 0 &&
         out.factors.back().lead() == 1)
    out.factors.pop_back();
  return out;
}

namespace detail {

// One Graeffe step: returns g with g(s^2) = ±f(s)f(-s), i.e. the roots of g
// are the squares of the roots of f; sign-normalized to positive lead.
inline LaurentPoly graeffe_step(const LaurentPoly& f) {
  std::vector<Int> c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (i % 2 == 1) c[i] = -c[i];
  LaurentPoly h = f * LaurentPoly(0, std::move(c));
  std::vector<Int> g;
  for (long k = 0; k <= h.top_degree(); k += 2) g.push_back(h.coeff(k));
  LaurentPoly out(0, std::move(g));
  if (out.lead() < 0) out = -out;
  return out;
}

inline Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (long i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

}  // namespace detail

/// Exact test: is f, up to a unit ±s^k, a product of cyclotomic polynomials?
/// (Equivalently, Mahler measure exactly 1.) Uses the Graeffe iteration with
/// Kronecker's theorem: a product of cyclotomics keeps all iterates inside
/// binomial coefficient bounds and eventually revisits a state, while any
/// other polynomial blows past the bounds.
inline bool is_cyclotomic_product(const LaurentPoly& f) {
  if (f.is_zero()) throw input_error("is_cyclotomic_product: zero polynomial");
  LaurentPoly p = f.canonical();
  if (p.span() == 0) return p.lead() == 1;
  if (int_abs(p.lead()) != 1 || int_abs(p.trail()) != 1) return false;
  if (p.content() != 1) return false;
  if (p.lead() < 0) p = -p;
  const long d = p.span();
  std::set<std::vector<Int>> seen;
  while (true) {
    for (long k = 0; k <= d; ++k)
      if (int_abs(p.coeff(k)) > detail::binomial(d, k)) return false;
    if (!seen.insert(p.coeffs()).second) return true;
    p = detail::graeffe_step(p);
  }
}

}  // namespace alexlin
