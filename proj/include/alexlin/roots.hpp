// Numeric root finding with certified inclusion radii, and the Mahler
// measure M(f) = |lead| * prod max(|root|, 1) with a reported error bound.
//
// Roots are located by Aberth-Ehrlich iteration in 100-digit complex
// arithmetic on the squarefree factors of f. After convergence each
// approximation z_j gets the radius d*|f(z_j)/f'(z_j)|, which always
// contains the nearest true root; once the disks are pairwise disjoint
// they contain exactly one root each, giving rigorous modulus intervals
// (up to the rounding slop of the 100-digit evaluation, absorbed into a
// generous safety factor).
#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <vector>

#include "alexlin/transforms.hpp"

namespace alexlin {

using BigFloat = boost::multiprecision::cpp_bin_float_100;
using BigComplex = boost::multiprecision::cpp_complex_100;

struct CertifiedRoot {
  BigComplex value;
  BigFloat radius;  // a true root lies within this distance
};

namespace detail {

inline BigComplex eval_at(const std::vector<BigFloat>& coeffs, const BigComplex& z) {
  BigComplex acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace detail

/// Roots of a squarefree integer polynomial with certified radii.
/// Throws math_error if the iteration fails to produce disjoint disks.
inline std::vector<CertifiedRoot> certified_roots(const LaurentPoly& f) {
  LaurentPoly p = f.canonical();
  const long d = p.span();
  if (d <= 0) return {};
  std::vector<BigFloat> c(static_cast<std::size_t>(d) + 1), dc(static_cast<std::size_t>(d));
  for (long k = 0; k <= d; ++k) c[static_cast<std::size_t>(k)] = BigFloat(p.coeff(k));
  for (long k = 1; k <= d; ++k) dc[static_cast<std::size_t>(k - 1)] = BigFloat(p.coeff(k) * k);

  // Cauchy upper bound for root moduli; initial points on a spiral.
  BigFloat maxratio = 0;
  for (long k = 0; k < d; ++k) {
    BigFloat r = abs(c[static_cast<std::size_t>(k)]) / abs(c[static_cast<std::size_t>(d)]);
    if (r > maxratio) maxratio = r;
  }
  BigFloat radius = 1 + maxratio;
  std::vector<BigComplex> z(static_cast<std::size_t>(d));
  const BigFloat pi = 4 * atan(BigFloat(1));
  for (long j = 0; j < d; ++j) {
    BigFloat ang = 2 * pi * (BigFloat(j) * BigFloat("0.6180339887498949") + BigFloat("0.3"));
    BigFloat rad = radius * (BigFloat("0.4") + BigFloat("0.5") * (BigFloat(j) + 1) / BigFloat(d));
    z[static_cast<std::size_t>(j)] = BigComplex(rad * cos(ang), rad * sin(ang));
  }

  const BigFloat tol("1e-70");
  for (int iter = 0; iter < 2000; ++iter) {
    BigFloat worst = 0;
    for (long j = 0; j < d; ++j) {
      auto& zj = z[static_cast<std::size_t>(j)];
      BigComplex fz = detail::eval_at(c, zj);
      BigComplex dfz = detail::eval_at(dc, zj);
      BigComplex newton = (dfz == BigComplex(0)) ? BigComplex(0) : fz / dfz;
      BigComplex sum = 0;
      for (long k = 0; k < d; ++k)
        if (k != j) sum += BigComplex(1) / (zj - z[static_cast<std::size_t>(k)]);
      BigComplex denom = BigComplex(1) - newton * sum;
      BigComplex w = (denom == BigComplex(0)) ? newton : newton / denom;
      zj -= w;
      BigFloat rel = abs(w) / (1 + abs(zj));
      if (rel > worst) worst = rel;
    }
    if (worst < tol) break;
  }

  std::vector<CertifiedRoot> out(static_cast<std::size_t>(d));
  for (long j = 0; j < d; ++j) {
    const auto& zj = z[static_cast<std::size_t>(j)];
    BigComplex fz = detail::eval_at(c, zj);
    BigComplex dfz = detail::eval_at(dc, zj);
    if (dfz == BigComplex(0)) throw math_error("certified_roots: derivative vanished at approximation");
    // Nearest-root bound from f'/f = sum 1/(z - root), with slack for the
    // rounding of the 100-digit evaluation.
    BigFloat rad = 4 * BigFloat(d) * abs(fz / dfz) + BigFloat("1e-85") * (1 + abs(zj));
    out[static_cast<std::size_t>(j)] = CertifiedRoot{zj, rad};
  }
  for (long i = 0; i < d; ++i)
    for (long j = i + 1; j < d; ++j) {
      BigFloat dist = abs(out[static_cast<std::size_t>(i)].value - out[static_cast<std::size_t>(j)].value);
      if (dist <= out[static_cast<std::size_t>(i)].radius + out[static_cast<std::size_t>(j)].radius)
        throw math_error("certified_roots: inclusion disks overlap (no convergence)");
    }
  return out;
}

struct MahlerResult {
  double value = 1.0;
  double error_bound = 0.0;
};

/// Mahler measure with a certified error bound. Exact on the content and
/// leading coefficient; root moduli carry the inclusion-disk widths.
inline MahlerResult mahler_measure(const LaurentPoly& f) {
  if (f.is_zero()) throw input_error("mahler_measure: zero polynomial");
  SquarefreeDecomposition dec = squarefree_decompose(f);
  BigFloat lo = abs(BigFloat(dec.content));
  BigFloat hi = lo;
  for (std::size_t k = 0; k < dec.factors.size(); ++k) {
    const auto& q = dec.factors[k];
    if (q.span() <= 0) continue;
    unsigned mult = static_cast<unsigned>(k + 1);
    BigFloat flo = BigFloat(int_abs(q.lead()));
    BigFloat fhi = flo;
    for (const auto& root : certified_roots(q)) {
      BigFloat m = abs(root.value);
      BigFloat a = m - root.radius, b = m + root.radius;
      if (a < 1) a = 1;
      if (b < 1) b = 1;
      flo *= a;
      fhi *= b;
    }
    for (unsigned i = 0; i < mult; ++i) {
      lo *= flo;
      hi *= fhi;
    }
  }
  MahlerResult r;
  r.value = ((lo + hi) / 2).convert_to<double>();
  r.error_bound = ((hi - lo) / 2).convert_to<double>() + 1e-13 * r.value;
  return r;
}

struct ModulusResult {
  double value = 0.0;
  double error_bound = 0.0;
};

/// Maximum modulus over all roots of f (0 for constants), with bound.
inline ModulusResult max_root_modulus(const LaurentPoly& f) {
  if (f.is_zero()) throw input_error("max_root_modulus: zero polynomial");
  SquarefreeDecomposition dec = squarefree_decompose(f);
  BigFloat lo = 0, hi = 0;
  bool any = false;
  for (const auto& q : dec.factors) {
    if (q.span() <= 0) continue;
    for (const auto& root : certified_roots(q)) {
      BigFloat m = abs(root.value);
      if (!any || m - root.radius > lo) lo = m - root.radius;
      if (!any || m + root.radius > hi) hi = m + root.radius;
      any = true;
    }
  }
  ModulusResult r;
  if (!any) return r;
  r.value = ((lo + hi) / 2).convert_to<double>();
  r.error_bound = ((hi - lo) / 2).convert_to<double>() + 1e-13 * r.value;
  return r;
}

}  // namespace alexlin
