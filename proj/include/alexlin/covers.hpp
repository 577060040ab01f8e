// Integer homology of the induced covers of branched cyclic covers:
// Smith normal form, twisted torsion numbers, the Mahler-measure growth
// experiment, and the fibered spectral-radius check.
#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "alexlin/alexmod.hpp"

namespace alexlin {

struct SmithForm {
  std::vector<Int> invariant_factors;  // nonzero d_1 | d_2 | ... (may include 1s)
  std::size_t rank = 0;
  std::size_t coker_free_rank = 0;  // cols - rank

  Int torsion_order() const {
    Int t = 1;
    for (const auto& d : invariant_factors) t *= d;
    return t;
  }
};

/// Smith normal form by pivoting on the smallest nonzero entry and reducing
/// until every pivot divides the remaining submatrix. Exact.
inline SmithForm smith_normal_form(IntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithForm out;
  out.coker_free_rank = cols;
  std::size_t k = 0;
  while (k < rows && k < cols) {
    // Smallest nonzero entry of the trailing submatrix becomes the pivot.
    std::size_t pi = k, pj = k;
    bool found = false;
    Int best = 0;
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j) {
        const Int& v = m.at(i, j);
        if (v == 0) continue;
        Int a = int_abs(v);
        if (!found || a < best) {
          best = a;
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    if (pi != k)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(k, j), m.at(pi, j));
    if (pj != k)
      for (std::size_t i = 0; i < rows; ++i) std::swap(m.at(i, k), m.at(i, pj));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (m.at(i, k) == 0) continue;
        Int q = m.at(i, k) / m.at(k, k);
        if (q != 0)
          for (std::size_t j = k; j < cols; ++j) m.at(i, j) -= q * m.at(k, j);
        if (m.at(i, k) != 0) {  // remainder is smaller: make it the pivot
          for (std::size_t j = k; j < cols; ++j) std::swap(m.at(k, j), m.at(i, j));
          clean = false;
        }
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (m.at(k, j) == 0) continue;
        Int q = m.at(k, j) / m.at(k, k);
        if (q != 0)
          for (std::size_t i = k; i < rows; ++i) m.at(i, j) -= q * m.at(i, k);
        if (m.at(k, j) != 0) {
          for (std::size_t i = k; i < rows; ++i) std::swap(m.at(i, k), m.at(i, j));
          clean = false;
        }
      }
      if (!clean) continue;
      // Pivot must divide every remaining entry; if not, pull the offending
      // row up and restart the reduction.
      for (std::size_t i = k + 1; i < rows && clean; ++i)
        for (std::size_t j = k + 1; j < cols && clean; ++j)
          if (m.at(i, j) % m.at(k, k) != 0) {
            for (std::size_t jj = k; jj < cols; ++jj) m.at(k, jj) += m.at(i, jj);
            clean = false;
          }
    }
    ++k;
  }
  out.rank = k;
  out.coker_free_rank = cols - k;
  for (std::size_t i = 0; i < k; ++i) out.invariant_factors.push_back(int_abs(m.at(i, i)));
  return out;
}

/// Boundary matrix of the wrapped 2-complex of the N-fold cover of the
/// rn-fold branched cyclic cover: the twisted Jacobian at period r*n with
/// s set to 1 (indices wrap, no s factors).
inline IntMatrix branched_cover_matrix(const AugmentedGroupSystem& sys, const PeriodicRep& rep,
                                       int n) {
  if (n < 1) throw input_error("branched_cover_matrix: n must be positive");
  if (!sys.meta.knot)
    throw input_error("branched_cover_matrix: input is not declared knot-like (meta knot)");
  AugmentedGroupSystem norm = normalize(sys);
  if (norm.pres.generators.size() != norm.pres.relators.size() + 1)
    throw input_error("branched_cover_matrix: presentation must have deficiency 1");
  KernelPresentation kp = kernel_presentation(norm);
  if (!rep.satisfies(kp))
    throw input_error("branched_cover_matrix: representation mismatch");
  PolyMatrix J = twisted_jacobian(kp, rep, rep.r * n);
  IntMatrix m(J.rows(), J.cols());
  for (std::size_t i = 0; i < J.rows(); ++i)
    for (std::size_t j = 0; j < J.cols(); ++j) {
      const auto& e = J.at(i, j);
      m.at(i, j) = e.is_zero() ? Int(0) : e.shifted(-e.low_degree()).eval(1);
    }
  return m;
}

struct TorsionResult {
  Int torsion = 1;   // order of the torsion subgroup of H_1 of the cover
  long betti = 0;    // its first Betti number
  SmithForm smith;
};

/// b_{rho, r*n}: torsion of H_1 of the N-fold cover of the rn-fold branched
/// cyclic cover, with its Betti number (coker rank minus the N-1 surplus
/// from the coned 0-skeleton).
inline TorsionResult torsion_number(const AugmentedGroupSystem& sys, const PeriodicRep& rep,
                                    int n) {
  IntMatrix m = branched_cover_matrix(sys, rep, n);
  TorsionResult out;
  out.smith = smith_normal_form(std::move(m));
  out.torsion = out.smith.torsion_order();
  out.betti = static_cast<long>(out.smith.coker_free_rank) - (rep.N - 1);
  return out;
}

struct GrowthRow {
  int n = 0;
  Int torsion;
  long betti = 0;
  double torsion_root = 1.0;  // torsion^(1/n)
};

struct GrowthExperiment {
  std::vector<GrowthRow> rows;
  double mahler = 1.0;
  double mahler_bound = 0.0;
  double final_gap = 0.0;     // |b_nmax^(1/nmax) - M|
  double slope = 0.0;         // least-squares slope of log(torsion) against n
  std::vector<int> excluded;  // n with positive Betti number, kept out of the fit
};

/// Torsion growth b_n^(1/n) against the Mahler measure of D. Rows with a
/// positive Betti number are reported but excluded from the slope fit.
inline GrowthExperiment mahler_growth_experiment(const AugmentedGroupSystem& sys,
                                                 const PeriodicRep& rep, int n_max,
                                                 const LaurentPoly& D, std::size_t threads = 1) {
  if (D.is_zero())
    throw input_error("mahler_growth_experiment: D = 0 (vanishing case), no growth to measure");
  if (n_max < 1) throw input_error("mahler_growth_experiment: n_max must be positive");
  GrowthExperiment out;
  MahlerResult mm = mahler_measure(D);
  out.mahler = mm.value;
  out.mahler_bound = mm.error_bound;
  auto log_of = [](const Int& v) {
    if (v <= 1) return 0.0;
    return log(BigFloat(v)).convert_to<double>();
  };
  out.rows.resize(static_cast<std::size_t>(n_max));
  parallel_for(static_cast<std::size_t>(n_max), threads, [&](std::size_t idx) {
    int n = static_cast<int>(idx) + 1;
    TorsionResult t = torsion_number(sys, rep, n);
    GrowthRow row;
    row.n = n;
    row.torsion = t.torsion;
    row.betti = t.betti;
    row.torsion_root = std::exp(log_of(t.torsion) / n);
    out.rows[idx] = std::move(row);
  });
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (const auto& row : out.rows) {
    if (row.betti > 0) {
      out.excluded.push_back(row.n);
      continue;
    }
    double y = log_of(row.torsion);
    sx += row.n;
    sy += y;
    sxx += static_cast<double>(row.n) * row.n;
    sxy += row.n * y;
    ++count;
  }
  if (count >= 2) out.slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  out.final_gap = std::abs(out.rows.back().torsion_root - out.mahler);
  return out;
}

/// Compares max |root of D|^(1/r) with the declared growth rate of
/// conjugation by x (fibered inputs supply it as metadata).
inline CheckResult fibered_spectral_check(const AugmentedGroupSystem& sys, const PeriodicRep& rep,
                                          const LaurentPoly& D) {
  CheckResult c{"fibered_spectral_bound", "max |root of D|^(1/r) <= growth rate", CheckStatus::skipped, ""};
  if (!sys.meta.growth_rate) {
    c.witness = "no growth-rate metadata";
    return c;
  }
  if (D.is_zero()) {
    c.witness = "D = 0";
    return c;
  }
  double gr = *sys.meta.growth_rate;
  double val = 0.0;
  if (D.canonical().span() > 0) {
    ModulusResult mr = max_root_modulus(D);
    val = std::pow(mr.value + mr.error_bound, 1.0 / rep.r);
  }
  const double tol = 1e-9;
  c.status = val <= gr + tol ? CheckStatus::pass : CheckStatus::fail;
  std::ostringstream os;
  os.precision(15);
  os << "max |root|^(1/r) = " << val << " vs growth rate " << gr;
  if (std::abs(val - gr) <= 1e-6) os << " (equality)";
  c.witness = os.str();
  return c;
}

}  // namespace alexlin
