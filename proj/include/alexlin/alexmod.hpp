// The twisted Jacobian of a kernel presentation, the Alexander-Lin
// polynomial D_{rho,r}(s), the Jacobian invariant for representations of
// the whole group, and the structural check suite.
#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "alexlin/reps.hpp"
#include "alexlin/roots.hpp"

namespace alexlin {

/// Presentation matrix of the abelianized Crowell group as a module over
/// Z[s^±1], s acting as the shift by `period` (a multiple of rep.r).
/// Rows: relator instances ^i r_v; columns: generators ^i a_m
/// (v, m in [0, period), i in [1, N]). An occurrence of a_u^e in a relator
/// instance contributes e * s^floor(u/period) in column block (u mod period)
/// at the permuted sheet: rho evaluated on the prefix (through the letter
/// itself for inverse letters).
inline PolyMatrix twisted_jacobian(const KernelPresentation& kp, const PeriodicRep& rep,
                                   int period = 0) {
  if (period == 0) period = rep.r;
  if (period % rep.r != 0)
    throw input_error("twisted_jacobian: period must be a multiple of the representation period");
  const int N = rep.N, R = static_cast<int>(kp.templates.size()),
            G = static_cast<int>(kp.base_names.size());
  if (static_cast<int>(rep.table.size()) != G)
    throw input_error("twisted_jacobian: representation does not match the presentation");
  PolyMatrix m(static_cast<std::size_t>(R * period * N), static_cast<std::size_t>(G * period * N));
  m.row_labels.resize(m.rows());
  m.col_labels.resize(m.cols());
  for (int g = 0; g < G; ++g)
    for (int v = 0; v < period; ++v)
      for (int k = 0; k < N; ++k)
        m.col_labels[static_cast<std::size_t>((g * period + v) * N + k)] =
            kp.base_names[static_cast<std::size_t>(g)] + "_" + std::to_string(v) + "@" +
            std::to_string(k + 1);

  for (int ell = 0; ell < R; ++ell) {
    for (int v = 0; v < period; ++v) {
      const long row0 = static_cast<long>((ell * period + v) * N);
      for (int i = 0; i < N; ++i)
        m.row_labels[static_cast<std::size_t>(row0 + i)] =
            "r" + std::to_string(ell + 1) + "_" + std::to_string(v) + "@" + std::to_string(i + 1);
      KernelWord w = shift_kernel_word(kp.templates[static_cast<std::size_t>(ell)], v);
      Permutation prefix = Permutation::identity(N);
      for (const auto& l : w.letters()) {
        const Permutation& img = rep.image(l.gen, l.shift);
        if (l.exp == -1) prefix = prefix.then(img.inverse());
        const long block = floor_mod(l.shift, period);
        const long spow = floor_div(l.shift, period);
        const long col0 = (static_cast<long>(l.gen) * period + block) * N;
        for (int i = 0; i < N; ++i) {
          auto& entry = m.at(static_cast<std::size_t>(row0 + i),
                             static_cast<std::size_t>(col0 + prefix(i)));
          entry += LaurentPoly::monomial(l.exp, spow);
        }
        if (l.exp == 1) prefix = prefix.then(img);
      }
    }
  }
  return m;
}

/// Evaluates a representation of the whole group on a word in the
/// presentation's generators.
inline Permutation evaluate_group_word(const FreeWord& w, const std::vector<Permutation>& images) {
  Permutation acc = Permutation::identity(images.empty() ? 1 : images[0].degree());
  for (const auto& l : w.letters()) {
    const Permutation& p = images.at(static_cast<std::size_t>(l.gen));
    acc = acc.then(l.exp == 1 ? p : p.inverse());
  }
  return acc;
}

/// The Jacobian invariant D_rho(t) for a permutation representation of G
/// itself: Fox derivatives of the relators with respect to every generator
/// except the distinguished one, evaluated by w -> t^deg(w) rho(w), inner
/// parentheses removed, then the gcd of maximal minors.
inline LaurentPoly wada_invariant(const AugmentedGroupSystem& sys,
                                  const std::vector<Permutation>& images,
                                  std::size_t threads = 1) {
  if (images.size() != sys.pres.generators.size())
    throw input_error("wada_invariant: one image per generator required");
  const int N = images[0].degree();
  for (const auto& p : images)
    if (p.degree() != N) throw input_error("wada_invariant: mixed permutation degrees");
  for (const auto& rel : sys.pres.relators)
    if (!evaluate_group_word(rel, images).is_identity())
      throw input_error("wada_invariant: images do not define a homomorphism");

  const auto cols = sys.base_generators();
  const int n_gens = static_cast<int>(sys.pres.generators.size());
  PolyMatrix m(sys.pres.relators.size() * static_cast<std::size_t>(N),
               cols.size() * static_cast<std::size_t>(N));
  for (std::size_t ell = 0; ell < sys.pres.relators.size(); ++ell) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      GroupRingElement d = fox_derivative(sys.pres.relators[ell], cols[j], n_gens);
      for (const auto& [w, c] : d.terms()) {
        Permutation p = evaluate_group_word(w, images);
        long deg = sys.degree(w);
        for (int i = 0; i < N; ++i)
          m.at(ell * static_cast<std::size_t>(N) + static_cast<std::size_t>(i),
               j * static_cast<std::size_t>(N) + static_cast<std::size_t>(p(i))) +=
              LaurentPoly::monomial(c, deg);
      }
    }
  }
  return order_delta0(m, threads);
}

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
  std::string name;
  std::string statement;
  CheckStatus status = CheckStatus::skipped;
  std::string witness;
};

struct InvariantReport {
  LaurentPoly D;
  int N = 1;
  int r = 1;
  long degree = -1;  // span of D; -1 when D = 0
  std::size_t matrix_rows = 0, matrix_cols = 0;
  std::optional<int> orbit_count_T;
  std::optional<Permutation> extension_witness;
  bool extension_tested = false;
  std::vector<CheckResult> checks;

  bool any_failed() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::fail) return true;
    return false;
  }
};

namespace detail {

inline LaurentPoly s_minus_one_power(unsigned e) {
  return laurent_pow(LaurentPoly::from_coeffs({-1, 1}), e);
}

inline std::string status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "FAIL";
    default: return "skipped";
  }
}

}  // namespace detail

/// Runs the structural checks against a computed D. `sys` must be
/// normalized and `rep` verified against its kernel presentation.
inline std::vector<CheckResult> run_checks(const AugmentedGroupSystem& sys,
                                           const KernelPresentation& kp, const PeriodicRep& rep,
                                           const LaurentPoly& D, InvariantReport& report,
                                           std::size_t threads = 1) {
  std::vector<CheckResult> out;
  const int N = rep.N, r = rep.r;
  const LaurentPoly Dc = D.canonical();

  // (a) Delta^(r) divides D.
  {
    CheckResult c{"divides_delta_r", "the r-th power transform of the Alexander polynomial divides D", CheckStatus::skipped, ""};
    LaurentPoly delta = untwisted_alexander(sys, threads);
    if (delta.is_zero()) {
      c.witness = "Alexander polynomial is zero";
      c.status = D.is_zero() ? CheckStatus::pass : CheckStatus::fail;
    } else {
      LaurentPoly dr = power_transform(delta, static_cast<unsigned>(r), threads);
      c.status = divides(dr, Dc) ? CheckStatus::pass : CheckStatus::fail;
      c.witness = "Delta^(" + std::to_string(r) + ") = " + dr.str();
    }
    out.push_back(std::move(c));
  }

  // (b) Reciprocality for declared 3-manifold inputs.
  {
    CheckResult c{"reciprocal", "D is reciprocal", CheckStatus::skipped, ""};
    if (!sys.meta.knot) {
      c.witness = "no 3-manifold metadata";
    } else {
      c.status = is_reciprocal(Dc) ? CheckStatus::pass : CheckStatus::fail;
      if (c.status == CheckStatus::fail) c.witness = "coefficients are not palindromic: " + Dc.str();
    }
    out.push_back(std::move(c));
  }

  // (c) (s-1)^(N+T-2) divides D.
  {
    CheckResult c{"s_minus_one_power", "(s-1)^(N+T-2) divides D", CheckStatus::skipped, ""};
    if (!sys.meta.knot || sys.longitude_kind == LongitudeKind::none) {
      c.witness = "needs 3-manifold metadata and a longitude";
    } else {
      std::optional<int> T;
      if (sys.longitude_kind == LongitudeKind::word) {
        std::vector<int> kernel_index(sys.pres.generators.size(), -1);
        int k = 0;
        for (std::size_t g = 0; g < sys.pres.generators.size(); ++g)
          if (static_cast<int>(g) != sys.distinguished) kernel_index[g] = k++;
        KernelWord lw = schreier_rewrite(sys.longitude, sys.distinguished, sys.epsilon, kernel_index);
        T = rep.evaluate(lw).orbit_count();
      } else if (rep.image_is_abelian()) {
        // Longitude declared inside [K,K]: an abelian image kills it.
        T = N;
      }
      if (!T) {
        c.witness = "longitude declared in [K,K] but the image is not abelian";
      } else {
        report.orbit_count_T = *T;
        int e = N + *T - 2;
        c.statement = "(s-1)^" + std::to_string(e) + " divides D (N=" + std::to_string(N) +
                      ", T=" + std::to_string(*T) + ")";
        c.status = (e <= 0 || divides(detail::s_minus_one_power(static_cast<unsigned>(e)), Dc))
                       ? CheckStatus::pass
                       : CheckStatus::fail;
      }
    }
    out.push_back(std::move(c));
  }

  // (d) When rho extends over G: D = Delta_rho^(r) * (s-1)^(N-1), where
  // Delta_rho is the order of the induced module of the extension. The
  // extension's Jacobian invariant W(t) carries an extra factor
  // det(t*X - I)/(t-1) from the coned 0-skeleton, so
  // Delta_rho = W * (t-1) / det(t*X - I), and independently D = W^(r).
  {
    CheckResult c{"extension_factorization",
                  "when rho extends over G, D factors through the extension's invariant",
                  CheckStatus::skipped, ""};
    if (N > 8) {
      c.witness = "extension search not attempted (N > 8)";
    } else {
      report.extension_tested = true;
      auto X = extends_over_G(rep);
      if (!X) {
        c.witness = "representation does not extend over G";
      } else {
        report.extension_witness = X;
        Permutation xr = Permutation::identity(N);
        for (int k = 0; k < r; ++k) xr = xr.then(*X);
        if (!xr.is_identity()) {
          c.witness = "extends with X = " + X->str() +
                      ", but X^r != 1: induced module structure is incompatible with the shift";
        } else {
          std::vector<Permutation> images(sys.pres.generators.size());
          images[static_cast<std::size_t>(sys.distinguished)] = *X;
          {
            int k = 0;
            for (std::size_t g = 0; g < sys.pres.generators.size(); ++g)
              if (static_cast<int>(g) != sys.distinguished)
                images[g] = rep.table[static_cast<std::size_t>(k++)][0];
          }
          LaurentPoly W = wada_invariant(sys, images, threads);
          // det(t*X - I) up to a unit: product of (t^c - 1) over cycles of X.
          LaurentPoly char_x = LaurentPoly::one();
          {
            int moved = 0;
            for (const auto& cyc : X->cycles()) {
              std::vector<Int> cf(cyc.size() + 1);
              cf[0] = -1;
              cf[cyc.size()] = 1;
              char_x *= LaurentPoly(0, std::move(cf));
              moved += static_cast<int>(cyc.size());
            }
            for (int k = 0; k < N - moved; ++k) char_x *= LaurentPoly::from_coeffs({-1, 1});
          }
          bool ok = true;
          std::string why;
          if (W.is_zero()) {
            ok = Dc.is_zero();
            why = "extension invariant W = 0";
          } else {
            LaurentPoly lhs = power_transform(W, static_cast<unsigned>(r), threads);
            if (lhs != Dc) {
              ok = false;
              why = "W^(r) = " + lhs.str() + " differs from D";
            } else {
              auto delta_kl = exact_divide((W * LaurentPoly::from_coeffs({-1, 1})).canonical(),
                                           char_x.canonical());
              if (!delta_kl) {
                ok = false;
                why = "det(tX - I)/(t-1) does not divide W = " + W.str("t");
              } else {
                LaurentPoly rhs =
                    (power_transform(delta_kl->canonical(), static_cast<unsigned>(r), threads) *
                     detail::s_minus_one_power(static_cast<unsigned>(N - 1)))
                        .canonical();
                ok = rhs == Dc;
                why = "extends with X = " + X->str() + "; induced invariant = " +
                      delta_kl->canonical().str("t");
                if (!ok) why += "; expected D = " + rhs.str();
              }
            }
          }
          c.status = ok ? CheckStatus::pass : CheckStatus::fail;
          c.witness = why;
        }
      }
    }
    out.push_back(std::move(c));
  }

  // (e) HNN degree bound: deg D <= N * rk(U).
  {
    CheckResult c{"hnn_degree_bound", "deg D <= N * rk(U)", CheckStatus::skipped, ""};
    if (!sys.hnn) {
      c.witness = "no HNN data";
    } else {
      long bound = static_cast<long>(N) * static_cast<long>(sys.hnn->amalgamated.size());
      c.statement = "deg D <= " + std::to_string(bound) + " (N * rk U)";
      if (D.is_zero()) {
        c.status = CheckStatus::pass;
        c.witness = "D = 0";
      } else {
        c.status = Dc.span() <= bound ? CheckStatus::pass : CheckStatus::fail;
        c.witness = "deg D = " + std::to_string(Dc.span());
      }
    }
    out.push_back(std::move(c));
  }

  // (f) Genus degree bound: deg D <= 2 * N * genus, equality when fibered.
  {
    CheckResult c{"genus_degree_bound", "deg D <= 2 * N * genus", CheckStatus::skipped, ""};
    if (!sys.meta.genus) {
      c.witness = "no genus metadata";
    } else {
      long bound = 2L * N * *sys.meta.genus;
      c.statement = "deg D <= " + std::to_string(bound) + " (2 * N * genus)" +
                    (sys.meta.fibered ? ", with equality (fibered)" : "");
      if (D.is_zero()) {
        c.status = sys.meta.fibered ? CheckStatus::fail : CheckStatus::pass;
        c.witness = "D = 0";
      } else {
        long deg = Dc.span();
        bool ok = sys.meta.fibered ? (deg == bound) : (deg <= bound);
        c.status = ok ? CheckStatus::pass : CheckStatus::fail;
        c.witness = "deg D = " + std::to_string(deg);
      }
    }
    out.push_back(std::move(c));
  }

  // (g) Root-modulus bound for abelian-image representations.
  {
    CheckResult c{"abelian_root_bound",
                  "for abelian-image representations, max |root|^(1/r) <= M^(2n)",
                  CheckStatus::skipped, ""};
    if (!rep.image_is_abelian()) {
      c.witness = "image is not abelian";
    } else if (D.is_zero()) {
      c.witness = "D = 0";
    } else if (Dc.span() == 0) {
      c.status = CheckStatus::pass;
      c.witness = "D is constant (no roots)";
    } else {
      std::size_t max_len = 0;
      for (const auto& rel : sys.pres.relators) max_len = std::max(max_len, rel.length());
      const std::size_t n = sys.base_generators().size();
      double bound = std::pow(static_cast<double>(max_len), 2.0 * static_cast<double>(n));
      ModulusResult mr = max_root_modulus(Dc);
      double val = std::pow(mr.value + mr.error_bound, 1.0 / r);
      c.statement = "max |root|^(1/r) <= " + std::to_string(bound) + " (max relator length " +
                    std::to_string(max_len) + "^(2*" + std::to_string(n) + "))";
      c.status = val <= bound * (1 + 1e-12) ? CheckStatus::pass : CheckStatus::fail;
      std::ostringstream os;
      os.precision(12);
      os << "max |root|^(1/r) = " << val;
      c.witness = os.str();
    }
    out.push_back(std::move(c));
  }

  // (h) Vanishing: a non-transitive U_v forces D = 0.
  {
    CheckResult c{"hnn_vanishing", "if some U_v acts non-transitively then D = 0",
                  CheckStatus::skipped, ""};
    if (!sys.hnn || sys.hnn->amalgamated.empty()) {
      c.witness = "no HNN amalgamated-subgroup data";
    } else {
      std::optional<int> bad_v;
      for (int v = 0; v < r && !bad_v; ++v) {
        // Orbits of the subgroup generated by the shifted U generators.
        std::vector<int> parent(static_cast<std::size_t>(N));
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int i) {
          while (parent[static_cast<std::size_t>(i)] != i) i = parent[static_cast<std::size_t>(i)];
          return i;
        };
        for (const auto& u : sys.hnn->amalgamated) {
          Permutation p = rep.evaluate(shift_kernel_word(u, v));
          for (int i = 0; i < N; ++i) {
            int a = find(i), b = find(p(i));
            if (a != b) parent[static_cast<std::size_t>(a)] = b;
          }
        }
        int orbits = 0;
        for (int i = 0; i < N; ++i)
          if (find(i) == i) ++orbits;
        if (orbits > 1) bad_v = v;
      }
      if (!bad_v) {
        c.witness = "U_v acts transitively for every v";
      } else {
        c.statement = "U_" + std::to_string(*bad_v) + " acts non-transitively, so D = 0";
        c.status = D.is_zero() ? CheckStatus::pass : CheckStatus::fail;
        if (c.status == CheckStatus::fail) c.witness = "D = " + Dc.str();
      }
    }
    out.push_back(std::move(c));
  }

  return out;
}

struct PipelineOptions {
  bool allow_reducible = false;
  bool with_checks = true;
  std::size_t threads = 1;
};

/// Full pipeline: normalize, rewrite the kernel presentation, verify the
/// representation, assemble the twisted Jacobian, and take the order.
inline InvariantReport alexander_lin(const AugmentedGroupSystem& sys, const PeriodicRep& rep,
                                     const PipelineOptions& opt = {}) {
  AugmentedGroupSystem norm = normalize(sys);
  KernelPresentation kp = kernel_presentation(norm);
  if (rep.table.size() != kp.base_names.size())
    throw input_error("alexander_lin: representation has wrong number of generators");
  if (!rep.satisfies(kp))
    throw input_error("alexander_lin: table does not satisfy the relator instances");
  if (!opt.allow_reducible && !is_transitive(rep))
    throw input_error("alexander_lin: representation is not transitive (pass allow_reducible to accept)");

  InvariantReport report;
  report.N = rep.N;
  report.r = rep.r;
  PolyMatrix J = twisted_jacobian(kp, rep);
  report.matrix_rows = J.rows();
  report.matrix_cols = J.cols();
  report.D = order_delta0(J, opt.threads);
  report.degree = report.D.span();
  if (opt.with_checks) report.checks = run_checks(norm, kp, rep, report.D, report, opt.threads);
  return report;
}

}  // namespace alexlin
