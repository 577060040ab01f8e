// Test-only independent oracles. These deliberately avoid the code paths
// they are used to verify: the Fox derivative here follows the defining
// recursion with word splitting, enumeration is exhaustive over all
// assignments, torsion numbers come from resultants against cyclotomic
// polynomials, and the power transform is reconstructed from numeric roots.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "alexlin/alexlin.hpp"

namespace oracle {

using namespace alexlin;

inline std::string corpus_path(const std::string& name) {
  return std::string(ALEXLIN_CORPUS_DIR) + "/" + name;
}

inline AugmentedGroupSystem load_corpus(const std::string& name) {
  return parse_dsl(read_file(corpus_path(name)));
}

inline PeriodicRep load_corpus_rep(const std::string& name, const AugmentedGroupSystem& sys) {
  json j = json::parse(read_file(corpus_path(name)));
  return rep_from_json(j, normalize(sys).base_names());
}

/// Fox derivative by the defining recursion: base cases on single letters
/// and d(uv)/dg = du/dg + u dv/dg with u, v a split of the word.
inline GroupRingElement naive_fox(const FreeWord& w, int gen) {
  const auto& ls = w.letters();
  if (ls.empty()) return GroupRingElement::zero();
  if (ls.size() == 1) {
    GroupRingElement e;
    if (ls[0].gen == gen) {
      if (ls[0].exp == 1)
        e.add(FreeWord(), 1);
      else
        e.add(FreeWord::generator(gen, -1), -1);
    }
    return e;
  }
  std::size_t half = ls.size() / 2;
  FreeWord u(std::vector<Letter>(ls.begin(), ls.begin() + static_cast<long>(half)));
  FreeWord v(std::vector<Letter>(ls.begin() + static_cast<long>(half), ls.end()));
  return naive_fox(u, gen) + naive_fox(v, gen).left_mul(u);
}

inline FreeWord random_word(std::mt19937_64& rng, int n_gens, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> gen(0, n_gens - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<Letter> ls;
  std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) ls.push_back(Letter{gen(rng), sgn(rng) ? 1 : -1});
  return FreeWord(std::move(ls));
}

inline LaurentPoly random_poly(std::mt19937_64& rng, long max_deg, long max_coeff) {
  std::uniform_int_distribution<long> deg(0, max_deg);
  std::uniform_int_distribution<long> coeff(-max_coeff, max_coeff);
  std::vector<Int> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coeff(rng);
  if (c.back() == 0) c.back() = 1;
  return LaurentPoly(0, std::move(c));
}

/// Exhaustive enumeration over every assignment of table entries, checking
/// all relator instances directly. No pruning, no deduplication.
inline std::vector<PeriodicRep> brute_force_enumerate(const KernelPresentation& kp, int N, int r,
                                                      bool require_transitive = true) {
  const auto perms = detail::all_permutations(N);
  const int n_vars = static_cast<int>(kp.base_names.size()) * r;
  std::vector<PeriodicRep> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(n_vars), 0);
  while (true) {
    PeriodicRep rep;
    rep.N = N;
    rep.r = r;
    rep.table.assign(kp.base_names.size(),
                     std::vector<Permutation>(static_cast<std::size_t>(r)));
    for (int v = 0; v < n_vars; ++v)
      rep.table[static_cast<std::size_t>(v / r)][static_cast<std::size_t>(v % r)] =
          perms[idx[static_cast<std::size_t>(v)]];
    bool ok = true;
    for (const auto& tmpl : kp.templates)
      for (int v = 0; v < r && ok; ++v)
        ok = rep.evaluate(shift_kernel_word(tmpl, v)).is_identity();
    if (ok && (!require_transitive || is_transitive(rep))) out.push_back(std::move(rep));
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == perms.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

/// The n-th cyclotomic polynomial, computed by exact division of t^n - 1.
inline LaurentPoly cyclotomic(int n) {
  std::vector<Int> c(static_cast<std::size_t>(n) + 1);
  c[0] = -1;
  c[static_cast<std::size_t>(n)] = 1;
  LaurentPoly f(0, std::move(c));
  for (int d = 1; d < n; ++d)
    if (n % d == 0) f = *exact_divide(f, cyclotomic(d));
  return f;
}

/// Fox's torsion formula: |prod over j in [1, n-1] of Delta(zeta_n^j)|
/// restricted to the nonvanishing factors, evaluated exactly as a product
/// of resultants against cyclotomic polynomials.
inline Int torsion_by_resultants(const LaurentPoly& delta, int n) {
  LaurentPoly d = delta.canonical();
  Int b = 1;
  for (int k = 2; k <= n; ++k) {
    if (n % k != 0) continue;
    LaurentPoly phi = cyclotomic(k);
    if (divides(phi, d)) continue;  // vanishing factor, excluded
    b *= int_abs(resultant(d, phi));
  }
  return b;
}

/// Power transform reconstructed from certified numeric roots: the r-th
/// powers of the roots, expanded and rounded to integers.
inline LaurentPoly numeric_power_transform(const LaurentPoly& f, unsigned r) {
  LaurentPoly p = f.canonical();
  const long d = p.span();
  std::vector<BigComplex> roots;
  for (const auto& cr : certified_roots(p)) roots.push_back(cr.value);
  if (static_cast<long>(roots.size()) != d)
    throw math_error("numeric_power_transform: oracle needs a squarefree input");
  std::vector<BigComplex> coeffs{BigComplex(1)};
  for (const auto& z : roots) {
    BigComplex zr(1);
    for (unsigned k = 0; k < r; ++k) zr *= z;
    std::vector<BigComplex> next(coeffs.size() + 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= coeffs[i] * zr;
    }
    coeffs = std::move(next);
  }
  Int lead_pow = boost::multiprecision::pow(p.lead(), r);
  std::vector<Int> out(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    BigFloat re = (coeffs[i] * BigFloat(lead_pow)).real();
    Int rounded = static_cast<Int>(boost::multiprecision::round(re).convert_to<boost::multiprecision::cpp_int>());
    out[i] = rounded;
  }
  return LaurentPoly(0, std::move(out)).canonical();
}

}  // namespace oracle
