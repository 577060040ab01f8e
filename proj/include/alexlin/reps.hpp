// Periodic permutation representations of the kernel: evaluation, the
// shift map sigma, enumeration of period-r points, the mod-p circulant
// construction for one-generator systems, extension over G, and orbits.
//
// Permutations act on the right: i -> pi(i), and a product u*v acts as
// "u then v", matching the permutation-matrix convention P(u)P(v).
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "alexlin/groups.hpp"
#include "alexlin/transforms.hpp"

namespace alexlin {

class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int n) {
    Permutation p;
    p.img_.resize(static_cast<std::size_t>(n));
    std::iota(p.img_.begin(), p.img_.end(), 0);
    return p;
  }
  /// From 0-based image list.
  static Permutation from_images(std::vector<int> images) {
    Permutation p;
    p.img_ = std::move(images);
    std::vector<bool> seen(p.img_.size(), false);
    for (int v : p.img_) {
      if (v < 0 || v >= static_cast<int>(p.img_.size()) || seen[static_cast<std::size_t>(v)])
        throw input_error("Permutation: not a bijection");
      seen[static_cast<std::size_t>(v)] = true;
    }
    return p;
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return img_; }

  /// this then q.
  Permutation then(const Permutation& q) const {
    Permutation r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
      r.img_[i] = q.img_[static_cast<std::size_t>(img_[i])];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) r.img_[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
    return r;
  }

  /// Conjugate x -> c^-1 * this * c in "then" order: i -> c(this(c^-1(i))).
  Permutation conjugated_by(const Permutation& c) const {
    return c.then(*this).then(c.inverse());
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != static_cast<int>(i)) return false;
    return true;
  }

  /// Cycles of length >= 2, 1-based, each starting at its least element.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i] || img_[i] == static_cast<int>(i)) continue;
      std::vector<int> cyc;
      int j = static_cast<int>(i);
      while (!seen[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = true;
        cyc.push_back(j + 1);
        j = img_[static_cast<std::size_t>(j)];
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  /// Orbit count of the cyclic group this generates (cycles + fixed points).
  int orbit_count() const {
    int moved = 0, ncyc = 0;
    for (const auto& c : cycles()) {
      moved += static_cast<int>(c.size());
      ++ncyc;
    }
    return degree() - moved + ncyc;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::string str() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cs) {
      os << "(";
      for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
      os << ")";
    }
    return os.str();
  }

 private:
  std::vector<int> img_;
};

/// A representation of the kernel into S_N with period r: the image of
/// a_v depends only on v mod r.
struct PeriodicRep {
  int N = 1;
  int r = 1;
  // table[g][v mod r] = image of the kernel generator g at shift v.
  std::vector<std::vector<Permutation>> table;

  static PeriodicRep trivial(int n_base_gens) {
    PeriodicRep rep;
    rep.table.assign(static_cast<std::size_t>(n_base_gens), {Permutation::identity(1)});
    return rep;
  }

  const Permutation& image(int gen, long shift) const {
    return table[static_cast<std::size_t>(gen)]
                [static_cast<std::size_t>(floor_mod(shift, r))];
  }

  Permutation evaluate(const KernelWord& w) const {
    Permutation acc = Permutation::identity(N);
    for (const auto& l : w.letters()) {
      const Permutation& p = image(l.gen, l.shift);
      acc = acc.then(l.exp == 1 ? p : p.inverse());
    }
    return acc;
  }

  bool satisfies(const KernelPresentation& kp) const {
    if (kp.base_names.size() != table.size()) return false;
    for (const auto& tmpl : kp.templates)
      for (int v = 0; v < r; ++v)
        if (!evaluate(shift_kernel_word(tmpl, v)).is_identity()) return false;
    return true;
  }

  bool image_is_abelian() const {
    std::vector<const Permutation*> ps;
    for (const auto& row : table)
      for (const auto& p : row) ps.push_back(&p);
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j)
        if (ps[i]->then(*ps[j]) != ps[j]->then(*ps[i])) return false;
    return true;
  }

  friend auto operator<=>(const PeriodicRep&, const PeriodicRep&) = default;
};

/// The shift map: (sigma rho)(a_v) = rho(a_{v+1}).
inline PeriodicRep sigma(const PeriodicRep& rep) {
  PeriodicRep out = rep;
  for (std::size_t g = 0; g < rep.table.size(); ++g)
    for (int v = 0; v < rep.r; ++v)
      out.table[g][static_cast<std::size_t>(v)] =
          rep.table[g][static_cast<std::size_t>((v + 1) % rep.r)];
  return out;
}

inline PeriodicRep conjugate(const PeriodicRep& rep, const Permutation& c) {
  PeriodicRep out = rep;
  for (auto& row : out.table)
    for (auto& p : row) p = p.conjugated_by(c);
  return out;
}

/// K-orbits of [1,N] (as 0-based sorted blocks); one block iff transitive.
inline std::vector<std::vector<int>> orbit_decomposition(const PeriodicRep& rep) {
  std::vector<int> parent(static_cast<std::size_t>(rep.N));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int i) {
    while (parent[static_cast<std::size_t>(i)] != i) {
      parent[static_cast<std::size_t>(i)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
      i = parent[static_cast<std::size_t>(i)];
    }
    return i;
  };
  for (const auto& row : rep.table)
    for (const auto& p : row)
      for (int i = 0; i < rep.N; ++i) {
        int a = find(i), b = find(p(i));
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
      }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < rep.N; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, block] : groups) out.push_back(std::move(block));
  return out;
}

inline bool is_transitive(const PeriodicRep& rep) { return orbit_decomposition(rep).size() == 1; }

namespace detail {

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

inline std::vector<int> rep_encoding(const PeriodicRep& rep) {
  std::vector<int> code;
  for (const auto& row : rep.table)
    for (const auto& p : row)
      code.insert(code.end(), p.images().begin(), p.images().end());
  return code;
}

// Least encoding over the sigma-orbit and simultaneous conjugation.
inline std::vector<int> canonical_key(const PeriodicRep& rep,
                                      const std::vector<Permutation>& conjugators) {
  std::vector<int> best;
  PeriodicRep shifted = rep;
  for (int k = 0; k < rep.r; ++k) {
    for (const auto& c : conjugators) {
      std::vector<int> code = rep_encoding(conjugate(shifted, c));
      if (best.empty() || code < best) best = std::move(code);
    }
    shifted = sigma(shifted);
  }
  return best;
}

}  // namespace detail

struct EnumerationResult {
  std::vector<PeriodicRep> reps;
  bool complete = true;  // false when the search budget ran out
};

struct EnumerateOptions {
  bool allow_reducible = false;
  bool raw = false;          // keep every solution (no orbit/conjugacy dedup)
  long budget = 50'000'000;  // nodes explored before giving up
};

/// All period-r representations into S_N satisfying every relator-template
/// instance, by backtracking over the table entries with early rejection.
/// Deduplicated by sigma-orbit and simultaneous conjugation unless raw.
inline EnumerationResult enumerate_periodic(const KernelPresentation& kp, int N, int r,
                                            const EnumerateOptions& opt = {}) {
  if (N < 1 || r < 1) throw input_error("enumerate_periodic: N and r must be positive");
  const int n_gens = static_cast<int>(kp.base_names.size());
  const int n_vars = n_gens * r;
  const auto perms = detail::all_permutations(N);

  // Relator instances and, per variable, the instances whose support closes
  // once that variable (in assignment order) is set.
  struct Instance {
    KernelWord word;
    int last_var = 0;
  };
  std::vector<Instance> instances;
  auto var_of = [&](int gen, long shift) {
    return gen * r + static_cast<int>(floor_mod(shift, r));
  };
  for (const auto& tmpl : kp.templates)
    for (int v = 0; v < r; ++v) {
      Instance inst;
      inst.word = shift_kernel_word(tmpl, v);
      int last = -1;
      for (const auto& l : inst.word.letters()) last = std::max(last, var_of(l.gen, l.shift));
      inst.last_var = last;
      if (last >= 0) instances.push_back(std::move(inst));
    }
  std::vector<std::vector<const Instance*>> ready(static_cast<std::size_t>(n_vars));
  for (const auto& inst : instances)
    ready[static_cast<std::size_t>(inst.last_var)].push_back(&inst);

  EnumerationResult result;
  PeriodicRep rep;
  rep.N = N;
  rep.r = r;
  rep.table.assign(static_cast<std::size_t>(n_gens),
                   std::vector<Permutation>(static_cast<std::size_t>(r), Permutation::identity(N)));
  long nodes = 0;

  std::function<void(int)> search = [&](int var) {
    if (!result.complete) return;
    if (var == n_vars) {
      if (!opt.allow_reducible && !is_transitive(rep)) return;
      result.reps.push_back(rep);
      return;
    }
    int gen = var / r, v = var % r;
    for (const auto& p : perms) {
      if (!result.complete) return;
      if (++nodes > opt.budget) {
        result.complete = false;
        return;
      }
      rep.table[static_cast<std::size_t>(gen)][static_cast<std::size_t>(v)] = p;
      bool ok = true;
      for (const Instance* inst : ready[static_cast<std::size_t>(var)])
        if (!rep.evaluate(inst->word).is_identity()) {
          ok = false;
          break;
        }
      if (ok) search(var + 1);
    }
    rep.table[static_cast<std::size_t>(gen)][static_cast<std::size_t>(v)] = Permutation::identity(N);
  };
  search(0);

  if (!opt.raw) {
    const auto conjugators = detail::all_permutations(N);
    std::map<std::vector<int>, PeriodicRep> canon;
    for (const auto& found : result.reps) {
      auto key = detail::canonical_key(found, conjugators);
      canon.try_emplace(std::move(key), found);
    }
    result.reps.clear();
    for (auto& [key, found] : canon) result.reps.push_back(std::move(found));
  } else {
    std::sort(result.reps.begin(), result.reps.end(),
              [](const PeriodicRep& a, const PeriodicRep& b) {
                return detail::rep_encoding(a) < detail::rep_encoding(b);
              });
  }
  return result;
}

struct CyclicRepsResult {
  std::vector<PeriodicRep> reps;
  std::vector<std::vector<int>> exponent_vectors;
  Int resultant_value;  // Res(Delta(t), t^r - 1)
  std::string note;
};

/// Period-r representations with cyclic image of order p, for systems whose
/// kernel has a single base generator a: candidates a_v -> alpha^{e_v} with
/// alpha the p-cycle (1 2 ... p) come from the null space mod p of the r x r
/// circulant of Alexander coefficients; each is then verified exactly.
/// The construction applies only when Res(Delta, t^r - 1) = 0 mod p.
inline CyclicRepsResult cyclic_reps_mod_p(const AugmentedGroupSystem& sys, long p, int r,
                                          std::size_t threads = 1) {
  if (p < 2) throw input_error("cyclic_reps_mod_p: p must be a prime >= 2");
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) throw input_error("cyclic_reps_mod_p: p is not prime");
  AugmentedGroupSystem norm = normalize(sys);
  KernelPresentation kp = kernel_presentation(norm);
  if (kp.base_names.size() != 1)
    throw input_error("cyclic_reps_mod_p: system must have exactly one kernel generator");

  CyclicRepsResult out;
  LaurentPoly delta = untwisted_alexander(norm, threads);
  {
    std::vector<Int> c(static_cast<std::size_t>(r) + 1);
    c[0] = -1;
    c[static_cast<std::size_t>(r)] = 1;
    out.resultant_value = resultant(delta, LaurentPoly(0, std::move(c)));
  }
  if (out.resultant_value % p != 0) {
    out.note = "Res(Delta, t^r - 1) = " + out.resultant_value.str() +
               " is nonzero mod " + std::to_string(p) + "; no cyclic representations";
    return out;
  }

  // Circulant conditions: for every v, sum_mu c_mu * e_{(mu+v) mod r} = 0.
  const KernelWord& tmpl = kp.templates[0];
  std::vector<std::vector<long>> rows(static_cast<std::size_t>(r), std::vector<long>(static_cast<std::size_t>(r), 0));
  for (int v = 0; v < r; ++v)
    for (const auto& l : tmpl.letters()) {
      auto j = static_cast<std::size_t>(floor_mod(l.shift + v, r));
      rows[static_cast<std::size_t>(v)][j] = (rows[static_cast<std::size_t>(v)][j] + l.exp) % p;
    }

  // Null space of the circulant over F_p (p is small: exhaustive inverse).
  auto mod = [&](long a) { return ((a % p) + p) % p; };
  auto inv_mod = [&](long a) {
    a = mod(a);
    for (long x = 1; x < p; ++x)
      if (mod(a * x) == 1) return x;
    throw math_error("inv_mod: not invertible");
  };

  std::vector<std::vector<long>> m = rows;
  for (auto& row : m)
    for (auto& x : row) x = mod(x);
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < static_cast<std::size_t>(r) && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    long inv = inv_mod(m[rank][col]);
    for (auto& x : m[rank]) x = mod(x * inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][col] == 0) continue;
      long f = m[i][col];
      for (std::size_t j = 0; j < static_cast<std::size_t>(r); ++j)
        m[i][j] = mod(m[i][j] - f * m[rank][j]);
    }
    pivot_col.push_back(static_cast<int>(col));
    ++rank;
  }
  std::vector<int> free_cols;
  for (int col = 0; col < r; ++col)
    if (std::find(pivot_col.begin(), pivot_col.end(), col) == pivot_col.end())
      free_cols.push_back(col);

  // Enumerate the null space (p^dim vectors) and keep the nonzero ones.
  const std::size_t dim = free_cols.size();
  double total = std::pow(static_cast<double>(p), static_cast<double>(dim));
  if (total > 2e6)
    throw input_error("cyclic_reps_mod_p: null space too large to enumerate");

  Permutation alpha;
  {
    std::vector<int> img(static_cast<std::size_t>(p));
    for (long i = 0; i < p; ++i) img[static_cast<std::size_t>(i)] = static_cast<int>((i + 1) % p);
    alpha = Permutation::from_images(img);
  }
  std::vector<Permutation> alpha_pow(static_cast<std::size_t>(p), Permutation::identity(static_cast<int>(p)));
  for (long e = 1; e < p; ++e)
    alpha_pow[static_cast<std::size_t>(e)] = alpha_pow[static_cast<std::size_t>(e - 1)].then(alpha);

  std::vector<long> choice(dim, 0);
  while (true) {
    std::vector<long> e(static_cast<std::size_t>(r), 0);
    for (std::size_t k = 0; k < dim; ++k) e[static_cast<std::size_t>(free_cols[k])] = choice[k];
    for (std::size_t i = 0; i < rank; ++i) {
      long acc = 0;
      for (std::size_t k = 0; k < dim; ++k)
        acc = mod(acc + m[i][static_cast<std::size_t>(free_cols[k])] * choice[k]);
      e[static_cast<std::size_t>(pivot_col[i])] = mod(-acc);
    }
    bool nonzero = false;
    for (long x : e)
      if (x != 0) nonzero = true;
    if (nonzero) {
      PeriodicRep rep;
      rep.N = static_cast<int>(p);
      rep.r = r;
      rep.table.assign(1, std::vector<Permutation>());
      for (int v = 0; v < r; ++v)
        rep.table[0].push_back(alpha_pow[static_cast<std::size_t>(e[static_cast<std::size_t>(v)])]);
      // Null-space membership is necessary; exact verification is mandatory.
      if (rep.satisfies(kp)) {
        out.reps.push_back(std::move(rep));
        out.exponent_vectors.emplace_back(e.begin(), e.end());
      }
    }
    std::size_t k = 0;
    while (k < dim && ++choice[k] == p) choice[k++] = 0;
    if (k == dim) break;
  }
  return out;
}

/// Searches S_N for a witness X with (sigma rho)(u) = X rho(u) X^-1 for all
/// u, i.e. rho extends over G with x acting as X. Witnesses with X^r = 1
/// are preferred (they make the induced period-1 module structure
/// compatible with the shift); ties break lexicographically.
inline std::optional<Permutation> extends_over_G(const PeriodicRep& rep) {
  PeriodicRep shifted = sigma(rep);
  std::optional<Permutation> first;
  for (const auto& x : detail::all_permutations(rep.N)) {
    bool ok = true;
    for (std::size_t g = 0; g < rep.table.size() && ok; ++g)
      for (int v = 0; v < rep.r && ok; ++v)
        if (shifted.table[g][static_cast<std::size_t>(v)] !=
            rep.table[g][static_cast<std::size_t>(v)].conjugated_by(x))
          ok = false;
    if (!ok) continue;
    Permutation xr = Permutation::identity(rep.N);
    for (int k = 0; k < rep.r; ++k) xr = xr.then(x);
    if (xr.is_identity()) return x;
    if (!first) first = x;
  }
  return first;
}

}  // namespace alexlin
