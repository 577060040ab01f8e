// The randomized structural property suite shared by the unit tests and
// the acceptance gate: sigma-invariance, conjugation invariance, period
// rescaling, Alexander-polynomial divisibility, free-product
// multiplicativity on reducible representations, and the trivial-rep
// reduction, over the corpus and enumerated representations.
#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"

namespace property_suite {

using namespace alexlin;

struct Outcome {
  int cases = 0;
  int failures = 0;
  std::vector<std::string> messages;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok) {
      ++failures;
      messages.push_back(what);
    }
  }
};

inline PeriodicRep redeclared_at(const PeriodicRep& rep, int k) {
  PeriodicRep out = rep;
  out.r = rep.r * k;
  for (std::size_t g = 0; g < rep.table.size(); ++g) {
    out.table[g].clear();
    for (int v = 0; v < out.r; ++v)
      out.table[g].push_back(rep.table[g][static_cast<std::size_t>(v % rep.r)]);
  }
  return out;
}

inline Outcome run(unsigned seed, std::size_t threads = 1) {
  Outcome out;
  std::mt19937_64 rng(seed);
  PipelineOptions quiet;
  quiet.with_checks = false;
  quiet.threads = threads;

  struct Entry {
    std::string file;
    std::vector<std::pair<int, int>> sizes;  // (N, r) to enumerate
  };
  const std::vector<Entry> corpus{
      {"bs.agp", {{2, 1}, {3, 2}}},
      {"trefoil.agp", {{2, 3}, {3, 2}}},
      {"fig8.agp", {{2, 3}, {3, 3}}},
  };

  for (const auto& entry : corpus) {
    auto sys = oracle::load_corpus(entry.file);
    auto norm = normalize(sys);
    auto kp = kernel_presentation(norm);
    LaurentPoly delta = untwisted_alexander(norm, threads);

    // trivial-representation reduction at several declared periods
    for (int r : {1, 2, 3}) {
      PeriodicRep triv;
      triv.N = 1;
      triv.r = r;
      triv.table.assign(kp.base_names.size(),
                        std::vector<Permutation>(static_cast<std::size_t>(r), Permutation::identity(1)));
      LaurentPoly d = alexander_lin(sys, triv, quiet).D;
      out.check(d == power_transform(delta, static_cast<unsigned>(r), threads),
                entry.file + ": trivial rep at period " + std::to_string(r) +
                    " must give the power transform of the Alexander polynomial");
    }

    std::vector<PeriodicRep> reps;
    for (auto [N, r] : entry.sizes) {
      auto en = enumerate_periodic(kp, N, r);
      for (auto& rep : en.reps) reps.push_back(std::move(rep));
    }

    for (const auto& rep : reps) {
      std::string tag = entry.file + " N=" + std::to_string(rep.N) + " r=" + std::to_string(rep.r);
      LaurentPoly d = alexander_lin(sys, rep, quiet).D;

      // sigma-invariance along the whole orbit
      PeriodicRep shifted = rep;
      for (int k = 0; k < rep.r; ++k) {
        shifted = sigma(shifted);
        out.check(alexander_lin(sys, shifted, quiet).D == d, tag + ": sigma-invariance");
      }

      // conjugation invariance, three random conjugators
      const auto conjugators = detail::all_permutations(rep.N);
      std::uniform_int_distribution<std::size_t> pick(0, conjugators.size() - 1);
      for (int t = 0; t < 3; ++t) {
        PeriodicRep conj = conjugate(rep, conjugators[pick(rng)]);
        out.check(alexander_lin(sys, conj, quiet).D == d, tag + ": conjugation invariance");
      }

      // period rescaling
      for (int k : {2, 3}) {
        LaurentPoly dk = alexander_lin(sys, redeclared_at(rep, k), quiet).D;
        LaurentPoly expect = d.is_zero() ? LaurentPoly::zero()
                                         : power_transform(d, static_cast<unsigned>(k), threads);
        out.check(dk == expect, tag + ": period rescaling k=" + std::to_string(k));
      }

      // Alexander divisibility
      LaurentPoly dr = power_transform(delta, static_cast<unsigned>(rep.r), threads);
      out.check(divides(dr, d), tag + ": Delta^(r) divides D");
    }

    // free-product multiplicativity: block sum of an enumerated rep with
    // the trivial one-point representation at a matching period
    for (const auto& rep : reps) {
      PeriodicRep block;
      block.N = rep.N + 1;
      block.r = rep.r;
      block.table.assign(rep.table.size(), {});
      for (std::size_t g = 0; g < rep.table.size(); ++g)
        for (int v = 0; v < rep.r; ++v) {
          std::vector<int> img(static_cast<std::size_t>(block.N));
          for (int i = 0; i < rep.N; ++i)
            img[static_cast<std::size_t>(i)] = rep.table[g][static_cast<std::size_t>(v)](i);
          img[static_cast<std::size_t>(rep.N)] = rep.N;
          block.table[g].push_back(Permutation::from_images(img));
        }
      PipelineOptions reducible = quiet;
      reducible.allow_reducible = true;
      LaurentPoly whole = alexander_lin(sys, block, reducible).D;
      LaurentPoly p1 = alexander_lin(sys, rep, quiet).D;
      PeriodicRep triv;
      triv.N = 1;
      triv.r = rep.r;
      triv.table.assign(kp.base_names.size(),
                        std::vector<Permutation>(static_cast<std::size_t>(rep.r), Permutation::identity(1)));
      LaurentPoly p2 = alexander_lin(sys, triv, quiet).D;
      out.check(whole == (p1 * p2).canonical(),
                entry.file + ": free-product multiplicativity on a reducible block");
    }
  }

  // sigma- and conjugation-invariance on two of the 7_3 cyclic reps
  {
    auto sys = oracle::load_corpus("7_3.agp");
    auto cyc = cyclic_reps_mod_p(sys, 5, 13, threads);
    for (std::size_t i : {std::size_t{0}, cyc.reps.size() / 2}) {
      const auto& rep = cyc.reps[i];
      LaurentPoly d = alexander_lin(sys, rep, quiet).D;
      out.check(alexander_lin(sys, sigma(rep), quiet).D == d, "7_3 cyclic rep: sigma-invariance");
      LaurentPoly dr = power_transform(untwisted_alexander(sys), 13, threads);
      out.check(divides(dr, d), "7_3 cyclic rep: Delta^(13) divides D");
    }
  }

  return out;
}

}  // namespace property_suite
