#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace alexlin;

namespace {
LaurentPoly P(std::initializer_list<long> cs) {
  std::vector<Int> v;
  for (long c : cs) v.emplace_back(c);
  return LaurentPoly(0, std::move(v));
}
}  // namespace

TEST_CASE("arithmetic and canonical form") {
  LaurentPoly f = P({-4, 0, 1});               // s^2 - 4
  LaurentPoly g = LaurentPoly::monomial(3, -2); // 3 s^-2
  REQUIRE((f * g).low_degree() == -2);
  REQUIRE((f + (-f)).is_zero());
  REQUIRE(f.canonical() == (-f).shifted(5).canonical());
  REQUIRE(LaurentPoly::zero().canonical().is_zero());
  REQUIRE(P({0, 0, 2, 0}).low_degree() == 2);  // trimmed
}

TEST_CASE("gcd") {
  REQUIRE(laurent_gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}).canonical());
  REQUIRE(laurent_gcd(P({-4, 1}), LaurentPoly::zero()) == P({-4, 1}).canonical());
  // built from factors: gcd((s-1)^2 (s-4), (s-1)(s-2)) = s-1
  LaurentPoly a = (P({-1, 1}) * P({-1, 1}) * P({-4, 1}));
  LaurentPoly b = (P({-1, 1}) * P({-2, 1}));
  REQUIRE(laurent_gcd(a, b) == P({-1, 1}).canonical());

  SECTION("gcd divides both and is commutative, on random inputs") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
      LaurentPoly f = oracle::random_poly(rng, 5, 6);
      LaurentPoly g = oracle::random_poly(rng, 5, 6);
      LaurentPoly d = laurent_gcd(f, g);
      if (!d.is_zero()) {
        REQUIRE(divides(d, f));
        REQUIRE(divides(d, g));
      }
      REQUIRE(d == laurent_gcd(g, f));
    }
  }
}

TEST_CASE("divisibility") {
  LaurentPoly f = P({-1, 1});
  REQUIRE(divides(f, (f * f * P({-4, 1}))));
  REQUIRE(divides(f, LaurentPoly::zero()));
  REQUIRE_FALSE(divides(P({-2, 1}), P({-1, 1})));
  REQUIRE_THROWS_AS(divides(LaurentPoly::zero(), f), input_error);
  // exact division returns the cofactor
  auto q = exact_divide((f * P({1, 2, 3})).shifted(-4), f);
  REQUIRE(q);
  REQUIRE(q->canonical() == P({1, 2, 3}).canonical());
  // content must divide too
  REQUIRE_FALSE(divides(P({2}), P({3, 3})));
  REQUIRE(divides(P({2}), P({4, 6})));
}

TEST_CASE("power transform") {
  REQUIRE(power_transform(P({-2, 1}), 2) == P({-4, 1}).canonical());
  REQUIRE(power_transform(P({1, -3, 1}), 2) == P({1, -7, 1}).canonical());
  LaurentPoly f = P({3, 1, -2, 5});
  REQUIRE(power_transform(f, 1) == f.canonical());

  SECTION("matches the numeric-roots oracle") {
    REQUIRE(power_transform(P({1, -3, 1}), 2) == oracle::numeric_power_transform(P({1, -3, 1}), 2));
    REQUIRE(power_transform(P({-2, 1}), 7) == oracle::numeric_power_transform(P({-2, 1}), 7));
    REQUIRE(power_transform(P({2, -3, 3, -3, 2}), 13) ==
            oracle::numeric_power_transform(P({2, -3, 3, -3, 2}), 13));
  }
  SECTION("composition: f^(kr) = (f^(r))^(k)") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 60; ++trial) {
      LaurentPoly f = oracle::random_poly(rng, 4, 4);
      if (f.is_zero()) continue;
      for (unsigned r : {2u, 3u})
        for (unsigned k : {2u, 3u})
          REQUIRE(power_transform(f, k * r) ==
                  power_transform(power_transform(f, r), k));
    }
  }
}

TEST_CASE("reciprocality") {
  REQUIRE(is_reciprocal(P({-1, 1})));
  REQUIRE(is_reciprocal(P({2, -3, 3, -3, 2})));
  REQUIRE_FALSE(is_reciprocal(P({-2, 1})));
  SECTION("products of reciprocals are reciprocal") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
      LaurentPoly f = oracle::random_poly(rng, 3, 4);
      LaurentPoly g = oracle::random_poly(rng, 3, 4);
      LaurentPoly fr = f + f.reversed().shifted(f.top_degree() + 1);  // palindromize
      LaurentPoly gr = g * g.reversed();
      if (fr.is_zero() || gr.is_zero()) continue;
      if (is_reciprocal(fr) && is_reciprocal(gr)) REQUIRE(is_reciprocal(fr * gr));
    }
  }
}

TEST_CASE("resultants") {
  // Res of the 7_3 Alexander polynomial against t^13 - 1 is 5^4
  std::vector<Int> c(14);
  c[0] = -1;
  c[13] = 1;
  REQUIRE(resultant(P({2, -3, 3, -3, 2}), LaurentPoly(0, std::move(c))) == 625);
  // classic: Res(s - a, s - b) = b - a up to the convention sign
  REQUIRE(int_abs(resultant(P({-3, 1}), P({-5, 1}))) == 2);
}

TEST_CASE("mahler measure") {
  auto m1 = mahler_measure(P({-2, 1}));
  REQUIRE(m1.error_bound <= 1e-9);
  REQUIRE(m1.value == Catch::Approx(2.0).margin(1e-9));

  auto m2 = mahler_measure(P({1, -3, 1}));
  REQUIRE(m2.error_bound <= 1e-9);
  REQUIRE(m2.value == Catch::Approx((3.0 + std::sqrt(5.0)) / 2).margin(1e-9));

  auto m3 = mahler_measure(P({1, -1, 1}) * P({1, 1, 1, 1, 1}));
  REQUIRE(m3.error_bound <= 1e-9);
  REQUIRE(m3.value == Catch::Approx(1.0).margin(1e-9));

  SECTION("multiplicativity within reported bounds") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 40; ++trial) {
      LaurentPoly f = oracle::random_poly(rng, 4, 5);
      LaurentPoly g = oracle::random_poly(rng, 4, 5);
      if (f.is_zero() || g.is_zero()) continue;
      auto mf = mahler_measure(f), mg = mahler_measure(g), mfg = mahler_measure(f * g);
      double tol = mf.error_bound * mg.value + mg.error_bound * mf.value + mfg.error_bound + 1e-9;
      REQUIRE(std::abs(mfg.value - mf.value * mg.value) <= tol);
    }
  }
  SECTION("M(f^(r)) = M(f)^r within bounds") {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 30; ++trial) {
      LaurentPoly f = oracle::random_poly(rng, 4, 5);
      if (f.is_zero()) continue;
      auto mf = mahler_measure(f);
      auto mfr = mahler_measure(power_transform(f, 3));
      REQUIRE(std::abs(mfr.value - std::pow(mf.value, 3)) <=
              3 * mf.error_bound * std::pow(mf.value, 2) + mfr.error_bound + 1e-8);
    }
  }
}

TEST_CASE("cyclotomic product detection") {
  REQUIRE(is_cyclotomic_product(P({1, -1, 1})));
  REQUIRE(is_cyclotomic_product(P({-1, 1})));
  REQUIRE_FALSE(is_cyclotomic_product(P({1, -3, 1})));
  REQUIRE_FALSE(is_cyclotomic_product(P({-2, 1})));
  // Lehmer's polynomial: smallest known Mahler measure above 1
  REQUIRE_FALSE(is_cyclotomic_product(P({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1})));

  SECTION("agrees with cyclotomic products by construction") {
    std::mt19937_64 rng(26);
    std::uniform_int_distribution<int> pick(1, 12);
    for (int trial = 0; trial < 50; ++trial) {
      LaurentPoly f = LaurentPoly::one();
      for (int k = 0; k < 3; ++k) f *= oracle::cyclotomic(pick(rng));
      REQUIRE(is_cyclotomic_product(f));
      auto m = mahler_measure(f);
      REQUIRE(m.value == Catch::Approx(1.0).margin(1e-9));
      REQUIRE_FALSE(is_cyclotomic_product(f * P({-2, 1})));
    }
  }
}

TEST_CASE("squarefree decomposition reconstructs the input") {
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 60; ++trial) {
    LaurentPoly a = oracle::random_poly(rng, 2, 3);
    LaurentPoly b = oracle::random_poly(rng, 2, 3);
    if (a.is_zero() || b.is_zero()) continue;
    LaurentPoly f = a * b * b;
    auto dec = squarefree_decompose(f);
    LaurentPoly rebuilt = LaurentPoly::constant(dec.content);
    for (std::size_t k = 0; k < dec.factors.size(); ++k)
      rebuilt *= laurent_pow(dec.factors[k], static_cast<unsigned>(k + 1));
    REQUIRE(rebuilt.canonical() == f.canonical());
    for (const auto& q : dec.factors)
      if (q.span() > 0) REQUIRE(laurent_gcd(q, q.derivative()).span() == 0);
  }
}

TEST_CASE("max root modulus") {
  auto m = max_root_modulus(P({-4, 0, 1}));  // roots ±2
  REQUIRE(m.value == Catch::Approx(2.0).margin(1e-9));
  auto u = max_root_modulus(P({1, -1, 1}));  // on the unit circle
  REQUIRE(u.value == Catch::Approx(1.0).margin(1e-9));
}
