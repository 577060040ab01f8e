#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace alexlin;

namespace {
// x = 0, a = 1 throughout.
FreeWord W(std::initializer_list<Letter> ls) { return FreeWord(std::vector<Letter>(ls)); }
}  // namespace

TEST_CASE("free words reduce eagerly") {
  FreeWord w = W({{0, 1}, {1, 1}, {1, -1}, {0, -1}});
  REQUIRE(w.is_identity());
  FreeWord u = W({{0, 1}, {1, 1}});
  REQUIRE((u * u.inverse()).is_identity());
  REQUIRE(u.pow(3).length() == 6);
  REQUIRE(u.pow(-2) == u.inverse() * u.inverse());
}

TEST_CASE("fox derivative base cases and product rule") {
  FreeWord xy = W({{0, 1}, {1, 1}});
  REQUIRE(fox_derivative(xy, 0, 2) == GroupRingElement::of(FreeWord()));
  REQUIRE(fox_derivative(xy, 1, 2) == GroupRingElement::of(FreeWord::generator(0)));

  FreeWord xinv = W({{0, -1}});
  GroupRingElement expect;
  expect.add(FreeWord::generator(0, -1), -1);
  REQUIRE(fox_derivative(xinv, 0, 2) == expect);

  REQUIRE_THROWS_AS(fox_derivative(xy, 5, 2), input_error);
}

TEST_CASE("fox derivative of the Baumslag-Solitar relator") {
  // d(x a x^-1 a^-2)/da = x - x a x^-1 a^-1 - x a x^-1 a^-2
  FreeWord rel = W({{0, 1}, {1, 1}, {0, -1}, {1, -1}, {1, -1}});
  GroupRingElement d = fox_derivative(rel, 1, 2);
  GroupRingElement expect;
  expect.add(FreeWord::generator(0), 1);
  expect.add(W({{0, 1}, {1, 1}, {0, -1}, {1, -1}}), -1);
  expect.add(W({{0, 1}, {1, 1}, {0, -1}, {1, -1}, {1, -1}}), -1);
  REQUIRE(d == expect);

  // evaluated under eps (trivial representation) this is t - 2
  LaurentPoly e;
  for (const auto& [w, c] : d.terms()) {
    long deg = 0;
    for (const auto& l : w.letters())
      if (l.gen == 0) deg += l.exp;
    e += LaurentPoly::monomial(c, deg);
  }
  REQUIRE(e.canonical() == LaurentPoly::from_coeffs({-2, 1}).canonical());
}

TEST_CASE("fox derivative agrees with the recursive oracle on random words") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    FreeWord w = oracle::random_word(rng, 3, 40);
    for (int g = 0; g < 3; ++g) REQUIRE(fox_derivative(w, g, 3) == oracle::naive_fox(w, g));
  }
}

TEST_CASE("product rule holds for random word pairs") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    FreeWord u = oracle::random_word(rng, 3, 20);
    FreeWord v = oracle::random_word(rng, 3, 20);
    for (int g = 0; g < 3; ++g) {
      GroupRingElement lhs = fox_derivative(u * v, g, 3);
      GroupRingElement rhs = fox_derivative(u, g, 3) + fox_derivative(v, g, 3).left_mul(u);
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("fundamental identity: w - 1 = sum_g d(w)/dg (g - 1)") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    FreeWord w = oracle::random_word(rng, 3, 40);
    GroupRingElement lhs;
    lhs.add(w, 1);
    lhs.add(FreeWord(), -1);
    GroupRingElement rhs;
    for (int g = 0; g < 3; ++g) {
      GroupRingElement gm1;
      gm1.add(FreeWord::generator(g), 1);
      gm1.add(FreeWord(), -1);
      rhs = rhs + fox_derivative(w, g, 3) * gm1;
    }
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("schreier rewriting") {
  std::vector<int> degrees{1, 0};
  std::vector<int> kernel_index{-1, 0};

  SECTION("Baumslag-Solitar relator becomes a_1 a_0^-2") {
    FreeWord rel = W({{0, 1}, {1, 1}, {0, -1}, {1, -1}, {1, -1}});
    KernelWord k = schreier_rewrite(rel, 0, degrees, kernel_index);
    KernelWord expect(std::vector<KernelLetter>{{0, 1, 1}, {0, 0, -1}, {0, 0, -1}});
    REQUIRE(k == expect);
  }
  SECTION("a degree-zero generator rewrites to index 0") {
    KernelWord k = schreier_rewrite(FreeWord::generator(1), 0, degrees, kernel_index);
    REQUIRE(k == KernelWord(std::vector<KernelLetter>{{0, 0, 1}}));
  }
  SECTION("words outside the kernel are rejected") {
    REQUIRE_THROWS_AS(schreier_rewrite(FreeWord::generator(0), 0, degrees, kernel_index),
                      input_error);
  }
  SECTION("concatenation compatibility") {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 100; ++trial) {
      // build two kernel words as free words of degree zero
      FreeWord u, v;
      do {
        u = oracle::random_word(rng, 2, 16);
      } while ([&] {
        long d = 0;
        for (const auto& l : u.letters())
          if (l.gen == 0) d += l.exp;
        return d != 0;
      }());
      do {
        v = oracle::random_word(rng, 2, 16);
      } while ([&] {
        long d = 0;
        for (const auto& l : v.letters())
          if (l.gen == 0) d += l.exp;
        return d != 0;
      }());
      KernelWord lhs = schreier_rewrite(u * v, 0, degrees, kernel_index);
      KernelWord rhs = schreier_rewrite(u, 0, degrees, kernel_index) *
                       schreier_rewrite(v, 0, degrees, kernel_index);
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("the 7_3 relator rewrites to the expected template") {
  auto sys = oracle::load_corpus("7_3.agp");
  auto kp = kernel_presentation(normalize(sys));
  // a_0^2 a_1^-1 a_2^2 a_3^-1 a_4^2 a_3^-2 a_2 a_1^-2
  std::vector<KernelLetter> expect{{0, 0, 1},  {0, 0, 1},  {0, 1, -1}, {0, 2, 1}, {0, 2, 1},
                                   {0, 3, -1}, {0, 4, 1},  {0, 4, 1},  {0, 3, -1}, {0, 3, -1},
                                   {0, 2, 1},  {0, 1, -1}, {0, 1, -1}};
  REQUIRE(kp.templates[0] == KernelWord(std::move(expect)));
}

TEST_CASE("kernel word shifting") {
  KernelWord w(std::vector<KernelLetter>{{0, 1, 1}, {0, 0, -1}, {0, 0, -1}});
  KernelWord shifted = shift_kernel_word(w, 1);
  REQUIRE(shifted == KernelWord(std::vector<KernelLetter>{{0, 2, 1}, {0, 1, -1}, {0, 1, -1}}));
  REQUIRE(shift_kernel_word(w, 0) == w);
  REQUIRE(shift_kernel_word(shift_kernel_word(w, -3), 3) == w);
}
