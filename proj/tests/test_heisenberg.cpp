#include <gtest/gtest.h>

#include <random>

#include "heis_mcg/heisenberg.hpp"

using namespace heis;

namespace {

HomologyClass a(int g, int i) { return HomologyClass::a(g, i); }
HomologyClass b(int g, int i) { return HomologyClass::b(g, i); }

HomologyClass random_class(int g, std::mt19937_64& rng, Int bound = 5) {
  std::uniform_int_distribution<Int> d(-bound, bound);
  std::vector<Int> c(static_cast<std::size_t>(2 * g));
  for (auto& v : c) v = d(rng);
  return {g, c};
}

HeisenbergElement random_element(int g, std::mt19937_64& rng) {
  std::uniform_int_distribution<Int> d(-20, 20);
  return {d(rng), random_class(g, rng)};
}

}  // namespace

TEST(Intersection, Examples) {
  EXPECT_EQ(intersect(a(1, 1), a(1, 1)), 0);
  EXPECT_EQ(intersect(a(1, 1), b(1, 1)), 1);
  EXPECT_EQ(intersect(b(1, 1), a(1, 1)), -1);
}

TEST(Intersection, DistinctHandlesAreOrthogonal) {
  EXPECT_EQ(intersect(a(3, 1), b(3, 2)), 0);
  EXPECT_EQ(intersect(b(3, 3), a(3, 1)), 0);
}

TEST(Intersection, BilinearAntisymmetric) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    auto x = random_class(3, rng), y = random_class(3, rng), z = random_class(3, rng);
    EXPECT_EQ(intersect(x, y), -intersect(y, x));
    EXPECT_EQ(intersect(x + y, z), intersect(x, z) + intersect(y, z));
    EXPECT_EQ(intersect(3 * x, y), 3 * intersect(x, y));
  }
}

TEST(Intersection, GenusMismatch) { EXPECT_THROW(intersect(a(1, 1), a(2, 1)), GenusMismatch); }

TEST(HeisMul, Examples) {
  int g = 1;
  HeisenbergElement u = HeisenbergElement::u(g);
  HeisenbergElement y{4, a(g, 1) - b(g, 1)};
  EXPECT_EQ(heis_mul(u, y), (HeisenbergElement{5, y.x}));
  EXPECT_EQ(heis_mul({0, a(g, 1)}, {0, b(g, 1)}), (HeisenbergElement{1, a(g, 1) + b(g, 1)}));
  HeisenbergElement h{7, 2 * a(g, 1) + b(g, 1)};
  EXPECT_EQ(heis_mul(h, {-7, -h.x}), HeisenbergElement::identity(g));
}

TEST(HeisInv, Examples) {
  EXPECT_EQ(heis_inv(HeisenbergElement::identity(2)), HeisenbergElement::identity(2));
  EXPECT_EQ(heis_inv({2, a(1, 1)}), (HeisenbergElement{-2, -a(1, 1)}));
  HeisenbergElement h{1, a(1, 1) + b(1, 1)};
  EXPECT_EQ(heis_inv(h), (HeisenbergElement{-1, -a(1, 1) - b(1, 1)}));
  EXPECT_EQ(heis_mul(h, heis_inv(h)), HeisenbergElement::identity(1));
}

TEST(HeisConj, Examples) {
  int g = 1;
  std::mt19937_64 rng(2);
  HeisenbergElement h = random_element(g, rng);
  EXPECT_EQ(heis_conj({5, HomologyClass::zero(g)}, h), h);
  EXPECT_EQ(heis_conj({0, a(g, 1)}, {0, b(g, 1)}), (HeisenbergElement{2, b(g, 1)}));
  EXPECT_EQ(heis_conj({0, b(g, 1)}, {0, a(g, 1)}), (HeisenbergElement{-2, a(g, 1)}));
}

TEST(HeisConj, MatchesTripleProduct) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    auto g = random_element(2, rng), h = random_element(2, rng);
    EXPECT_EQ(heis_conj(g, h), heis_mul(heis_mul(g, h), heis_inv(g)));
    EXPECT_EQ(heis_conj(g, h), (HeisenbergElement{h.k + 2 * intersect(g.x, h.x), h.x}));
  }
}

TEST(HeisGroup, AxiomsOnRandomTriples) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 1000; ++i) {
    int g = 1 + i % 3;
    auto x = random_element(g, rng), y = random_element(g, rng), z = random_element(g, rng);
    EXPECT_EQ(heis_mul(heis_mul(x, y), z), heis_mul(x, heis_mul(y, z)));
    EXPECT_EQ(heis_mul(x, HeisenbergElement::identity(g)), x);
    EXPECT_EQ(heis_mul(HeisenbergElement::identity(g), x), x);
    EXPECT_EQ(heis_mul(x, heis_inv(x)), HeisenbergElement::identity(g));
    EXPECT_EQ(heis_mul(heis_inv(x), x), HeisenbergElement::identity(g));
  }
}

TEST(HeisGroup, CommutatorLaw) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    auto x = random_class(2, rng), y = random_class(2, rng);
    EXPECT_EQ(heis_commutator({0, x}, {0, y}), (HeisenbergElement{2 * intersect(x, y), HomologyClass::zero(2)}));
  }
}

TEST(HeisGroup, Center) {
  std::mt19937_64 rng(6);
  int g = 2;
  for (int i = 0; i < 1000; ++i) {
    HeisenbergElement c{static_cast<Int>(i) - 500, HomologyClass::zero(g)};
    auto h = random_element(g, rng);
    EXPECT_EQ(heis_mul(c, h), heis_mul(h, c));
  }
  for (int i = 0; i < 100; ++i) {
    auto h = random_element(g, rng);
    if (h.x.is_zero()) continue;
    bool commutes_with_all = true;
    for (int j = 0; j < 2 * g; ++j) {
      HeisenbergElement e{0, HomologyClass::basis(g, j)};
      commutes_with_all = commutes_with_all && heis_mul(h, e) == heis_mul(e, h);
    }
    EXPECT_FALSE(commutes_with_all) << to_string(h);
  }
}

TEST(PoincareDuality, Examples) {
  int g = 1;
  EXPECT_EQ(poincare_sharp(CohomologyClass::zero(g)), HomologyClass::zero(g));
  EXPECT_EQ(poincare_sharp(CohomologyClass::a_star(g, 1)), -b(g, 1));
  EXPECT_EQ(poincare_sharp(2 * CohomologyClass::a_star(g, 1)), -2 * b(g, 1));
}

TEST(PoincareDuality, DefiningProperty) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    int g = 1 + i % 3;
    auto y = random_class(g, rng);
    EXPECT_EQ(poincare_sharp(poincare_flat(y)), y);
    auto t = poincare_flat(random_class(g, rng));
    HomologyClass x = poincare_sharp(t);
    for (int j = 0; j < 2 * g; ++j) {
      auto e = HomologyClass::basis(g, j);
      EXPECT_EQ(intersect(x, e), t(e));
    }
  }
}

TEST(PoincareDuality, InnerWitnessHalvesSharp) {
  auto d = 2 * CohomologyClass::a_star(2, 1);
  ASSERT_TRUE(inner_witness(d).has_value());
  EXPECT_EQ(*inner_witness(d), -b(2, 1));
  EXPECT_EQ(poincare_sharp(d), -2 * b(2, 1));
  EXPECT_FALSE(inner_witness(CohomologyClass::a_star(2, 1)).has_value());
}

TEST(Overflow, IsAnError) {
  HeisenbergElement big{std::numeric_limits<Int>::max(), HomologyClass::zero(1)};
  EXPECT_THROW(heis_mul(big, HeisenbergElement::u(1)), OverflowError);
  EXPECT_THROW(heis_inv({std::numeric_limits<Int>::min(), HomologyClass::zero(1)}), OverflowError);
}

TEST(Parse, RoundTrip) {
  HeisenbergElement h{-3, HomologyClass(2, {1, -2, 0, 5})};
  EXPECT_EQ(to_string(h), "(-3; 1,-2,0,5)");
  EXPECT_EQ(parse_heisenberg(to_string(h)), h);
  EXPECT_EQ(parse_heisenberg("  ( 2 ;0 , 0 ) "), (HeisenbergElement{2, HomologyClass::zero(1)}));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_heisenberg("(1; 0,0,0)"), ParseError);
  EXPECT_THROW(parse_heisenberg("(1, 0,0)"), ParseError);
  EXPECT_THROW(parse_heisenberg("(1; 0,0) x"), ParseError);
  EXPECT_THROW(parse_heisenberg("(1; 0,0)", 2), GenusMismatch);
  try {
    parse_heisenberg("(1; 0,x)");
    FAIL();
  } catch (ParseError const& e) {
    EXPECT_EQ(e.position(), 6u);
  }
}
