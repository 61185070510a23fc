#include <gtest/gtest.h>

#include <random>

#include "heis_mcg/heis_aut.hpp"

using namespace heis;

namespace {

HomologyClass random_class(int g, std::mt19937_64& rng, Int bound = 3) {
  std::uniform_int_distribution<Int> d(-bound, bound);
  std::vector<Int> c(static_cast<std::size_t>(2 * g));
  for (auto& v : c) v = d(rng);
  return {g, c};
}

CohomologyClass random_covector(int g, std::mt19937_64& rng, Int bound = 3) {
  return {g, random_class(g, rng, bound).coeffs()};
}

// Product of a few random transvections along basis vectors and their sums.
SymplecticMatrix random_symplectic(int g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 5), pick(0, 2 * g - 1), sgn(0, 1);
  SymplecticMatrix s = SymplecticMatrix::identity(g);
  for (int i = len(rng); i > 0; --i) {
    HomologyClass c = HomologyClass::basis(g, pick(rng));
    if (sgn(rng)) c = c + HomologyClass::basis(g, pick(rng));
    SymplecticMatrix t = SymplecticMatrix::transvection(c);
    s = sgn(rng) ? s * t : s * t.inverse();
  }
  return s;
}

HeisAut random_aut(int g, std::mt19937_64& rng) { return {random_symplectic(g, rng), random_covector(g, rng)}; }

HeisenbergElement random_element(int g, std::mt19937_64& rng) {
  std::uniform_int_distribution<Int> d(-10, 10);
  return {d(rng), random_class(g, rng)};
}

}  // namespace

TEST(Symplectic, ValidatesOnConstruction) {
  EXPECT_THROW(SymplecticMatrix(1, IntMatrix(2, {2, 0, 0, 1})), Error);
  EXPECT_THROW(SymplecticMatrix(1, IntMatrix(2, {1, 0, 0, -1})), Error);
  EXPECT_NO_THROW(SymplecticMatrix(1, IntMatrix(2, {0, -1, 1, 0})));
  EXPECT_NO_THROW(SymplecticMatrix(1, IntMatrix(2, {1, 3, 0, 1})));
}

TEST(Symplectic, TransvectionPreservesForm) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    SymplecticMatrix s = random_symplectic(2, rng);
    EXPECT_EQ(s.matrix().determinant(), 1);
    EXPECT_TRUE((s * s.inverse()).is_identity());
    auto x = random_class(2, rng), y = random_class(2, rng);
    EXPECT_EQ(intersect(s(x), s(y)), intersect(x, y));
  }
  HomologyClass a1 = HomologyClass::a(1, 1), b1 = HomologyClass::b(1, 1);
  SymplecticMatrix t = SymplecticMatrix::transvection(a1);
  EXPECT_EQ(t(b1), b1 + a1);
  EXPECT_EQ(t(a1), a1);
}

TEST(AutApply, Examples) {
  int g = 1;
  std::mt19937_64 rng(22);
  HeisenbergElement h = random_element(g, rng);
  EXPECT_EQ(aut_apply(HeisAut::identity(g), h), h);
  CohomologyClass c = random_covector(g, rng);
  EXPECT_EQ(aut_apply(HeisAut::from_cohomology(c), h), (HeisenbergElement{h.k + c(h.x), h.x}));
  int g2 = 2;
  HeisAut j = HeisAut::from_cohomology(2 * CohomologyClass::a_star(g2, 1));
  EXPECT_EQ(aut_apply(j, {0, HomologyClass::a(g2, 1)}), (HeisenbergElement{2, HomologyClass::a(g2, 1)}));
}

TEST(AutApply, PreservesProductsInversesAndCenter) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    HeisAut a = random_aut(2, rng);
    auto h1 = random_element(2, rng), h2 = random_element(2, rng);
    EXPECT_EQ(aut_apply(a, heis_mul(h1, h2)), heis_mul(aut_apply(a, h1), aut_apply(a, h2)));
    EXPECT_EQ(aut_apply(a, heis_inv(h1)), heis_inv(aut_apply(a, h1)));
    EXPECT_EQ(aut_apply(a, HeisenbergElement::u(2)), HeisenbergElement::u(2));
  }
}

TEST(AutCompose, Examples) {
  std::mt19937_64 rng(24);
  CohomologyClass c = random_covector(2, rng), cp = random_covector(2, rng);
  EXPECT_EQ(aut_compose(HeisAut::from_cohomology(c), HeisAut::from_cohomology(cp)), HeisAut::from_cohomology(c + cp));
  HeisAut a = random_aut(2, rng);
  EXPECT_EQ(aut_compose(a, HeisAut::identity(2)), a);
  EXPECT_EQ(aut_compose(HeisAut::identity(2), a), a);
}

TEST(AutCompose, ActsAsComposition) {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 300; ++i) {
    HeisAut f = random_aut(2, rng), g = random_aut(2, rng);
    HeisenbergElement h = random_element(2, rng);
    HeisAut gf = aut_compose(g, f);
    EXPECT_EQ(aut_apply(gf, h), aut_apply(g, aut_apply(f, h)));
    EXPECT_EQ(gf.diamond(), f.diamond() + pullback(g.diamond(), f.symplectic()));
  }
}

TEST(AutInverse, Examples) {
  EXPECT_EQ(aut_inverse(HeisAut::identity(2)), HeisAut::identity(2));
  CohomologyClass c = 3 * CohomologyClass::b_star(2, 2);
  EXPECT_EQ(aut_inverse(HeisAut::from_cohomology(c)), HeisAut::from_cohomology(-c));
  std::mt19937_64 rng(26);
  SymplecticMatrix s = random_symplectic(2, rng);
  EXPECT_EQ(aut_inverse(HeisAut::from_symplectic(s)), HeisAut::from_symplectic(s.inverse()));
  for (int i = 0; i < 100; ++i) {
    HeisAut a = random_aut(2, rng);
    EXPECT_EQ(aut_compose(a, aut_inverse(a)), HeisAut::identity(2));
    EXPECT_EQ(aut_compose(aut_inverse(a), a), HeisAut::identity(2));
  }
}

TEST(ShortExactSequence, KernelIsImageOfJ) {
  std::mt19937_64 rng(27);
  for (int i = 0; i < 100; ++i) {
    // L o section = id.
    SymplecticMatrix s = random_symplectic(2, rng);
    EXPECT_EQ(HeisAut::from_symplectic(s).symplectic(), s);
    // Anything with S = I is j(d); j is injective.
    CohomologyClass c = random_covector(2, rng), cp = random_covector(2, rng);
    HeisAut jc = HeisAut::from_cohomology(c);
    EXPECT_TRUE(jc.symplectic().is_identity());
    EXPECT_EQ(jc.diamond(), c);
    if (!(c == cp)) {
      EXPECT_NE(jc, HeisAut::from_cohomology(cp));
    }
  }
}

TEST(ClassifyAut, Examples) {
  int g = 1;
  EXPECT_TRUE(std::holds_alternative<AutIdentity>(classify_aut(HeisAut::identity(g))));
  AutClass c = classify_aut(HeisAut::from_cohomology(2 * CohomologyClass::a_star(g, 1)));
  ASSERT_TRUE(std::holds_alternative<AutInner>(c));
  HomologyClass w = std::get<AutInner>(c).witness;
  EXPECT_EQ(w, -HomologyClass::b(g, 1));
  for (int j = 0; j < 2 * g; ++j) {
    HeisenbergElement e{0, HomologyClass::basis(g, j)};
    EXPECT_EQ(heis_conj({0, w}, e), aut_apply(HeisAut::from_cohomology(2 * CohomologyClass::a_star(g, 1)), e));
  }
  EXPECT_TRUE(std::holds_alternative<AutNonInner>(classify_aut(HeisAut::from_cohomology(CohomologyClass::a_star(g, 1)))));
  EXPECT_TRUE(std::holds_alternative<AutNonInner>(
      classify_aut(HeisAut::from_symplectic(SymplecticMatrix::transvection(HomologyClass::a(g, 1))))));
}

// Brute force: search every x with |coeffs| <= 4 for a conjugation witness.
TEST(ClassifyAut, AgreesWithBruteForce) {
  int g = 1;
  for (Int d0 = -4; d0 <= 4; ++d0) {
    for (Int d1 = -4; d1 <= 4; ++d1) {
      HeisAut a = HeisAut::from_cohomology(CohomologyClass(g, {d0, d1}));
      std::optional<HomologyClass> found;
      for (Int p = -4; p <= 4 && !found; ++p) {
        for (Int q = -4; q <= 4 && !found; ++q) {
          HomologyClass x(g, {p, q});
          bool ok = true;
          for (int j = 0; j < 2 * g; ++j) {
            HeisenbergElement e{0, HomologyClass::basis(g, j)};
            ok = ok && heis_conj({0, x}, e) == aut_apply(a, e);
          }
          if (ok) found = x;
        }
      }
      AutClass c = classify_aut(a);
      if (!found) {
        EXPECT_TRUE(std::holds_alternative<AutNonInner>(c)) << d0 << "," << d1;
      } else if (found->is_zero()) {
        EXPECT_TRUE(std::holds_alternative<AutIdentity>(c));
      } else {
        ASSERT_TRUE(std::holds_alternative<AutInner>(c)) << d0 << "," << d1;
        EXPECT_EQ(std::get<AutInner>(c).witness, *found);
      }
    }
  }
}

TEST(ClassifyAut, InnerOfElementIsInner) {
  std::mt19937_64 rng(28);
  for (int i = 0; i < 100; ++i) {
    HeisenbergElement h = random_element(2, rng);
    HeisAut a = HeisAut::inner(h);
    for (int j = 0; j < 4; ++j) {
      HeisenbergElement e = random_element(2, rng);
      EXPECT_EQ(aut_apply(a, e), heis_conj(h, e));
    }
    AutClass c = classify_aut(a);
    if (h.x.is_zero()) {
      EXPECT_TRUE(std::holds_alternative<AutIdentity>(c));
    } else {
      ASSERT_TRUE(std::holds_alternative<AutInner>(c));
      EXPECT_EQ(std::get<AutInner>(c).witness, h.x);
    }
  }
}

TEST(AutFormat, RoundTrip) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 50; ++i) {
    HeisAut a = random_aut(1 + i % 3, rng);
    EXPECT_EQ(parse_heis_aut(format_heis_aut(a)), a);
  }
  EXPECT_THROW(parse_heis_aut("1 0\n0 1\n"), ParseError);
  EXPECT_THROW(parse_heis_aut("1 0\n0 2\n0 0\n"), Error);
  EXPECT_THROW(parse_heis_aut("1 0\n0 x\n0 0\n"), ParseError);
}
