#include <gtest/gtest.h>

#include <random>

#include "heis_mcg/catalog.hpp"
#include "heis_mcg/free_group.hpp"
#include "heis_mcg/mapping_class.hpp"

using namespace heis;

namespace {

HeisenbergElement gen(int g, int j) { return {0, HomologyClass::basis(g, j)}; }

class McgTest : public ::testing::Test {
 protected:
  Catalog cat = Catalog::builtin(2);
  std::mt19937_64 rng{31};
  std::uniform_int_distribution<std::size_t> len{1, 6};

  MappingClass random_class() { return parse_class_word(random_class_word(cat, len(rng), rng), cat); }
};

}  // namespace

TEST(FreeWord, ReductionAndInverse) {
  FreeWord w = parse_free_word("a1 b1 b1' a2 a2' a1'", 2);
  EXPECT_TRUE(w.reduced().empty());
  EXPECT_EQ(w.reduced().reduced(), w.reduced());
  FreeWord x = parse_free_word("a1 b2' a2", 2);
  EXPECT_TRUE((x * x.inverse()).empty());
  EXPECT_EQ(render(x), "a1 b2' a2");
  EXPECT_EQ(parse_free_word(render(x), 2), x);
  EXPECT_THROW(parse_free_word("s1", 2), ParseError);
  EXPECT_THROW(parse_free_word("a3", 2), IndexOutOfRange);
}

TEST(FreeWord, BoundaryWord) {
  EXPECT_EQ(render(boundary_word(2)), "a1 b1 a1' b1' a2 b2 a2' b2'");
  EXPECT_EQ(heis_image(boundary_word(3)), (HeisenbergElement{6, HomologyClass::zero(3)}));
}

TEST(FreeWord, HeisImageIsHomomorphism) {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> pick(0, 5), sgn(0, 1);
  for (int i = 0; i < 300; ++i) {
    std::vector<FreeLetter> l1, l2;
    for (int k = 0; k < i % 9; ++k) l1.push_back({pick(rng), sgn(rng) == 1});
    for (int k = 0; k < i % 7; ++k) l2.push_back({pick(rng), sgn(rng) == 1});
    FreeWord w1(3, l1), w2(3, l2);
    EXPECT_EQ(heis_image(w1 * w2), heis_mul(heis_image(w1), heis_image(w2)));
    EXPECT_EQ(heis_image(w1).x, abelianize(w1));
  }
}

TEST(MappingClass, RejectsInvalidData) {
  int g = 1;
  auto id = [&] {
    std::vector<FreeWord> r;
    for (int j = 0; j < 2 * g; ++j) r.push_back(FreeWord::generator(g, j));
    return r;
  };
  // alpha -> alpha beta with the wrong inverse.
  auto fwd = id();
  fwd[0] = parse_free_word("a1 b1", g);
  EXPECT_THROW(MappingClass(g, fwd, id()), Error);
  // alpha -> alpha beta with its true inverse is a twist and is accepted.
  auto inv = id();
  inv[0] = parse_free_word("a1 b1'", g);
  EXPECT_NO_THROW(MappingClass(g, fwd, inv));
  // Swapping alpha and beta sends the boundary word to its inverse.
  std::vector<FreeWord> swap = {FreeWord::generator(g, 1), FreeWord::generator(g, 0)};
  EXPECT_THROW(MappingClass(g, swap, swap), Error);
}

TEST(MappingClass, LiteralBoundingPairWordsMoveTheBoundary) {
  FreeWord k = commutator(FreeWord::alpha(2, 2), FreeWord::beta(2, 2));
  FreeWord c = parse_free_word("a1 b1 a1'", 2);
  std::vector<FreeWord> lit = {
      k * FreeWord::alpha(2, 1),
      k * c * FreeWord::alpha(2, 2) * c.inverse() * k.inverse(),
      FreeWord::beta(2, 1),
      k * c * FreeWord::beta(2, 2) * c.inverse() * k.inverse(),
  };
  EXPECT_NE(substitute(boundary_word(2), lit), boundary_word(2));
}

TEST_F(McgTest, CatalogEntriesAreValid) {
  for (int g = 1; g <= 3; ++g) {
    Catalog c = Catalog::builtin(g);
    for (auto const& f : c.entries()) {
      EXPECT_EQ(f.apply(boundary_word(g)), boundary_word(g)) << f.name();
      EXPECT_EQ(f.symplectic().matrix().determinant(), 1);
    }
  }
}

TEST_F(McgTest, DehnTwistsAbelianizeToTransvections) {
  for (int g = 1; g <= 3; ++g) {
    Catalog c = Catalog::builtin(g);
    for (int i = 1; i <= g; ++i) {
      EXPECT_EQ(c.get("Ta" + std::to_string(i)).symplectic(), SymplecticMatrix::transvection(HomologyClass::a(g, i)));
      EXPECT_EQ(c.get("Tb" + std::to_string(i)).symplectic(), SymplecticMatrix::transvection(HomologyClass::b(g, i)));
      auto flags = classify_subgroups(c.get("Ta" + std::to_string(i)));
      EXPECT_FALSE(flags.torelli);
      EXPECT_FALSE(flags.inner_witness.has_value());
      EXPECT_TRUE(classify_subgroups(c.get("Tsep" + std::to_string(i))).chillingworth);
    }
  }
}

TEST_F(McgTest, IdentityInducesIdentity) {
  MappingClass id = MappingClass::identity(2);
  EXPECT_EQ(id.heis_aut(), HeisAut::identity(2));
  EXPECT_TRUE(id.delta().is_zero());
  auto flags = classify_subgroups(id);
  EXPECT_TRUE(flags.torelli && flags.earle_morita && flags.chillingworth);
  EXPECT_EQ(*flags.inner_witness, HomologyClass::zero(2));
}

TEST_F(McgTest, BoundingPairImages) {
  MappingClass bp = cat.get("BP");
  int g = 2;
  EXPECT_EQ(aut_apply(bp.heis_aut(), gen(g, 0)), (HeisenbergElement{2, HomologyClass::a(g, 1)}));
  EXPECT_EQ(aut_apply(bp.heis_aut(), gen(g, 1)), (HeisenbergElement{0, HomologyClass::a(g, 2)}));
  EXPECT_EQ(aut_apply(bp.heis_aut(), gen(g, 3)), (HeisenbergElement{0, HomologyClass::b(g, 2)}));
  EXPECT_EQ(aut_apply(bp.heis_aut(), gen(g, 2)), gen(g, 2));
  EXPECT_EQ(bp.delta(), 2 * CohomologyClass::a_star(g, 1));
  // a~_1 -> [a~_2, b~_2] a~_1.
  HeisenbergElement k = heis_commutator(gen(g, 1), gen(g, 3));
  EXPECT_EQ(aut_apply(bp.heis_aut(), gen(g, 0)), heis_mul(k, gen(g, 0)));
}

TEST_F(McgTest, BoundingPairSquared) {
  MappingClass bp2 = mcg_compose(cat.get("BP"), cat.get("BP"));
  EXPECT_TRUE(bp2.symplectic().is_identity());
  EXPECT_EQ(bp2.delta(), 4 * CohomologyClass::a_star(2, 1));
}

TEST_F(McgTest, BoundingPairClassification) {
  auto flags = classify_subgroups(cat.get("BP"));
  EXPECT_TRUE(flags.torelli);
  EXPECT_FALSE(flags.earle_morita);
  EXPECT_FALSE(flags.chillingworth);
  ASSERT_TRUE(flags.inner_witness.has_value());
  EXPECT_EQ(*flags.inner_witness, -HomologyClass::b(2, 1));
}

TEST_F(McgTest, ComposeWithInverseIsIdentity) {
  for (int i = 0; i < 50; ++i) {
    MappingClass f = random_class();
    MappingClass e = mcg_compose(f, mcg_inverse(f));
    EXPECT_EQ(e.forward_images(), MappingClass::identity(2).forward_images());
    EXPECT_EQ(e.heis_aut(), HeisAut::identity(2));
  }
}

TEST_F(McgTest, PsiIsFunctorial) {
  for (int i = 0; i < 100; ++i) {
    MappingClass f = random_class(), g = random_class();
    EXPECT_EQ(mcg_compose(g, f).heis_aut(), aut_compose(g.heis_aut(), f.heis_aut()));
    EXPECT_EQ(mcg_inverse(f).heis_aut(), aut_inverse(f.heis_aut()));
  }
}

TEST_F(McgTest, CrossedHomomorphismLaw) {
  for (int i = 0; i < 200; ++i) {
    MappingClass f = random_class(), g = random_class();
    EXPECT_EQ(mcg_compose(g, f).delta(), f.delta() + pullback(g.delta(), f.symplectic()));
  }
}

TEST_F(McgTest, ConjugationEquivarianceOnTorelli) {
  for (auto const& s_name : {"BP", "Tsep1", "Tsep2"}) {
    MappingClass s = cat.get(s_name);
    for (int i = 0; i < 40; ++i) {
      MappingClass g = random_class();
      MappingClass c = mcg_compose(mcg_inverse(g), mcg_compose(s, g));
      EXPECT_TRUE(c.symplectic().is_identity());
      EXPECT_EQ(c.delta(), pullback(s.delta(), g.symplectic()));
    }
  }
}

TEST_F(McgTest, SubgroupFlagsOfRandomTorelliWords) {
  for (int i = 0; i < 50; ++i) {
    MappingClass t = parse_class_word(random_torelli_word(cat, rng), cat);
    auto flags = classify_subgroups(t);
    ASSERT_TRUE(flags.torelli);
    EXPECT_TRUE(t.delta().is_even());
    EXPECT_EQ(HeisAut::inner({0, *flags.inner_witness}), t.heis_aut());
  }
}

TEST_F(McgTest, Stabilization) {
  MappingClass id3 = stabilize(MappingClass::identity(2), 3);
  EXPECT_EQ(id3.heis_aut(), HeisAut::identity(3));
  MappingClass bp3 = stabilize(cat.get("BP"), 3);
  EXPECT_EQ(bp3.delta(), 2 * CohomologyClass::a_star(3, 1));
  EXPECT_EQ(bp3.heis_aut(), Catalog::builtin(3).get("BP").heis_aut());
  EXPECT_THROW(stabilize(cat.get("BP"), 2), Error);
  for (int i = 0; i < 50; ++i) {
    MappingClass f = random_class();
    MappingClass s = stabilize(f, 4);
    EXPECT_EQ(classify_subgroups(f).torelli, classify_subgroups(s).torelli);
    for (int j = 0; j < 4; ++j) {
      HomologyClass e = HomologyClass::basis(2, j);
      EXPECT_EQ(s.delta()(stabilize(e, 4)), f.delta()(e));
      EXPECT_EQ(s.symplectic()(stabilize(e, 4)), stabilize(f.symplectic()(e), 4));
    }
    for (int i2 = 3; i2 <= 4; ++i2) {
      EXPECT_EQ(s.delta()(HomologyClass::a(4, i2)), 0);
      EXPECT_EQ(s.delta()(HomologyClass::b(4, i2)), 0);
      EXPECT_EQ(s.symplectic()(HomologyClass::a(4, i2)), HomologyClass::a(4, i2));
    }
  }
}

TEST_F(McgTest, ClassWordParsing) {
  MappingClass w = parse_class_word("Ta1 Tb1'", cat);
  EXPECT_EQ(w.heis_aut(), aut_compose(cat.get("Ta1").heis_aut(), aut_inverse(cat.get("Tb1").heis_aut())));
  EXPECT_EQ(parse_class_word("", cat).heis_aut(), HeisAut::identity(2));
  EXPECT_THROW(parse_class_word("Nope", cat), Error);
  EXPECT_EQ(inverse_name("Ta1 Tb1'"), "Tb1 Ta1'");
}

TEST_F(McgTest, CatalogFileRoundTrip) {
  std::string text;
  for (auto const& f : cat.entries()) text += format_catalog_entry(f) + "\n";
  auto parsed = parse_catalog("# catalog\n" + text);
  ASSERT_EQ(parsed.size(), cat.entries().size());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    EXPECT_EQ(parsed[i].name(), cat.entries()[i].name());
    EXPECT_EQ(parsed[i].heis_aut(), cat.entries()[i].heis_aut());
  }
}

TEST(CatalogFile, Errors) {
  EXPECT_THROW(parse_catalog("alpha_1 -> a1\n"), ParseError);
  EXPECT_THROW(parse_catalog("name: x\nalpha_1 -> a1\nbeta_1 -> b1\nalpha_1 -> a1\n"), ParseError);
  EXPECT_THROW(parse_catalog("name: x\nalpha_1 -> a1\nalpha_1 -> b1\nalpha_1 -> a1\nbeta_1 -> b1\n"), ParseError);
  EXPECT_THROW(parse_catalog("name: x\ngamma_1 -> a1\nbeta_1 -> b1\nalpha_1 -> a1\nbeta_1 -> b1\n"), ParseError);
  // Valid syntax, wrong inverse.
  EXPECT_THROW(parse_catalog("name: x\nalpha_1 -> a1\nbeta_1 -> b1 a1\nalpha_1 -> a1\nbeta_1 -> b1\n"), Error);
  auto ok = parse_catalog("name: T\nalpha_1 -> a1\nbeta_1 -> b1 a1\nalpha_1 -> a1\nbeta_1 -> b1 a1'\n");
  ASSERT_EQ(ok.size(), 1u);
  EXPECT_EQ(ok[0].heis_aut(), Catalog::builtin(1).get("Ta1").heis_aut());
}
