#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "hatlab/braid.hpp"
#include "hatlab/garside.hpp"
#include "hatlab/permutation.hpp"
#include "support.hpp"

using namespace hatlab;

TEST(BraidParse, LetterForm) {
  EXPECT_EQ(parse_braid("xY", 3).letters, (std::vector<int>{1, -2}));
  EXPECT_EQ(parse_braid("x^3yX^3y", 3).letters, (std::vector<int>{1, 1, 1, 2, -1, -1, -1, 2}));
  EXPECT_EQ(parse_braid("wZ", 5).letters, (std::vector<int>{4, -3}));
  EXPECT_TRUE(parse_braid("", 4).empty());
}

TEST(BraidParse, NumericFormAndWhitespace) {
  EXPECT_EQ(parse_braid("s1 S2 s5^2", 6).letters, (std::vector<int>{1, -2, 5, 5}));
  EXPECT_EQ(parse_braid(" x  y ", 3), parse_braid("xy", 3));
}

TEST(BraidParse, NegativePowerInverts) {
  EXPECT_EQ(parse_braid("x^-2", 2).letters, (std::vector<int>{-1, -1}));
  EXPECT_EQ(parse_braid("X^-1", 2).letters, (std::vector<int>{1}));
  EXPECT_TRUE(parse_braid("x^0", 2).empty());
}

TEST(BraidParse, Errors) {
  EXPECT_THROW(parse_braid("xq", 3), ParseError);
  EXPECT_THROW(parse_braid("z", 3), ParseError);
  EXPECT_THROW(parse_braid("s7", 6), ParseError);
  EXPECT_THROW(parse_braid("x^", 3), ParseError);
  EXPECT_THROW(parse_braid("s", 3), ParseError);
  try {
    parse_braid("xy?", 3);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("offset 2"), std::string::npos);
  }
}

TEST(BraidPrint, FoldsPositivePowers) {
  EXPECT_EQ(to_string(parse_braid("xxyXX", 3)), "x^2yX^2");
  EXPECT_EQ(to_string(BraidWord{7, {1, 1, -6}}), "s1^2 S6");
  EXPECT_EQ(to_string(BraidWord{3, {}}), "");
}

TEST(BraidPrint, RoundTripsRandomWords) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    BraidWord w = hatlab::testing::random_word(rng, 2 + i % 7, 20);
    EXPECT_EQ(parse_braid(to_string(w), w.strands), w);
  }
}

TEST(BraidWordCtor, RejectsOutOfRangeGenerators) {
  EXPECT_THROW((BraidWord{3, {3}}), DomainError);
  EXPECT_THROW((BraidWord{3, {0}}), DomainError);
  EXPECT_THROW((BraidWord{0, {}}), DomainError);
}

TEST(BraidOps, ProductRequiresSameStrands) {
  EXPECT_THROW(BraidWord(3, {1}) * BraidWord(4, {1}), DomainError);
}

TEST(BraidOps, InverseAndPower) {
  BraidWord w = parse_braid("xyZ", 4);
  EXPECT_EQ(inverse(w), parse_braid("zYX", 4));
  EXPECT_TRUE((w * inverse(w)).size() == 6);
  EXPECT_TRUE(equal(w * inverse(w), BraidWord{4, {}}));
  EXPECT_EQ(power(w, -2), inverse(w) * inverse(w));
}

TEST(SelfLinking, WorkedValues) {
  EXPECT_EQ(self_linking(parse_braid("xy^2x^2y^7", 3)), 9);
  EXPECT_EQ(self_linking(torus_braid(3, 11)), 19);
  EXPECT_EQ(self_linking(parse_braid("x^3yX^3y", 3)), -1);
  EXPECT_EQ(self_linking(BraidWord{1, {}}), -1);
}

TEST(SelfLinking, RejectsLinks) {
  EXPECT_THROW(self_linking(parse_braid("x^2", 2)), DomainError);
  EXPECT_EQ(closure_components(parse_braid("x^2", 2)), 2);
  EXPECT_EQ(closure_components(BraidWord{4, {}}), 4);
}

// slk of the positive torus braid versus 2g - 1 with g = (p-1)(q-1)/2
TEST(SelfLinking, TorusBraidsMatchMilnorGenus) {
  for (int p = 2; p <= 10; ++p)
    for (int q = p + 1; q <= 10; ++q) {
      if (std::gcd(p, q) != 1) continue;
      EXPECT_EQ(self_linking(torus_braid(p, q)), p * q - p - q);
      EXPECT_EQ(self_linking(torus_braid(p, q)), (p - 1) * (q - 1) - 1);
    }
}

TEST(Permutation, CompositionReadsLeftToRight) {
  Permutation a = Permutation::transposition(3, 0), b = Permutation::transposition(3, 1);
  Permutation ab = a * b;
  // strand 0 goes to 1 under a, then to 2 under b
  EXPECT_EQ(ab[0], 2);
  EXPECT_EQ(ab.inverse() * ab, Permutation(3));
  EXPECT_EQ(underlying_permutation(parse_braid("xy", 3)), ab);
  EXPECT_EQ(ab.cycle_count(), 1);
  EXPECT_THROW(Permutation(std::vector<int>{0, 0, 1}), DomainError);
}

TEST(Conjugation, PreservesInvariantsOfClosure) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    BraidWord w = hatlab::testing::random_word(rng, 4, 12), c = hatlab::testing::random_word(rng, 4, 6);
    BraidWord v = conjugate(w, c);
    EXPECT_EQ(exponent_sum(v), exponent_sum(w));
    EXPECT_EQ(closure_components(v), closure_components(w));
    for (long long k = -3; k <= 3; ++k) {
      BraidWord r = cyclic_permute(w, k);
      EXPECT_EQ(closure_components(r), closure_components(w));
      EXPECT_EQ(exponent_sum(r), exponent_sum(w));
    }
  }
}

TEST(CyclicPermute, RotatesLeft) {
  EXPECT_EQ(cyclic_permute(parse_braid("xyz", 4), 1), parse_braid("yzx", 4));
  EXPECT_EQ(cyclic_permute(parse_braid("xyz", 4), -1), parse_braid("zxy", 4));
  EXPECT_EQ(cyclic_permute(parse_braid("xyz", 4), 3), parse_braid("xyz", 4));
}

TEST(Markov, StabilizationShiftsSelfLinking) {
  BraidWord w = parse_braid("x^3", 2);
  EXPECT_EQ(self_linking(markov_stabilize(w, +1)), self_linking(w));
  EXPECT_EQ(self_linking(markov_stabilize(w, -1)), self_linking(w) - 2);
  EXPECT_EQ(markov_destabilize(markov_stabilize(w, +1)), w);
  EXPECT_THROW(markov_stabilize(w, 0), DomainError);
}

TEST(Markov, DestabilizeRotatesLoneTopGenerator) {
  // x^4yx ~ x^5 after removing the single y
  EXPECT_EQ(markov_destabilize(parse_braid("x^4yx", 3)), parse_braid("x^5", 2));
  EXPECT_THROW(markov_destabilize(parse_braid("xy^2", 3)), DomainError);
  EXPECT_THROW(markov_destabilize(parse_braid("xY", 3)), DomainError);
  EXPECT_THROW(markov_destabilize(BraidWord{1, {}}), DomainError);
}

TEST(Twists, HalfTwistSquaredIsFullTwist) {
  for (int n = 2; n <= 6; ++n) {
    EXPECT_TRUE(equal(power(half_twist(n), 2), full_twist(n))) << n;
    EXPECT_TRUE(equal(recursive_full_twist(n), full_twist(n))) << n;
    EXPECT_EQ(underlying_permutation(half_twist(n)), Permutation::reversal(n));
  }
}

TEST(Twists, DeltaSquareScriptBuildsFullTwistFromAnySquare) {
  for (int n = 2; n <= 7; ++n)
    for (int i = 1; i < n; ++i) {
      BraidWord w{n, {i, i}};
      for (const auto& s : delta_square_script(n, i)) apply_square_insertion(w, s);
      EXPECT_EQ(w, recursive_full_twist(n)) << "n=" << n << " i=" << i;
      EXPECT_EQ(static_cast<int>(w.size()), n * (n - 1));
    }
  EXPECT_THROW(delta_square_script(3, 3), DomainError);
}
