#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "peerrate/error.hpp"
#include "peerrate/weights.hpp"

using namespace peerrate;

namespace {

WeightVector degree_of(const gen::IntMatrix& c) {
  return degree_weights(normalize(CompetenceMatrix(c)));
}

WeightVector uniform(std::size_t n) {
  return WeightVector(std::vector<double>(n, 1.0 / static_cast<double>(n)),
                      WeightMethod::Degree);
}

/// Every binary off-diagonal pattern of order n, as bits of `mask`.
gen::IntMatrix from_mask(std::size_t n, unsigned long mask) {
  gen::IntMatrix c(n, std::vector<int>(n, 0));
  unsigned bit = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) c[i][j] = (mask >> bit++) & 1U;
  return c;
}

}  // namespace

TEST(DegreeWeights, MatchesPublishedScenarioOne) {
  const WeightVector w = degree_of(golden::matrix(1));
  EXPECT_EQ(w.method(), WeightMethod::Degree);
  const auto& g = golden::kScenarios[0];
  for (std::size_t j = 0; j < 10; ++j) {
    EXPECT_NEAR(w[j], g.w[j], golden::kWeightTolerance) << "student " << j + 1;
  }
  const RatingVector r(golden::kRatings);
  EXPECT_NEAR(degree_weighted_rating(r, w), 3.9614, golden::kWeightTolerance);
}

TEST(DegreeWeights, UnendorsedStudentGetsExactlyZero) {
  const WeightVector w = degree_of(golden::matrix(4));
  EXPECT_EQ(w[golden::kBiasedIndex], 0.0);
  const RatingVector r(golden::kRatings);
  EXPECT_NEAR(degree_weighted_rating(r, w), 4.0529, golden::kWeightTolerance);
}

TEST(DegreeWeights, AllPublishedScenarios) {
  const RatingVector r(golden::kRatings);
  for (const auto& g : golden::kScenarios) {
    const WeightVector w = degree_of(golden::matrix(g.id));
    for (std::size_t j = 0; j < 10; ++j) {
      EXPECT_NEAR(w[j], g.w[j], golden::kWeightTolerance)
          << "scenario " << g.id << " student " << j + 1;
    }
    EXPECT_NEAR(degree_weighted_rating(r, w), g.r_d, golden::kRatingTolerance);
  }
}

TEST(DegreeWeights, FullSymmetryIsUniform) {
  for (std::size_t n = 2; n <= 9; ++n) {
    const WeightVector w = degree_of(gen::all_ones(n));
    for (std::size_t j = 0; j < n; ++j) EXPECT_NEAR(w[j], 1.0 / n, 1e-15);
  }
}

TEST(DegreeWeights, AllDanglingIsDegenerate) {
  try {
    degree_of(gen::IntMatrix(4, std::vector<int>(4, 0)));
    FAIL() << "expected DegenerateNetwork";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateNetwork);
  }
  EXPECT_THROW(degree_of({{0}}), Error);
}

TEST(DegreeWeightedRating, UniformWeightsGiveMean) {
  gen::Rng rng(21);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + t % 10;
    const RatingVector r(gen::real_ratings(rng, n));
    EXPECT_NEAR(degree_weighted_rating(r, uniform(n)), r.mean(), 1e-12);
  }
}

TEST(DegreeWeightedRating, Errors) {
  const RatingVector r({4, 4, 3});
  try {
    degree_weighted_rating(r, uniform(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
  const WeightVector eig({0.5, 0.25, 0.25}, WeightMethod::Eigenfactor);
  EXPECT_THROW(degree_weighted_rating(r, eig), Error);
}

TEST(WeightVector, RejectsInvalidWeights) {
  EXPECT_THROW(WeightVector({0.5, 0.6}, WeightMethod::Degree), Error);
  EXPECT_THROW(WeightVector({1.5, -0.5}, WeightMethod::Degree), Error);
  EXPECT_THROW(WeightVector({}, WeightMethod::Degree), Error);
  EXPECT_NO_THROW(WeightVector({0.5, 0.5 + 5e-10}, WeightMethod::Degree));
}

// Exhaustive over all 2^6 patterns at n = 3 and all 2^12 at n = 4.
TEST(DegreeWeightsOracle, MatchesExactCountFormulaExhaustively) {
  for (std::size_t n : {2u, 3u, 4u}) {
    const unsigned long patterns = 1UL << (n * (n - 1));
    for (unsigned long mask = 0; mask < patterns; ++mask) {
      const auto c = from_mask(n, mask);
      const std::vector<double> expected = oracle::degree_weights_from_counts(c);
      if (expected.empty()) {
        EXPECT_THROW(degree_of(c), Error);
        continue;
      }
      const WeightVector w = degree_of(c);
      for (std::size_t j = 0; j < n; ++j) {
        ASSERT_NEAR(w[j], expected[j], 1e-14) << "n=" << n << " mask=" << mask;
      }
    }
  }
}

TEST(DegreeWeightsOracle, MatchesExactCountFormulaSampled) {
  gen::Rng rng(22);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 5 + t % 8;
    const auto c = gen::nondegenerate(rng, n, 0.2 + 0.1 * (t % 7));
    const auto expected = oracle::degree_weights_from_counts(c);
    const WeightVector w = degree_of(c);
    for (std::size_t j = 0; j < n; ++j) ASSERT_NEAR(w[j], expected[j], 1e-14);
  }
}

TEST(DegreeProperty, ConvexityAndNormalization) {
  gen::Rng rng(23);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 2 + t % 11;
    const auto c = gen::nondegenerate(rng, n, 0.15 + 0.1 * (t % 8));
    const WeightVector w = degree_of(c);
    double sum = 0.0;
    for (double x : w.weights()) {
      ASSERT_GE(x, 0.0);
      sum += x;
    }
    ASSERT_NEAR(sum, 1.0, kWeightSumTolerance);
    const RatingVector r(gen::real_ratings(rng, n));
    const double rd = degree_weighted_rating(r, w);
    ASSERT_GE(rd, r.min());
    ASSERT_LE(rd, r.max());
  }
}

TEST(DegreeProperty, ZeroInDegreeRatingIsIrrelevant) {
  gen::Rng rng(24);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 3 + t % 8;
    auto c = gen::nondegenerate(rng, n);
    const std::size_t j = t % n;
    for (std::size_t i = 0; i < n; ++i) c[i][j] = 0;
    bool any = false;
    for (const auto& row : c)
      for (int v : row) any = any || v;
    if (!any) continue;
    const WeightVector w = degree_of(c);
    ASSERT_EQ(w[j], 0.0);
    auto values = gen::likert(rng, n);
    const double base = degree_weighted_rating(RatingVector(values), w);
    for (double x : {1.0, 2.5, 5.0}) {
      values[j] = x;
      ASSERT_EQ(degree_weighted_rating(RatingVector(values), w), base);
    }
  }
}

TEST(DegreeProperty, AffineEquivariance) {
  gen::Rng rng(25);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + t % 10;
    const WeightVector w = degree_of(gen::nondegenerate(rng, n));
    const auto values = gen::real_ratings(rng, n);
    const double a = coef(rng);
    const double b = coef(rng);
    std::vector<double> shifted(n);
    for (std::size_t k = 0; k < n; ++k) shifted[k] = a * values[k] + b;
    const LikertScale wide{-100, 100};
    const double base = degree_weighted_rating(RatingVector(values, wide), w);
    const double moved = degree_weighted_rating(RatingVector(shifted, wide), w);
    ASSERT_NEAR(moved, a * base + b, 1e-9);
  }
}

TEST(DegreeProperty, PermutationEquivariance) {
  gen::Rng rng(26);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + t % 10;
    const auto c = gen::nondegenerate(rng, n);
    const auto perm = gen::permutation(rng, n);
    const auto values = gen::real_ratings(rng, n);
    const WeightVector w = degree_of(c);
    const WeightVector wp = degree_of(gen::permute(c, perm));
    for (std::size_t a = 0; a < n; ++a) ASSERT_NEAR(wp[a], w[perm[a]], 1e-15);
    ASSERT_NEAR(degree_weighted_rating(RatingVector(gen::permute(values, perm)), wp),
                degree_weighted_rating(RatingVector(values), w), 1e-12);
  }
}
