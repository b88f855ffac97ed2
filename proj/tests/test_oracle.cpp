#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "fixtures.hpp"
#include "recten/bounds.hpp"
#include "recten/error.hpp"
#include "recten/oracle.hpp"
#include "recten/random.hpp"

namespace recten {
namespace {

using testing::a_ex;
using testing::diagonal_identity;

RectangularTensor scaled(const RectangularTensor& a, double c) {
  std::vector<Entry> entries = a.entries();
  for (Entry& e : entries) e.value *= c;
  return RectangularTensor(a.shape(), std::move(entries));
}

TEST(Residual, Examples) {
  const std::vector<double> e1{1, 0, 0};
  EXPECT_EQ(residual(diagonal_identity(), 1.0, e1, e1), 0.0);
  const std::vector<double> x{1, 0.5, 0.25}, y{0.3, 1, 0.7};
  EXPECT_EQ(residual(RectangularTensor::zero({2, 2, 3, 3}), 0.0, x, y), 0.0);
  // Not a singular pair: residual is the largest equation mismatch.
  EXPECT_EQ(residual(diagonal_identity(), 2.0, e1, e1), 1.0);
  EXPECT_THROW(residual(a_ex(), 1.0, std::vector<double>{1, 1}, e1), ShapeError);
}

TEST(PowerLambdaMax, ExampleTensor) {
  const auto a = a_ex();
  const SingularPair pair = power_lambda_max(a, {1e-10, 10000, 4, 42, 1});
  EXPECT_EQ(pair.status, PairStatus::converged);
  EXPECT_NEAR(pair.lambda, 18.0755, 5e-5);
  EXPECT_LE(pair.residual, 1e-8);
  EXPECT_EQ(pair.residual, residual(a, pair));
  EXPECT_LE(pair.bracket_lower, pair.lambda);
  EXPECT_GE(pair.bracket_upper, pair.lambda);
  EXPECT_LE(pair.iterations, 10000);
}

TEST(PowerLambdaMax, TrivialTensors) {
  const SingularPair id = power_lambda_max(diagonal_identity());
  EXPECT_EQ(id.status, PairStatus::converged);
  EXPECT_DOUBLE_EQ(id.lambda, 1.0);

  const SingularPair zero = power_lambda_max(RectangularTensor::zero({1, 2, 3, 3}));
  EXPECT_EQ(zero.status, PairStatus::degenerate_zero);
  EXPECT_EQ(zero.lambda, 0.0);
}

TEST(PowerLambdaMax, MatrixCaseMatchesLargestSingularValue) {
  // p = q = 1 reduces to the ordinary largest singular value.
  // [[2, 1], [0, 3]]: sigma_max^2 is the top eigenvalue of A^T A = [[4, 2], [2, 10]].
  RectangularTensor a({1, 1, 2, 2}, {{{1}, {1}, 2.0}, {{1}, {2}, 1.0}, {{2}, {2}, 3.0}});
  const double expected = std::sqrt(7.0 + std::sqrt(9.0 + 4.0));
  const SingularPair pair = power_lambda_max(a);
  EXPECT_EQ(pair.status, PairStatus::converged);
  EXPECT_NEAR(pair.lambda, expected, 1e-9);
}

TEST(PowerLambdaMax, Errors) {
  RectangularTensor negative({1, 1, 2, 2}, {{{1}, {1}, -1.0}});
  EXPECT_THROW(power_lambda_max(negative), NonnegativityError);
  EXPECT_THROW(power_lambda_max(a_ex(), {0.0, 10, 1, 1, 1}), DomainError);
  EXPECT_THROW(power_lambda_max(a_ex(), {1e-10, 0, 1, 1, 1}), DomainError);

  RectangularTensor huge({1, 1, 2, 2}, {{{1}, {1}, 1.7e308}, {{1}, {2}, 1.7e308}});
  try {
    power_lambda_max(huge);
    FAIL() << "expected NumericError";
  } catch (const NumericError& e) {
    EXPECT_EQ(e.iteration(), 0);
  }
}

TEST(PowerLambdaMax, MaxIterationsStatus) {
  const SingularPair pair = power_lambda_max(a_ex(), {1e-14, 2, 1, 42, 1});
  EXPECT_EQ(pair.status, PairStatus::max_iterations);
  EXPECT_GT(pair.lambda, 0.0);
}

TEST(PowerLambdaMax, DeterministicAcrossRunsAndThreads) {
  const auto corpus = random_corpus(7, 10);
  for (const RectangularTensor& a : corpus) {
    const SingularPair one = power_lambda_max(a, {1e-10, 5000, 4, 99, 1});
    const SingularPair again = power_lambda_max(a, {1e-10, 5000, 4, 99, 1});
    const SingularPair threaded = power_lambda_max(a, {1e-10, 5000, 4, 99, 4});
    for (const SingularPair* other : {&again, &threaded}) {
      EXPECT_EQ(one.lambda, other->lambda);
      EXPECT_EQ(one.x, other->x);
      EXPECT_EQ(one.y, other->y);
      EXPECT_EQ(one.status, other->status);
      EXPECT_EQ(one.start, other->start);
    }
  }
}

TEST(OracleProperties, RandomCorpus) {
  const auto corpus = random_corpus(4242, 120);
  int converged = 0;
  for (const RectangularTensor& a : corpus) {
    const OracleOptions opts;
    const SingularPair pair = power_lambda_max(a, opts);
    EXPECT_GE(pair.lambda, 0.0);
    if (pair.status != PairStatus::converged) continue;
    ++converged;
    EXPECT_LE(pair.residual, opts.tol * std::max(1.0, pair.lambda));
    const double top = std::max(*std::max_element(pair.x.begin(), pair.x.end()),
                                *std::max_element(pair.y.begin(), pair.y.end()));
    EXPECT_EQ(top, 1.0);
    EXPECT_TRUE(std::all_of(pair.x.begin(), pair.x.end(), [](double v) { return v >= 0; }));
    EXPECT_TRUE(std::all_of(pair.y.begin(), pair.y.end(), [](double v) { return v >= 0; }));

    const BoundPair yq = yang_qi_bounds(a);
    EXPECT_GE(pair.lambda, yq.lower - 1e-6);
    EXPECT_LE(pair.lambda, yq.upper + 1e-6);
    const int n = a.n();
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
      const IndexSubset s = IndexSubset::from_mask(mask, n);
      const BoundPair tp = theta_phi_bounds(a, s);
      EXPECT_GE(pair.lambda, tp.lower - 1e-6);
      EXPECT_LE(pair.lambda, tp.upper + 1e-6);
      EXPECT_TRUE(contains(psi_set(a, s), pair.lambda));
    }
    for (double c : {0.5, 3.0}) {
      const SingularPair sc = power_lambda_max(scaled(a, c), opts);
      if (sc.status == PairStatus::converged) EXPECT_NEAR(sc.lambda, c * pair.lambda, 1e-8 * c * pair.lambda);
    }
  }
  EXPECT_GE(converged, 60);
}

TEST(VerifyInclusion, Examples) {
  const auto a = a_ex();
  const IndexSubset s({3}, 3);
  const InclusionCheck all = verify_inclusion(a, testing::a_ex_h_singular_values(), s);
  EXPECT_TRUE(all.all_inside());
  EXPECT_EQ(all.candidates.size(), 15u);
  EXPECT_NEAR(all.psi_radius, 31.8692, 5e-5);
  EXPECT_NEAR(all.upsilon_radius, 33.2547, 5e-5);

  const std::vector<double> zero_candidates{0.0};
  EXPECT_TRUE(verify_inclusion(RectangularTensor::zero({1, 1, 2, 2}), zero_candidates, IndexSubset({2}, 2))
                  .all_inside());

  const std::vector<double> bad{35.0, 32.5};
  const InclusionCheck check = verify_inclusion(a, bad, s);
  EXPECT_FALSE(check.all_inside());
  EXPECT_FALSE(check.candidates[0].in_psi);
  EXPECT_FALSE(check.candidates[0].in_upsilon);
  EXPECT_TRUE(check.candidates[0].violation);
  // Between the two radii: outside psi only.
  EXPECT_FALSE(check.candidates[1].in_psi);
  EXPECT_TRUE(check.candidates[1].in_upsilon);
}

}  // namespace
}  // namespace recten
