#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "recten/inclusion.hpp"
#include "recten/tensor.hpp"

namespace recten {

enum class PairStatus { converged, max_iterations, degenerate_zero };

std::string_view to_string(PairStatus s) noexcept;

/// Candidate solution of
///   A x^{p-1} y^q = lambda x^{[l-1]},   A x^p y^{q-1} = lambda y^{[l-1]}.
/// x and y are nonnegative and scaled jointly so the largest component over
/// both vectors is 1.
struct SingularPair {
  double lambda = 0.0;
  std::vector<double> x;
  std::vector<double> y;
  double residual = 0.0;
  PairStatus status = PairStatus::max_iterations;
  long iterations = 0;  // for the winning start
  int start = 0;        // 0 is the all-ones start
  double bracket_lower = 0.0;
  double bracket_upper = 0.0;
};

/// Max-norm residual of both defining equations.
double residual(const RectangularTensor& a, double lambda, std::span<const double> x, std::span<const double> y);
double residual(const RectangularTensor& a, const SingularPair& pair);

struct OracleOptions {
  double tol = 1e-10;
  long max_iter = 10000;
  int restarts = 4;  // total number of starts, the first being all-ones
  std::uint64_t seed = 42;
  unsigned threads = 1;
};

/// Largest singular value of a nonnegative tensor by normalized fixed-point
/// iteration
///   x <- (A x^{p-1} y^q)^{[1/(l-1)]},  y <- (A x^p y^{q-1})^{[1/(l-1)]}
/// with each vector max-normalized. The two equations then hold with
/// separate ratio ranges [mu_min, mu_max] and [nu_min, nu_max]; rescaling y
/// balances them, and the scale-free bracket
///   mu_min^{p/l} nu_min^{q/l} <= lambda_0 <= mu_max^{p/l} nu_max^{q/l}
/// is the stopping test. A start converges once the bracket is within
/// tol * max(1, upper) and the balanced pair has residual <= tol * max(1, lambda).
///
/// Throws NonnegativityError for negative entries, DomainError for bad
/// options and NumericError if an iterate stops being finite.
SingularPair power_lambda_max(const RectangularTensor& a, const OracleOptions& options = {});

struct CandidateCheck {
  double value = 0.0;
  bool in_psi = false;
  bool in_upsilon = false;
  bool violation = false;
};

struct InclusionCheck {
  IndexSubset subset;
  double psi_radius = 0.0;
  double upsilon_radius = 0.0;
  double tolerance = kDefaultTolerance;
  std::vector<CandidateCheck> candidates;

  bool all_inside() const noexcept;
};

/// Checks each purported singular value against both S-type sets.
InclusionCheck verify_inclusion(const RectangularTensor& a, std::span<const double> candidates,
                                const IndexSubset& s, double tolerance = kDefaultTolerance);

}  // namespace recten
