#include "recten/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <fmt/format.h>

#include "parallel.hpp"
#include "recten/error.hpp"

namespace recten {

std::string_view to_string(PairStatus s) noexcept {
  switch (s) {
    case PairStatus::converged:
      return "converged";
    case PairStatus::max_iterations:
      return "max-iterations";
    case PairStatus::degenerate_zero:
      return "degenerate-zero";
  }
  return "unknown";
}

namespace {

constexpr double kRatioFloor = 1e-14;

double ipow(double v, int k) {
  double r = 1.0;
  for (int t = 0; t < k; ++t) r *= v;
  return r;
}

double root(double v, int k) {
  switch (k) {
    case 1:
      return v;
    case 2:
      return std::sqrt(v);
    case 3:
      return std::cbrt(v);
    default:
      return std::pow(v, 1.0 / k);
  }
}

double max_of(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }

bool all_zero(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double e) { return e == 0.0; });
}

void check_finite(const std::vector<double>& v, long iteration) {
  for (double e : v)
    if (!std::isfinite(e))
      throw NumericError(fmt::format("non-finite contraction at iteration {}", iteration), iteration);
}

struct RatioRange {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
};

RatioRange ratios(const std::vector<double>& image, const std::vector<double>& v, int power) {
  RatioRange r;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] <= kRatioFloor) continue;
    const double ratio = image[k] / ipow(v[k], power);
    r.lo = std::min(r.lo, ratio);
    r.hi = std::max(r.hi, ratio);
  }
  return r;
}

void normalize_max(std::vector<double>& v) {
  const double top = max_of(v);
  for (double& e : v) e /= top;
}

std::vector<double> seeded_start(std::size_t len, std::uint64_t seed, int start, int which) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(start), static_cast<std::uint32_t>(which)};
  std::mt19937_64 gen(seq);
  std::vector<double> v(len);
  for (double& e : v) e = 0.05 + 0.95 * static_cast<double>(gen() >> 11) * 0x1.0p-53;
  normalize_max(v);
  return v;
}

// Rescales y so both equations share one lambda, then scales jointly so the
// largest component across x and y is 1.
SingularPair balanced_pair(const RectangularTensor& a, std::vector<double> x, std::vector<double> y,
                           RatioRange mu, RatioRange nu) {
  const int l = a.order();
  const double wp = static_cast<double>(a.p()) / l;
  const double wq = static_cast<double>(a.q()) / l;
  const double mu_mid = 0.5 * (mu.lo + mu.hi);
  const double nu_mid = 0.5 * (nu.lo + nu.hi);
  SingularPair pair;
  pair.lambda = std::pow(mu_mid, wp) * std::pow(nu_mid, wq);
  if (mu_mid > 0.0 && nu_mid > 0.0) {
    const double t = std::pow(nu_mid / mu_mid, 1.0 / l);
    for (double& e : y) e *= t;
    const double s = std::max(max_of(x), max_of(y));
    for (double& e : x) e /= s;
    for (double& e : y) e /= s;
  }
  pair.bracket_lower = std::pow(mu.lo, wp) * std::pow(nu.lo, wq);
  pair.bracket_upper = std::pow(mu.hi, wp) * std::pow(nu.hi, wq);
  pair.x = std::move(x);
  pair.y = std::move(y);
  pair.residual = residual(a, pair.lambda, pair.x, pair.y);
  return pair;
}

SingularPair iterate_from(const RectangularTensor& a, std::vector<double> x, std::vector<double> y,
                          const OracleOptions& options, int start) {
  const int power = a.order() - 1;
  SingularPair last;
  last.x = x;
  last.y = y;
  for (long it = 0; it < options.max_iter; ++it) {
    std::vector<double> left = contract_left(a, x, y);
    std::vector<double> right = contract_right(a, x, y);
    check_finite(left, it);
    check_finite(right, it);
    if (all_zero(left) || all_zero(right)) {
      last = SingularPair{};
      last.x = x;
      last.y = y;
      last.status = it == 0 ? PairStatus::degenerate_zero : PairStatus::max_iterations;
      last.residual = residual(a, 0.0, x, y);
      last.iterations = it;
      last.start = start;
      return last;
    }

    const RatioRange mu = ratios(left, x, power);
    const RatioRange nu = ratios(right, y, power);
    last = balanced_pair(a, x, y, mu, nu);
    last.iterations = it;
    last.start = start;
    if (!std::isfinite(last.lambda) || !std::isfinite(last.residual))
      throw NumericError(fmt::format("non-finite singular value estimate at iteration {}", it), it);
    const double gap = last.bracket_upper - last.bracket_lower;
    if (gap <= options.tol * std::max(1.0, last.bracket_upper) &&
        last.residual <= options.tol * std::max(1.0, last.lambda)) {
      last.status = PairStatus::converged;
      return last;
    }

    for (std::size_t k = 0; k < x.size(); ++k) x[k] = root(left[k], power);
    for (std::size_t k = 0; k < y.size(); ++k) y[k] = root(right[k], power);
    normalize_max(x);
    normalize_max(y);
  }
  last.status = PairStatus::max_iterations;
  last.iterations = options.max_iter;
  return last;
}

// Converged beats not converged; then larger lambda; then lower start index.
bool better(const SingularPair& cand, const SingularPair& best) {
  const bool cc = cand.status == PairStatus::converged;
  const bool bc = best.status == PairStatus::converged;
  if (cc != bc) return cc;
  if (cand.lambda != best.lambda) return cand.lambda > best.lambda;
  return cand.start < best.start;
}

}  // namespace

double residual(const RectangularTensor& a, double lambda, std::span<const double> x, std::span<const double> y) {
  const int power = a.order() - 1;
  const std::vector<double> left = contract_left(a, x, y);
  const std::vector<double> right = contract_right(a, x, y);
  double worst = 0.0;
  for (std::size_t k = 0; k < left.size(); ++k) worst = std::max(worst, std::abs(left[k] - lambda * ipow(x[k], power)));
  for (std::size_t k = 0; k < right.size(); ++k)
    worst = std::max(worst, std::abs(right[k] - lambda * ipow(y[k], power)));
  return worst;
}

double residual(const RectangularTensor& a, const SingularPair& pair) {
  return residual(a, pair.lambda, pair.x, pair.y);
}

SingularPair power_lambda_max(const RectangularTensor& a, const OracleOptions& options) {
  if (!a.is_nonnegative()) throw NonnegativityError("power iteration requires a nonnegative tensor");
  if (!(options.tol > 0.0) || !std::isfinite(options.tol))
    throw DomainError(fmt::format("oracle tolerance must be positive, got {}", options.tol));
  if (options.max_iter < 1) throw DomainError(fmt::format("maxIter must be at least 1, got {}", options.max_iter));

  const auto m = static_cast<std::size_t>(a.m());
  const auto n = static_cast<std::size_t>(a.n());
  SingularPair first = iterate_from(a, std::vector<double>(m, 1.0), std::vector<double>(n, 1.0), options, 0);
  if (first.status == PairStatus::degenerate_zero) return first;

  const int starts = std::max(1, options.restarts);
  std::vector<SingularPair> results(static_cast<std::size_t>(starts));
  results[0] = std::move(first);
  detail::parallel_for(static_cast<std::size_t>(starts - 1), options.threads, [&](std::size_t k) {
    const int start = static_cast<int>(k) + 1;
    results[k + 1] = iterate_from(a, seeded_start(m, options.seed, start, 0), seeded_start(n, options.seed, start, 1),
                                  options, start);
  });

  std::size_t best = 0;
  for (std::size_t k = 1; k < results.size(); ++k)
    if (better(results[k], results[best])) best = k;
  return results[best];
}

bool InclusionCheck::all_inside() const noexcept {
  return std::none_of(candidates.begin(), candidates.end(), [](const CandidateCheck& c) { return c.violation; });
}

InclusionCheck verify_inclusion(const RectangularTensor& a, std::span<const double> candidates, const IndexSubset& s,
                                double tolerance) {
  const DiskReport psi = psi_set(a, s);
  const DiskReport upsilon = upsilon_set(a, s);
  InclusionCheck check{s, psi.union_radius, upsilon.union_radius, tolerance, {}};
  for (double v : candidates) {
    CandidateCheck c{v, contains(psi, v, tolerance), contains(upsilon, v, tolerance), false};
    c.violation = !c.in_psi || !c.in_upsilon;
    check.candidates.push_back(c);
  }
  return check;
}

}  // namespace recten
