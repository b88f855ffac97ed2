// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "fixtures.hpp"
#include "recten/bounds.hpp"
#include "recten/cli.hpp"
#include "recten/error.hpp"
#include "recten/inclusion.hpp"
#include "recten/io.hpp"
#include "recten/oracle.hpp"
#include "recten/random.hpp"

using namespace recten;

namespace {

constexpr std::uint64_t kCorpusSeed = 20240601;
constexpr std::size_t kCorpusSize = 200;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void check(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

bool near(double got, double want, double tol) { return std::abs(got - want) <= tol; }

std::vector<IndexSubset> all_subsets(int n) {
  std::vector<IndexSubset> out;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) out.push_back(IndexSubset::from_mask(mask, n));
  return out;
}

const std::vector<RectangularTensor>& corpus() {
  static const std::vector<RectangularTensor> c = random_corpus(kCorpusSeed, kCorpusSize);
  return c;
}

RectangularTensor load_example() { return load_tensor(testing::data_path("a_ex.json")); }

Outcome example_regression() {
  Outcome o;
  const RectangularTensor a = load_example();
  const IndexSubset s({3}, 3);
  const double ups = upsilon_set(a, s).union_radius, psi = psi_set(a, s).union_radius;
  o.check(near(ups, 33.2547, 5e-4), fmt::format("upsilon radius {:.6f}", ups));
  o.check(near(psi, 31.8692, 5e-4), fmt::format("psi radius {:.6f}", psi));
  const BoundPair yq = yang_qi_bounds(a);
  o.check(yq.lower == 6.0 && yq.upper == 35.0, fmt::format("yang-qi ({}, {})", yq.lower, yq.upper));
  const BoundPair lu = lu_bounds(a, s);
  o.check(near(lu.lower, 6.6533, 5e-4) && near(lu.upper, 33.2547, 5e-4),
          fmt::format("L/U ({:.6f}, {:.6f})", lu.lower, lu.upper));
  const BoundPair tp = theta_phi_bounds(a, s);
  o.check(near(tp.lower, 8.1240, 5e-4) && near(tp.upper, 31.8692, 5e-4),
          fmt::format("Theta/Phi ({:.6f}, {:.6f})", tp.lower, tp.upper));
  if (o.pass)
    o.detail = fmt::format("Upsilon {:.4f}, Psi {:.4f}, L/U ({:.4f}, {:.4f}), Theta/Phi ({:.4f}, {:.4f})", ups, psi,
                           lu.lower, lu.upper, tp.lower, tp.upper);
  return o;
}

Outcome oracle_example() {
  Outcome o;
  const SingularPair pair = power_lambda_max(load_example(), {1e-10, 10000, 4, 42, 1});
  o.check(pair.status == PairStatus::converged, fmt::format("status {}", to_string(pair.status)));
  o.check(near(pair.lambda, 18.0755, 1e-3), fmt::format("lambda {:.6f}", pair.lambda));
  o.check(pair.residual <= 1e-8, fmt::format("residual {:.3e}", pair.residual));
  o.check(pair.iterations <= 10000, fmt::format("iterations {}", pair.iterations));
  if (o.pass)
    o.detail = fmt::format("lambda {:.6f}, residual {:.2e}, {} iterations", pair.lambda, pair.residual, pair.iterations);
  return o;
}

Outcome containment() {
  Outcome o;
  const RectangularTensor a = load_example();
  const IndexSubset s({3}, 3);
  const DiskReport ups = upsilon_set(a, s), psi = psi_set(a, s);
  for (double v : testing::a_ex_h_singular_values()) {
    o.check(std::abs(v) <= ups.union_radius + 1e-9, fmt::format("{} outside Upsilon", v));
    o.check(std::abs(v) <= psi.union_radius + 1e-9, fmt::format("{} outside Psi", v));
  }
  if (o.pass) o.detail = fmt::format("{} values inside both sets", testing::a_ex_h_singular_values().size());
  return o;
}

Outcome nesting() {
  Outcome o;
  std::size_t checked = 0;
  for (std::size_t k = 0; k < corpus().size(); ++k) {
    const RectangularTensor& a = corpus()[k];
    for (const IndexSubset& s : all_subsets(a.n())) {
      const double psi = psi_set(a, s).union_radius, ups = upsilon_set(a, s).union_radius;
      o.check(psi <= ups + 1e-12, fmt::format("tensor {}: psi {} > upsilon {}", k, psi, ups));
      ++checked;
    }
  }
  if (o.pass) o.detail = fmt::format("{} tensors, {} subsets", corpus().size(), checked);
  return o;
}

Outcome ordering() {
  Outcome o;
  std::size_t converged = 0, inconclusive = 0;
  for (std::size_t k = 0; k < corpus().size(); ++k) {
    const RectangularTensor& a = corpus()[k];
    const SingularPair pair = power_lambda_max(a);
    const bool ok = pair.status == PairStatus::converged;
    ok ? ++converged : ++inconclusive;
    if (ok) {
      const BoundPair yq = yang_qi_bounds(a);
      o.check(yq.lower <= pair.lambda && pair.lambda <= yq.upper + 1e-6,
              fmt::format("tensor {}: lambda {} outside Yang-Qi ({}, {})", k, pair.lambda, yq.lower, yq.upper));
    }
    for (const IndexSubset& s : all_subsets(a.n())) {
      const BoundPair lu = lu_bounds(a, s), tp = theta_phi_bounds(a, s);
      o.check(lu.lower <= tp.lower + 1e-10, fmt::format("tensor {}: L {} > Theta {}", k, lu.lower, tp.lower));
      o.check(tp.upper <= lu.upper + 1e-10, fmt::format("tensor {}: Phi {} > U {}", k, tp.upper, lu.upper));
      if (ok)
        o.check(tp.lower - 1e-6 <= pair.lambda && pair.lambda <= tp.upper + 1e-6,
                fmt::format("tensor {}: lambda {} outside Theta/Phi ({}, {})", k, pair.lambda, tp.lower, tp.upper));
    }
  }
  if (o.pass)
    o.detail = fmt::format("oracle converged on {} tensors, {} inconclusive", converged, inconclusive);
  return o;
}

Outcome structural() {
  Outcome o;
  auto rel = [](double x, double y) { return std::abs(x - y) <= 1e-12 * std::max({1.0, std::abs(x), std::abs(y)}); };
  std::size_t sums = 0;
  for (std::size_t k = 0; k < corpus().size(); ++k) {
    const RectangularTensor& a = corpus()[k];
    for (const IndexSubset& s : all_subsets(a.n())) {
      const BoundPair tp = theta_phi_bounds(a, s), lu = lu_bounds(a, s);
      o.check(rel(tp.upper, psi_set(a, s).union_radius), fmt::format("tensor {}: Phi != psi radius", k));
      o.check(rel(lu.upper, upsilon_set(a, s).union_radius), fmt::format("tensor {}: U != upsilon radius", k));
      for (int i = 1; i <= a.m(); ++i) {
        const PartitionSum part = r_partition(a, i, s);
        o.check(part.in + part.out == row_sum(a, i), fmt::format("tensor {}: R_{} != in + out", k, i));
        ++sums;
      }
      for (int j = 1; j <= a.n(); ++j) {
        const PartitionSum part = c_partition(a, j, s);
        o.check(part.in + part.out == col_sum(a, j), fmt::format("tensor {}: C_{} != in + out", k, j));
        ++sums;
      }
    }
  }
  if (o.pass) o.detail = fmt::format("{} partition sums exact", sums);
  return o;
}

Outcome scale_covariance() {
  Outcome o;
  std::size_t used = 0;
  for (std::size_t k = 0; k < corpus().size() && used < 20; ++k) {
    const RectangularTensor& a = corpus()[k];
    const SingularPair base = power_lambda_max(a);
    if (base.status != PairStatus::converged || base.lambda == 0.0) continue;
    for (double c : {0.5, 3.0}) {
      std::vector<Entry> entries = a.entries();
      for (Entry& e : entries) e.value *= c;
      const SingularPair sc = power_lambda_max(RectangularTensor(a.shape(), std::move(entries)));
      o.check(sc.status == PairStatus::converged, fmt::format("tensor {}: c={} did not converge", k, c));
      o.check(std::abs(sc.lambda - c * base.lambda) <= 1e-8 * c * base.lambda,
              fmt::format("tensor {}: c={} gives {} vs {}", k, c, sc.lambda, c * base.lambda));
    }
    ++used;
  }
  o.check(used == 20, fmt::format("only {} converged tensors", used));
  if (o.pass) o.detail = fmt::format("{} tensors, c in {{0.5, 3}}", used);
  return o;
}

Outcome golden_files() {
  Outcome o;
  const std::string a = testing::data_path("a_ex.json");
  const std::string values = testing::data_path("a_ex_h_singular_values.txt");
  struct Case {
    std::vector<std::string> args;
    std::string golden;
  };
  const std::vector<Case> cases{
      {{"bounds", a, "--s", "3", "--format", "json"}, "bounds_s3.json"},
      {{"inclusion", a, "--method", "psi", "--s", "3", "--format", "json"}, "inclusion_psi_s3.json"},
      {{"inclusion", a, "--method", "upsilon", "--s", "3", "--format", "json"}, "inclusion_upsilon_s3.json"},
      {{"lambda-max", a, "--format", "json"}, "lambda_max.json"},
      {{"plot", a, "--s", "3", "--values", values}, "plot_s3.svg"},
  };
  for (const Case& c : cases) {
    std::ostringstream out, err;
    const int code = run_command(c.args, out, err);
    if (code != kExitOk) {
      o.fail(fmt::format("{}: exit {} {}", c.golden, code, err.str()));
      continue;
    }
    std::string expected;
    try {
      expected = read_file(testing::golden_path(c.golden));
    } catch (const Error& e) {
      o.fail(e.what());
      continue;
    }
    o.check(out.str() == expected, fmt::format("{} differs from the checked-in copy", c.golden));
  }
  if (o.pass) o.detail = fmt::format("{} outputs identical", cases.size());
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "example regression", 1.0, example_regression},
      {2, "oracle on the example", 1.0, oracle_example},
      {3, "containment of the H-singular values", 1.0, containment},
      {4, "nesting Psi within Upsilon", 30.0, nesting},
      {5, "bound ordering and oracle sandwich", 60.0, ordering},
      {6, "structural identities", 60.0, structural},
      {7, "scale covariance", 60.0, scale_covariance},
      {8, "CLI golden files", 10.0, golden_files},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(fmt::format("exception: {}", e.what()));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.check(secs <= c.budget_seconds, fmt::format("took {:.2f}s, budget {:.0f}s", secs, c.budget_seconds));
    if (!o.pass) ++failures;
    std::cout << fmt::format("{} criterion {}: {} ({:.3f}s) {}\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                             o.detail);
  }
  std::cout << fmt::format("{}/{} criteria passed\n", criteria.size() - static_cast<std::size_t>(failures),
                           criteria.size());
  return failures == 0 ? 0 : 1;
}
