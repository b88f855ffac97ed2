#include "recten/random.hpp"

#include <random>

#include <fmt/format.h>

#include "recten/error.hpp"

namespace recten {

namespace {

double unit(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

int pick(std::mt19937_64& gen, int lo, int hi) {
  return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
}

RectangularTensor draw(const RandomSpec& spec, std::mt19937_64& gen) {
  const Shape& s = spec.shape;
  const int l = s.order();
  std::vector<Entry> entries;
  std::vector<int> coord(static_cast<std::size_t>(l), 1);
  // Odometer over all coordinates, rows before columns, last index fastest.
  while (true) {
    if (unit(gen) < spec.density) {
      double v = spec.max_value * unit(gen);
      if (spec.allow_negative && unit(gen) < 0.5) v = -v;
      entries.push_back({MultiIndex(std::vector<int>(coord.begin(), coord.begin() + s.p)),
                         MultiIndex(std::vector<int>(coord.begin() + s.p, coord.end())), v});
    }
    int t = l - 1;
    for (; t >= 0; --t) {
      const int bound = t < s.p ? s.m : s.n;
      if (++coord[static_cast<std::size_t>(t)] <= bound) break;
      coord[static_cast<std::size_t>(t)] = 1;
    }
    if (t < 0) break;
  }
  return RectangularTensor(s, std::move(entries));
}

}  // namespace

RectangularTensor random_tensor(const RandomSpec& spec, std::uint64_t seed) {
  if (!(spec.density >= 0.0 && spec.density <= 1.0))
    throw DomainError(fmt::format("density must lie in [0, 1], got {}", spec.density));
  if (!(spec.max_value >= 0.0)) throw DomainError("max_value must be nonnegative");
  std::mt19937_64 gen(seed);
  return draw(spec, gen);
}

std::vector<RectangularTensor> random_corpus(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 gen(seed);
  std::vector<RectangularTensor> corpus;
  corpus.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    RandomSpec spec;
    const int n = pick(gen, 2, 4);
    spec.shape = {pick(gen, 1, 2), pick(gen, 1, 2), n, n};
    spec.density = 0.3 + 0.7 * unit(gen);
    corpus.push_back(draw(spec, gen));
  }
  return corpus;
}

}  // namespace recten
