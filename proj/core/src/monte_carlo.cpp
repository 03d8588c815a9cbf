#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "zetalab/errors.hpp"
#include "zetalab/quad.hpp"

namespace zetalab::quad {

namespace {

constexpr std::uint64_t kBlockSize = 1u << 16;

constexpr std::uint64_t mix64(std::uint64_t z) {
  // splitmix64 finalizer
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct BlockSums {
  double sum = 0;
  double sum_sq = 0;
};

}  // namespace

double uniform_deviate(std::uint64_t seed, std::uint64_t index, std::uint32_t coord,
                       std::uint32_t dimension) {
  // Stream layout: counter = index * dimension + coord, keyed by the seed.
  const std::uint64_t counter = index * dimension + coord;
  const std::uint64_t key = mix64(seed + 0x9e3779b97f4a7c15ULL);
  const std::uint64_t bits = mix64(counter * 0x9e3779b97f4a7c15ULL + key);
  // 52 random bits, offset by half an ulp so 0 and 1 are never produced.
  return (static_cast<double>(bits >> 12) + 0.5) * 0x1.0p-52;
}

MonteCarloResult monte_carlo(const std::function<double(std::span<const double>)>& f,
                             std::uint32_t dimension, std::uint64_t samples, std::uint64_t seed,
                             unsigned workers) {
  if (dimension == 0 || samples == 0) throw DomainError("empty Monte Carlo configuration");
  const std::uint64_t blocks = (samples + kBlockSize - 1) / kBlockSize;
  std::vector<BlockSums> partial(blocks);

  auto run_blocks = [&](std::uint64_t first, std::uint64_t stride) {
    std::vector<double> u(dimension);
    for (std::uint64_t b = first; b < blocks; b += stride) {
      BlockSums s;
      const std::uint64_t end = std::min(samples, (b + 1) * kBlockSize);
      for (std::uint64_t i = b * kBlockSize; i < end; ++i) {
        for (std::uint32_t d = 0; d < dimension; ++d) u[d] = uniform_deviate(seed, i, d, dimension);
        const double v = f(u);
        s.sum += v;
        s.sum_sq += v * v;
      }
      partial[b] = s;
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, blocks));
  if (workers <= 1) {
    run_blocks(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_blocks, w, workers);
  }

  double sum = 0;
  double sum_sq = 0;
  for (const auto& s : partial) {
    sum += s.sum;
    sum_sq += s.sum_sq;
  }
  const double n = static_cast<double>(samples);
  const double mean = sum / n;
  const double variance = std::max(0.0, (sum_sq / n - mean * mean) * n / (n - 1));
  return MonteCarloResult{mean, std::sqrt(variance / n), samples};
}

MonteCarloResult monte_carlo_kontsevich(int k, std::uint64_t samples, std::uint64_t seed,
                                        const PrecisionContext&, unsigned workers) {
  if (k < 2) throw DomainError("kontsevich integral needs k >= 2");
  if (samples < 10'000) throw DomainError("kontsevich Monte Carlo needs at least 10^4 samples");
  return monte_carlo(
      [](std::span<const double> u) {
        double product = 1;
        for (double x : u) product *= x;
        return 1.0 / (1.0 - product);
      },
      static_cast<std::uint32_t>(k), samples, seed, workers);
}

}  // namespace zetalab::quad
