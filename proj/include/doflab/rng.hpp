#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <utility>

#include "doflab/matkernel.hpp"

namespace doflab {

// Deterministic random stream. Gaussians come from a hand-rolled
// Box-Muller so that draws are identical across standard libraries;
// substreams are derived by mixing (master seed, stream id), which keeps
// parallel trial results independent of scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer over the combined words
    std::uint64_t x = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

  static Rng substream(std::uint64_t master_seed, std::uint64_t stream) {
    return Rng(mix(master_seed, stream));
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // A pair of independent standard normals.
  std::pair<double, double> normal_pair() {
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
  }

  // Circularly-symmetric complex normal with unit variance: each normal
  // pair is scaled by 1/sqrt(2).
  Complex complex_normal() {
    const auto [re, im] = normal_pair();
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
  }

  // rows x cols matrix of i.i.d. CN(0,1) entries, filled row-major.
  ComplexMatrix complex_gaussian(int rows, int cols) {
    ComplexMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m(r, c) = complex_normal();
    return m;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace doflab
