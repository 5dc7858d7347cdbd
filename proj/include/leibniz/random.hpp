#pragma once

#include <cstdint>
#include <random>

#include "leibniz/exactlin.hpp"

namespace leibniz {

/// Seeded source of small integers. Reduction is done by hand rather than
/// with std::uniform_int_distribution so sequences match across standard
/// libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  long small_int(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
  }

  Vector vector(std::size_t n, long lo = -3, long hi = 3) {
    Vector v(n);
    for (auto& x : v) x = small_int(lo, hi);
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace leibniz
