#pragma once

#include <cstdint>

#include "harmlab/cx.hpp"

namespace harmlab {

// Deterministic uniform sampler (splitmix64 core). Used instead of the
// standard distributions so reports are byte-identical across platforms.
class ParamSampler {
 public:
  explicit ParamSampler(std::uint64_t seed)
      : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  double uniform() {
    std::uint64_t x = (state_ += 0x9e3779b97f4a7c15ull);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    x ^= x >> 31;
    return static_cast<double>(x >> 11) * 0x1.0p-53;
  }

  double angle() { return uniform() * 6.283185307179586476925286766559; }

  Cx in_disk(double radius) {
    const double r = radius * std::sqrt(uniform());
    return r * unit_phase(angle());
  }

  Cx in_square(double half_side) {
    const double re = half_side * (2.0 * uniform() - 1.0);
    const double im = half_side * (2.0 * uniform() - 1.0);
    return Cx(re, im);
  }

 private:
  std::uint64_t state_;
};

}  // namespace harmlab
