/**
 * @file rng.hpp
 * @brief Counted splittable generator. All randomness in the library and the
 *        CLI flows from one 64-bit seed through splits, so verification runs
 *        are reproducible and independent of thread scheduling.
 */
#ifndef CHOWKIT_RNG_HPP
#define CHOWKIT_RNG_HPP

#include <cstdint>

#include "chowkit/scalar.hpp"

namespace chowkit {

class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : state_(mix(seed ^ 0x9e3779b97f4a7c15ULL)) {}

  /// Independent child stream; deterministic in (parent seed, label).
  Rng split(std::uint64_t label) const {
    return Rng(mix(state_ + 0xbf58476d1ce4e5b9ULL * (label + 1)));
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform in [0, bound).
  std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

  /// Uniform integer in [lo, hi] as a rational Scalar.
  Scalar next_int(long lo, long hi) {
    return Scalar(lo + static_cast<long>(next_below(
                           static_cast<std::uint64_t>(hi - lo + 1))));
  }

  /// Uniform element of Z/p.
  Scalar next_mod(std::uint64_t p) { return Scalar::mod_p(next_below(p), p); }

  /// Uniform nonzero element of Z/p.
  Scalar next_mod_nonzero(std::uint64_t p) {
    return Scalar::mod_p(1 + next_below(p - 1), p);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace chowkit

#endif  // CHOWKIT_RNG_HPP
