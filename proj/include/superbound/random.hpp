#pragma once

#include <cstdint>
#include <limits>
#include <string_view>

#include "superbound/core.hpp"

namespace superbound {

/// Counter-based random stream. A stream is a 64-bit key plus a draw counter;
/// every draw hashes (key, counter), and child streams derive their key from
/// the parent key and a label or index. Draws from one substream never shift
/// the draws of another, so generators can be added without perturbing
/// existing ensembles.
///
/// Satisfies UniformRandomBitGenerator.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(std::uint64_t seed);

  RandomStream substream(std::string_view label) const;
  RandomStream substream(std::uint64_t index) const;

  std::uint64_t key() const { return key_; }
  std::uint64_t draws() const { return counter_; }

  result_type operator()();
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  /// Uniform on the open interval (0, 1), 53 bits of resolution.
  double uniform();
  /// Standard normal via Box-Muller; consumes two draws.
  double normal();
  /// Exponential with unit rate.
  double exponential();
  /// Real and imaginary parts independent standard normals.
  Complex complex_normal();
  /// exp(i theta) with theta uniform on [0, 2 pi).
  Complex phase();

 private:
  RandomStream(std::uint64_t key, std::uint64_t counter) : key_(key), counter_(counter) {}

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace superbound
