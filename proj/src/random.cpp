#include "superbound/random.hpp"

#include <cmath>
#include <numbers>

namespace superbound {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kIndexTag = 0xD1B54A32D192ED03ULL;

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

// FNV-1a; std::hash is not stable across implementations.
constexpr std::uint64_t hash_label(std::string_view label) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) : key_(mix64(seed + kGolden)) {}

RandomStream RandomStream::substream(std::string_view label) const {
  return RandomStream(mix64(key_ ^ mix64(hash_label(label) + kGolden)), 0);
}

RandomStream RandomStream::substream(std::uint64_t index) const {
  return RandomStream(mix64(key_ ^ mix64(index + kIndexTag)), 0);
}

RandomStream::result_type RandomStream::operator()() {
  return mix64(key_ ^ mix64(++counter_ * kGolden));
}

double RandomStream::uniform() {
  return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomStream::normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double RandomStream::exponential() { return -std::log(uniform()); }

Complex RandomStream::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

Complex RandomStream::phase() {
  return std::polar(1.0, 2.0 * std::numbers::pi * uniform());
}

}  // namespace superbound
