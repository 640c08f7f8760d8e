#pragma once

#include <cstdint>

namespace qwitness {

// SplitMix64 (Steele/Lea/Flood). The state advances by the golden-ratio
// increment and next() applies a murmur-style finalizer, so the sequence is
// fully determined by the 64-bit seed on every platform. split() seeds an
// independent child stream from the parent's next output.
//
//   next():  z  = state += 0x9e3779b97f4a7c15
//            z ^= z >> 30;  z *= 0xbf58476d1ce4e5b9
//            z ^= z >> 27;  z *= 0x94d049bb133111eb
//            return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 significant bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

}  // namespace qwitness
