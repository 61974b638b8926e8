#ifndef RTBP_RNG_HPP
#define RTBP_RNG_HPP

#include <cstdint>

namespace rtbp {

// Fully specified generator (SplitMix64) so that seeded runs are byte-identical
// across standard libraries and across OpenMP schedules: every sample index
// derives its own stream from (seed, index), independent of evaluation order.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in [a, b)
  double uniform(double a, double b) { return a + (b - a) * next_double(); }

 private:
  std::uint64_t state_;
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0x632be59bd9b4e019ULL * (index + 1)));
  return g.next_u64();
}

// Independent stream for sample `index` of a seeded experiment.
inline SplitMix64 stream_for(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(mix_seed(seed, index));
}

}  // namespace rtbp

#endif
