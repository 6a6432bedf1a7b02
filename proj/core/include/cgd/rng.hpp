// Reproducible random number streams. A stream is identified by a (seed,
// stream id) pair; substreams derive fresh ids so that replicates, auxiliary
// probability estimation, and graph generation never share draws. All
// downstream randomness flows through uniform01(), which reads exactly one
// engine word per call, so replay is stable across library versions.
#ifndef CGD_RNG_HPP
#define CGD_RNG_HPP

#include <cstdint>
#include <random>

namespace cgd {

class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  // Uniform on [0,1) with 53 random bits.
  double uniform01();

  std::uint64_t next_u64();

  // Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  // Normal variate via the inverse-CDF transform, so the draw consumes
  // exactly one uniform and stays reproducible.
  double normal(double mean, double sd);

  // Independent stream derived from the same seed.
  RngStream substream(std::uint64_t tag) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 gen_;
};

}  // namespace cgd

#endif  // CGD_RNG_HPP
