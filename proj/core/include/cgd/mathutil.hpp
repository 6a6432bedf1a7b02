// Small numeric helpers shared across the library: compensated summation,
// the standard normal distribution, and hashing for content-addressed caches.
#ifndef CGD_MATHUTIL_HPP
#define CGD_MATHUTIL_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cgd {

// Neumaier-compensated accumulator. Keeps long sums accurate enough for the
// exactness tolerances used by the enumeration oracle (1e-12 on expectations).
class Accumulator {
 public:
  void add(double x);
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Pairwise (cascade) summation of a vector. Order-independent with respect to
// how the values were produced, used by the replicate aggregators.
double pairwise_sum(const std::vector<double>& xs);

// Standard normal CDF, density, and quantile. The quantile uses a rational
// approximation refined by one Newton step on the erfc-based CDF; absolute
// error is below 1e-9 over the open unit interval.
double normal_cdf(double x);
double normal_pdf(double x);
double normal_quantile(double p);

// splitmix64 finalizer; decorrelates seed/stream/tag words for RNG streams
// and serves as the mixing step of content hashes.
std::uint64_t mix64(std::uint64_t x);
std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v);

}  // namespace cgd

#endif  // CGD_MATHUTIL_HPP
