#include "cgd/rng.hpp"

#include <stdexcept>

#include "cgd/mathutil.hpp"

namespace cgd {

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), gen_(mix64(mix64(seed) ^ mix64(stream + 0x51ed270b7a1fca5dULL))) {}

double RngStream::uniform01() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::next_u64() { return gen_(); }

std::uint64_t RngStream::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("RngStream::below: bound must be positive");
  // Multiply-shift mapping; the modulo bias is far below anything the
  // statistical tests can resolve and the mapping is platform-stable.
  const unsigned __int128 wide = static_cast<unsigned __int128>(gen_()) * bound;
  return static_cast<std::uint64_t>(wide >> 64);
}

double RngStream::normal(double mean, double sd) {
  // Nudge away from 0 so the quantile stays finite.
  double u = uniform01();
  if (u <= 0.0) u = 0x1.0p-53;
  return mean + sd * normal_quantile(u);
}

RngStream RngStream::substream(std::uint64_t tag) const {
  return RngStream(seed_, hash_combine(stream_, tag));
}

}  // namespace cgd
