#ifndef HSENT_RNG_HPP
#define HSENT_RNG_HPP

#include <array>
#include <cstdint>

namespace hsent {

// Philox4x32-10 counter-based generator.  A (seed, stream) pair fully
// determines the output sequence, so independent streams can be handed to
// parallel workers and replayed exactly in any order.  The layout is
//   counter = (block_lo, block_hi, stream_lo, stream_hi)
//   key     = (seed_lo, seed_hi)
// with the standard round constants of Salmon et al.
class PhiloxRng {
public:
  PhiloxRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

  // one 128-bit block; exposed for known-answer testing
  static std::array<std::uint32_t, 4> block(std::uint64_t seed, std::uint64_t stream,
                                            std::uint64_t counter);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  double uniform();       // [0, 1), 53-bit resolution
  double gaussian();      // standard normal via Box-Muller

private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_index_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int buf_pos_ = 4;
  bool have_spare_gauss_ = false;
  double spare_gauss_ = 0.0;
};

}  // namespace hsent

#endif
