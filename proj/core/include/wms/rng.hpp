#pragma once

#include <cstdint>

namespace wms
{

/// SplitMix64 (Steele, Lea, Flood 2014). The stream is fully determined by the
/// seed; split() derives an independent child stream.
class SplitMix64
{
  public:
    static constexpr const char* algorithm = "splitmix64";

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound);
    SplitMix64 split() { return SplitMix64(next() ^ 0x6A09E667F3BCC909ULL); }

  private:
    std::uint64_t state_;
};

} // namespace wms
