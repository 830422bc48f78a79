#pragma once

// Philox4x32-10 counter-based generator (Salmon et al., SC'11). Output is a
// pure function of (counter, key), so any stream position can be produced
// independently of scheduling.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace wpr {

class Philox4x32 {
public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr Counter block(const Counter& ctr, Key key) noexcept {
    Counter c = ctr;
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      const std::uint64_t p0 = std::uint64_t(kMul0) * c[0];
      const std::uint64_t p1 = std::uint64_t(kMul1) * c[2];
      const auto hi0 = std::uint32_t(p0 >> 32), lo0 = std::uint32_t(p0);
      const auto hi1 = std::uint32_t(p1 >> 32), lo1 = std::uint32_t(p1);
      c = {hi1 ^ c[1] ^ key[0], lo1, hi0 ^ c[3] ^ key[1], lo0};
    }
    return c;
  }

  static constexpr Key key_from_seed(std::uint64_t seed) noexcept {
    return {std::uint32_t(seed), std::uint32_t(seed >> 32)};
  }

private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
};

// Maps a 32-bit word to the open interval (0, 1).
inline double open_unit(std::uint32_t w) noexcept { return (double(w) + 0.5) * 0x1p-32; }

// Stream of variates for one (seed, stream id) pair; the 64-bit block index
// occupies counter words 0-1 and the stream id words 2-3.
class CounterStream {
public:
  CounterStream(std::uint64_t seed, std::uint64_t stream) noexcept
      : key_(Philox4x32::key_from_seed(seed)),
        stream_lo_(std::uint32_t(stream)),
        stream_hi_(std::uint32_t(stream >> 32)) {}

  Philox4x32::Counter next_block() noexcept {
    const Philox4x32::Counter ctr{std::uint32_t(block_), std::uint32_t(block_ >> 32), stream_lo_,
                                  stream_hi_};
    ++block_;
    return Philox4x32::block(ctr, key_);
  }

  double uniform() noexcept {
    if (pos_ == 4) {
      buf_ = next_block();
      pos_ = 0;
    }
    return open_unit(buf_[pos_++]);
  }

  // Four standard normals per block via Box-Muller.
  void normals(std::array<double, 4>& out) noexcept {
    const auto w = next_block();
    for (int i = 0; i < 2; ++i) {
      const double radius = std::sqrt(-2.0 * std::log(open_unit(w[2 * i])));
      const double angle = 2.0 * std::numbers::pi * open_unit(w[2 * i + 1]);
      out[2 * i] = radius * std::cos(angle);
      out[2 * i + 1] = radius * std::sin(angle);
    }
  }

private:
  Philox4x32::Key key_;
  std::uint32_t stream_lo_;
  std::uint32_t stream_hi_;
  std::uint64_t block_ = 0;
  Philox4x32::Counter buf_{};
  int pos_ = 4;
};

}  // namespace wpr
