#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "agsy/error.hpp"

namespace agsy {

// MSB-first bit packing; the final byte is zero-padded.  See FORMAT.md.
class BitWriter {
 public:
  void write(uint64_t value, uint32_t nbits) {
    if (nbits > 64) throw Error(Errc::invalid_argument, "write of >64 bits");
    if (nbits < 64 && value >> nbits)
      throw Error(Errc::invalid_argument, "value does not fit in field");
    for (uint32_t i = nbits; i-- > 0;) {
      if (bit_count_ % 8 == 0) bytes_.push_back(0);
      if ((value >> i) & 1) bytes_.back() |= uint8_t(0x80u >> (bit_count_ % 8));
      ++bit_count_;
    }
  }

  uint64_t bit_count() const { return bit_count_; }
  const std::vector<uint8_t>& bytes() const { return bytes_; }
  std::vector<uint8_t> take() { return std::move(bytes_); }

 private:
  std::vector<uint8_t> bytes_;
  uint64_t bit_count_ = 0;
};

class BitReader {
 public:
  BitReader(std::span<const uint8_t> bytes, uint64_t bit_limit)
      : bytes_(bytes), bit_limit_(bit_limit) {
    if (bit_limit > bytes.size() * 8)
      throw Error(Errc::format, "bit stream shorter than its declared length");
  }

  uint64_t read(uint32_t nbits) {
    if (nbits > 64) throw Error(Errc::invalid_argument, "read of >64 bits");
    if (pos_ + nbits > bit_limit_)
      throw Error(Errc::format, "truncated bit stream");
    uint64_t v = 0;
    for (uint32_t i = 0; i < nbits; ++i, ++pos_) {
      v = (v << 1) | ((bytes_[pos_ / 8] >> (7 - pos_ % 8)) & 1);
    }
    return v;
  }

  uint64_t bits_consumed() const { return pos_; }
  uint64_t bits_remaining() const { return bit_limit_ - pos_; }

 private:
  std::span<const uint8_t> bytes_;
  uint64_t bit_limit_;
  uint64_t pos_ = 0;
};

}  // namespace agsy
