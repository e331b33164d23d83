#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "agsy/symbols.hpp"

namespace agsy {

// Bits needed to address n distinct values, n >= 1.
inline uint32_t ceil_log2(uint64_t n) {
  return n <= 1 ? 0 : static_cast<uint32_t>(std::bit_width(n - 1));
}

struct EncodedHeader {
  std::vector<uint8_t> bytes;  // zero-padded to a whole byte
  uint64_t bit_count = 0;      // exact size before padding
  uint32_t mxbits = 1;
};

// Alphabet description, bit-exact per FORMAT.md:
//   5 bits MXBITS-1; 64 x MXBITS standard frequencies; 8 bits NUMCHAR;
//   NUMCHAR x (8-bit byte + MXBITS frequency), ascending byte order;
//   15 bits AGCOUNT; per aggregate j: left id, right id (w_j bits each,
//   w_j = ceil_log2(64+NUMCHAR+j)) and an MXBITS frequency.
// MXBITS is derived from the largest frequency in `freqs`.
EncodedHeader encode_header(const Alphabet& alphabet, const FrequencyTable& freqs);

// Exact inverse; validates structure and rejects trailing garbage.
std::pair<Alphabet, FrequencyTable> decode_header(std::span<const uint8_t> bytes,
                                                  uint64_t bit_count);

// Closed-form size of the layout above, including the AGCOUNT field.
uint64_t header_bit_size(const Alphabet& alphabet, uint32_t mxbits);

}  // namespace agsy
