#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "agsy/symbols.hpp"

namespace agsy {

inline constexpr char kContainerMagic[4] = {'A', 'G', 'S', 'Y'};
inline constexpr uint8_t kContainerVersion = 1;

// Size accounting for one written container; every field is in bits.
struct ContainerStats {
  uint64_t framing_bits = 0;  // magic, version, header length, token count
  uint64_t header_bits = 0;   // exact, before padding
  uint64_t header_padding_bits = 0;
  uint64_t payload_bits = 0;
  uint64_t total_bits = 0;
};

// "AGSY" container: magic, version byte, header bit-length (u32, big
// endian), header bits zero-padded to a byte, then a u32 big-endian token
// count followed by the range-coded payload.  See FORMAT.md.
std::vector<uint8_t> write_container(const Alphabet& alphabet,
                                     const FrequencyTable& freqs,
                                     std::span<const SymbolId> tokens,
                                     ContainerStats* stats = nullptr);

// Full inverse: parse, decode the header, decode the payload, expand the
// tokens back to the original bytes.
std::vector<uint8_t> read_container(std::span<const uint8_t> container);

}  // namespace agsy
