#include "agsy/container.hpp"

#include <cstring>

#include "agsy/coder.hpp"
#include "agsy/error.hpp"
#include "agsy/header_codec.hpp"
#include "agsy/tokenizer.hpp"

namespace agsy {
namespace {

void put_u32_be(std::vector<uint8_t>& out, uint32_t v) {
  out.push_back(static_cast<uint8_t>(v >> 24));
  out.push_back(static_cast<uint8_t>(v >> 16));
  out.push_back(static_cast<uint8_t>(v >> 8));
  out.push_back(static_cast<uint8_t>(v));
}

uint32_t get_u32_be(std::span<const uint8_t> in, size_t pos) {
  return (uint32_t(in[pos]) << 24) | (uint32_t(in[pos + 1]) << 16) |
         (uint32_t(in[pos + 2]) << 8) | uint32_t(in[pos + 3]);
}

}  // namespace

std::vector<uint8_t> write_container(const Alphabet& alphabet,
                                     const FrequencyTable& freqs,
                                     std::span<const SymbolId> tokens,
                                     ContainerStats* stats) {
  if (tokens.size() != freqs.total())
    throw Error(Errc::invalid_argument,
                "token count does not match the frequency table");
  if (tokens.size() > kMaxCodingTotal)
    throw Error(Errc::capacity, "token count exceeds the coder's 2^30 cap");

  const EncodedHeader header = encode_header(alphabet, freqs);

  std::vector<uint8_t> out;
  out.insert(out.end(), kContainerMagic, kContainerMagic + 4);
  out.push_back(kContainerVersion);
  put_u32_be(out, static_cast<uint32_t>(header.bit_count));
  out.insert(out.end(), header.bytes.begin(), header.bytes.end());
  put_u32_be(out, static_cast<uint32_t>(tokens.size()));

  std::vector<uint8_t> payload;
  if (!tokens.empty()) {
    const CodingModel model = CodingModel::from_frequencies(freqs);
    payload = encode(tokens, model);
    out.insert(out.end(), payload.begin(), payload.end());
  }

  if (stats) {
    stats->framing_bits = 8 * (4 + 1 + 4 + 4);
    stats->header_bits = header.bit_count;
    stats->header_padding_bits = 8 * header.bytes.size() - header.bit_count;
    stats->payload_bits = 8 * payload.size();
    stats->total_bits = 8 * out.size();
  }
  return out;
}

std::vector<uint8_t> read_container(std::span<const uint8_t> container) {
  if (container.size() < 9) throw Error(Errc::format, "container too short");
  if (std::memcmp(container.data(), kContainerMagic, 4) != 0)
    throw Error(Errc::format, "bad magic; not an AGSY container");
  if (container[4] != kContainerVersion)
    throw Error(Errc::format,
                "unsupported container version " + std::to_string(container[4]));

  const uint64_t header_bits = get_u32_be(container, 5);
  const size_t header_bytes = (header_bits + 7) / 8;
  if (9 + header_bytes + 4 > container.size())
    throw Error(Errc::format, "container truncated in the header");

  auto [alphabet, freqs] =
      decode_header(container.subspan(9, header_bytes), header_bits);
  if (header_bits % 8 != 0) {
    const uint8_t last = container[9 + header_bytes - 1];
    if ((last & (0xFFu >> (header_bits % 8))) != 0)
      throw Error(Errc::format, "nonzero padding after the header");
  }

  const uint64_t token_count = get_u32_be(container, 9 + header_bytes);
  if (token_count != freqs.total())
    throw Error(Errc::format,
                "token count disagrees with the header frequencies");

  const auto payload = container.subspan(9 + header_bytes + 4);
  std::vector<SymbolId> tokens;
  if (token_count > 0) {
    const CodingModel model = CodingModel::from_frequencies(freqs);
    tokens = decode(payload, model, token_count);
  } else if (!payload.empty()) {
    throw Error(Errc::format, "payload bytes for an empty stream");
  }

  TokenStream stream;
  stream.tokens = std::move(tokens);
  return detokenize(stream, alphabet);
}

}  // namespace agsy
