#include "agsy/header_codec.hpp"

#include "agsy/bitio.hpp"
#include "agsy/error.hpp"

namespace agsy {
namespace {

constexpr uint32_t kMxbitsField = 5;
constexpr uint32_t kNumcharField = 8;
constexpr uint32_t kAgcountField = 15;

}  // namespace

uint64_t header_bit_size(const Alphabet& alphabet, uint32_t mxbits) {
  uint64_t bits = kMxbitsField + kStandardCount * uint64_t(mxbits);
  bits += kNumcharField + alphabet.nonstandard_count() * uint64_t(8 + mxbits);
  bits += kAgcountField;
  const uint64_t base = alphabet.base_count();
  for (uint32_t j = 0; j < alphabet.aggregate_count(); ++j)
    bits += mxbits + 2 * ceil_log2(base + j);
  return bits;
}

EncodedHeader encode_header(const Alphabet& alphabet, const FrequencyTable& freqs) {
  if (freqs.size() != alphabet.size())
    throw Error(Errc::invalid_argument,
                "frequency table does not match the alphabet");
  if (alphabet.nonstandard_count() > 255)
    throw Error(Errc::capacity, "more than 255 nonstandard characters");
  if (alphabet.aggregate_count() > kMaxAggregates)
    throw Error(Errc::capacity, "more than 32767 aggregate symbols");

  const uint32_t mxbits = required_mxbits(freqs);
  if (mxbits > 32)
    throw Error(Errc::capacity, "a frequency needs more than 32 bits");

  BitWriter w;
  w.write(mxbits - 1, kMxbitsField);
  for (SymbolId id = 0; id < kStandardCount; ++id) w.write(freqs.at(id), mxbits);

  w.write(alphabet.nonstandard_count(), kNumcharField);
  for (SymbolId id = kStandardCount; id < alphabet.base_count(); ++id) {
    w.write(alphabet.symbol(id).byte, 8);
    w.write(freqs.at(id), mxbits);
  }

  w.write(alphabet.aggregate_count(), kAgcountField);
  const uint64_t base = alphabet.base_count();
  for (uint32_t j = 0; j < alphabet.aggregate_count(); ++j) {
    const SymbolId id = static_cast<SymbolId>(base + j);
    const Symbol& s = alphabet.symbol(id);
    const uint32_t w_j = ceil_log2(base + j);
    w.write(s.left, w_j);
    w.write(s.right, w_j);
    w.write(freqs.at(id), mxbits);
  }

  EncodedHeader out;
  out.bit_count = w.bit_count();
  out.bytes = w.take();
  out.mxbits = mxbits;
  return out;
}

std::pair<Alphabet, FrequencyTable> decode_header(std::span<const uint8_t> bytes,
                                                  uint64_t bit_count) {
  BitReader r(bytes, bit_count);

  const uint32_t mxbits = static_cast<uint32_t>(r.read(kMxbitsField)) + 1;

  Alphabet alphabet;
  std::vector<uint64_t> counts;
  counts.reserve(kStandardCount);
  for (SymbolId id = 0; id < kStandardCount; ++id) counts.push_back(r.read(mxbits));

  const uint32_t numchar = static_cast<uint32_t>(r.read(kNumcharField));
  int last_byte = -1;
  for (uint32_t i = 0; i < numchar; ++i) {
    const uint8_t byte = static_cast<uint8_t>(r.read(8));
    if (static_cast<int>(byte) <= last_byte)
      throw Error(Errc::format,
                  "nonstandard characters out of order in header");
    if (alphabet.base_id(byte) >= 0)
      throw Error(Errc::format, "duplicate character in header");
    alphabet.add_nonstandard(byte);
    counts.push_back(r.read(mxbits));
    last_byte = byte;
  }

  const uint32_t agcount = static_cast<uint32_t>(r.read(kAgcountField));
  const uint64_t base = alphabet.base_count();
  for (uint32_t j = 0; j < agcount; ++j) {
    const uint32_t w_j = ceil_log2(base + j);
    const uint64_t left = r.read(w_j);
    const uint64_t right = r.read(w_j);
    if (left >= base + j || right >= base + j)
      throw Error(Errc::format, "aggregate references a later symbol");
    alphabet.add_aggregate(static_cast<SymbolId>(left),
                           static_cast<SymbolId>(right));
    counts.push_back(r.read(mxbits));
  }

  if (r.bits_remaining() != 0)
    throw Error(Errc::format, "trailing data after the alphabet header");

  FrequencyTable freqs(alphabet.size());
  for (SymbolId id = 0; id < counts.size(); ++id) freqs.add(id, counts[id]);
  return {std::move(alphabet), std::move(freqs)};
}

}  // namespace agsy
