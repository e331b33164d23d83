#include "agsy/symbols.hpp"

#include <algorithm>
#include <bit>

#include "agsy/error.hpp"

namespace agsy {

const std::array<uint8_t, kStandardCount>& standard_chars() {
  static const std::array<uint8_t, kStandardCount> chars = [] {
    std::array<uint8_t, kStandardCount> c{};
    size_t i = 0;
    for (uint8_t b = 'A'; b <= 'Z'; ++b) c[i++] = b;
    for (uint8_t b = 'a'; b <= 'z'; ++b) c[i++] = b;
    for (uint8_t b : {' ', '\n', ':', ';', '!', '(', ')', '-', ',', '.', '?', '_'})
      c[i++] = b;
    return c;
  }();
  return chars;
}

Alphabet::Alphabet() {
  byte_to_id_.fill(-1);
  symbols_.reserve(kStandardCount);
  for (uint8_t b : standard_chars()) {
    SymbolId id = static_cast<SymbolId>(symbols_.size());
    symbols_.push_back(Symbol{id, true, b, 0, 0});
    expansions_.push_back(std::string(1, static_cast<char>(b)));
    byte_to_id_[b] = static_cast<int32_t>(id);
  }
}

Alphabet Alphabet::for_document(std::span<const uint8_t> data) {
  Alphabet a;
  std::array<bool, 256> seen{};
  for (uint8_t b : data) seen[b] = true;
  for (int b = 0; b < 256; ++b) {
    if (seen[b] && a.byte_to_id_[b] < 0)
      a.add_nonstandard(static_cast<uint8_t>(b));
  }
  return a;
}

SymbolId Alphabet::add_nonstandard(uint8_t byte) {
  if (byte_to_id_[byte] >= 0)
    throw Error(Errc::invalid_argument,
                "byte " + std::to_string(byte) + " already in alphabet");
  if (aggregate_count() > 0)
    throw Error(Errc::invalid_argument,
                "base symbols must precede aggregates");
  SymbolId id = static_cast<SymbolId>(symbols_.size());
  symbols_.push_back(Symbol{id, true, byte, 0, 0});
  expansions_.push_back(std::string(1, static_cast<char>(byte)));
  byte_to_id_[byte] = static_cast<int32_t>(id);
  ++nonstandard_count_;
  return id;
}

SymbolId Alphabet::add_aggregate(SymbolId left, SymbolId right) {
  if (left >= symbols_.size() || right >= symbols_.size())
    throw Error(Errc::invalid_argument, "aggregate constituent id out of range");
  if (aggregate_count() >= kMaxAggregates)
    throw Error(Errc::capacity, "aggregate count exceeds 15-bit AGCOUNT field");
  SymbolId id = static_cast<SymbolId>(symbols_.size());
  symbols_.push_back(Symbol{id, false, 0, left, right});
  expansions_.push_back(expansions_[left] + expansions_[right]);
  return id;
}

const Symbol& Alphabet::symbol(SymbolId id) const {
  if (id >= symbols_.size())
    throw Error(Errc::invalid_argument,
                "symbol id " + std::to_string(id) + " out of range");
  return symbols_[id];
}

std::string_view Alphabet::expansion(SymbolId id) const {
  if (id >= symbols_.size())
    throw Error(Errc::invalid_argument,
                "symbol id " + std::to_string(id) + " out of range");
  return expansions_[id];
}

uint32_t Alphabet::expanded_length(SymbolId id) const {
  return static_cast<uint32_t>(expansion(id).size());
}

std::map<SymbolId, uint32_t> Alphabet::char_multiplicity(SymbolId id) const {
  std::map<SymbolId, uint32_t> mult;
  for (char c : expansion(id)) {
    int32_t base = byte_to_id_[static_cast<uint8_t>(c)];
    ++mult[static_cast<SymbolId>(base)];
  }
  return mult;
}

FrequencyTable FrequencyTable::count(const TokenStream& stream,
                                     size_t symbol_count) {
  FrequencyTable t(symbol_count);
  for (SymbolId id : stream.tokens) {
    if (id >= symbol_count)
      throw Error(Errc::invalid_argument, "token id out of range");
    ++t.counts_[id];
  }
  t.total_ = stream.tokens.size();
  return t;
}

uint64_t FrequencyTable::at(SymbolId id) const {
  if (id >= counts_.size())
    throw Error(Errc::invalid_argument,
                "frequency lookup for unknown id " + std::to_string(id));
  return counts_[id];
}

void FrequencyTable::add(SymbolId id, uint64_t delta) {
  if (id >= counts_.size()) counts_.resize(id + 1, 0);
  counts_[id] += delta;
  total_ += delta;
}

uint64_t FrequencyTable::max_count() const {
  uint64_t m = 0;
  for (uint64_t c : counts_) m = std::max(m, c);
  return m;
}

uint32_t required_mxbits(const FrequencyTable& freqs) {
  uint64_t m = freqs.max_count();
  uint32_t bits = static_cast<uint32_t>(std::bit_width(m));
  return bits == 0 ? 1 : bits;
}

}  // namespace agsy
