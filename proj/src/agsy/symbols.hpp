#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace agsy {

using SymbolId = uint32_t;

// 64 characters both encoder and decoder know without transmission:
// 'A'-'Z', 'a'-'z', then space, newline, ':', ';', '!', '(', ')', '-',
// ',', '.', '?', '_'.  Frozen; see FORMAT.md.
inline constexpr size_t kStandardCount = 64;

// AGCOUNT is a 15-bit header field.
inline constexpr size_t kMaxAggregates = (1u << 15) - 1;

const std::array<uint8_t, kStandardCount>& standard_chars();

struct Symbol {
  SymbolId id = 0;
  bool is_base = true;
  uint8_t byte = 0;    // base symbols
  SymbolId left = 0;   // aggregate symbols; constituents precede the aggregate
  SymbolId right = 0;
};

// Symbol table: ids [0,64) standard, [64,64+numchar) document bytes,
// the rest aggregates in insertion order.  Immutable once the builder is
// done; expansion strings are cached so lookups are O(1).
class Alphabet {
 public:
  // Standard 64 characters only.
  Alphabet();

  // Standard characters plus every byte of `data` outside the standard set,
  // declared in ascending byte order.
  static Alphabet for_document(std::span<const uint8_t> data);

  SymbolId add_nonstandard(uint8_t byte);
  SymbolId add_aggregate(SymbolId left, SymbolId right);

  size_t size() const { return symbols_.size(); }
  uint32_t nonstandard_count() const { return nonstandard_count_; }
  uint32_t aggregate_count() const {
    return static_cast<uint32_t>(symbols_.size()) - kStandardCount -
           nonstandard_count_;
  }
  uint32_t base_count() const { return kStandardCount + nonstandard_count_; }

  const Symbol& symbol(SymbolId id) const;

  // Full byte expansion of a symbol; one byte for base symbols.
  std::string_view expansion(SymbolId id) const;
  uint32_t expanded_length(SymbolId id) const;

  // S(a_i): how often each base symbol occurs in the expansion.
  // Values sum to expanded_length(id).
  std::map<SymbolId, uint32_t> char_multiplicity(SymbolId id) const;

  // Base symbol id for a byte, or -1 if the byte is not declared.
  int32_t base_id(uint8_t byte) const { return byte_to_id_[byte]; }

 private:
  std::vector<Symbol> symbols_;
  std::vector<std::string> expansions_;
  std::array<int32_t, 256> byte_to_id_;
  uint32_t nonstandard_count_ = 0;
};

// The message as symbol ids under some alphabet.
struct TokenStream {
  std::vector<SymbolId> tokens;
  uint64_t source_length_bytes = 0;

  size_t size() const { return tokens.size(); }
};

// Non-overlapping occurrence counts per symbol id plus their sum.
class FrequencyTable {
 public:
  FrequencyTable() = default;
  explicit FrequencyTable(size_t symbol_count) : counts_(symbol_count, 0) {}

  static FrequencyTable count(const TokenStream& stream, size_t symbol_count);

  uint64_t at(SymbolId id) const;
  void add(SymbolId id, uint64_t delta);
  void resize(size_t symbol_count) { counts_.resize(symbol_count, 0); }

  uint64_t total() const { return total_; }
  size_t size() const { return counts_.size(); }
  uint64_t max_count() const;

 private:
  std::vector<uint64_t> counts_;
  uint64_t total_ = 0;
};

// MXBITS: bits needed for the largest frequency, at least 1.
uint32_t required_mxbits(const FrequencyTable& freqs);

}  // namespace agsy
