#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "agsy/symbols.hpp"

namespace agsy {

// Frequency totals are capped so 64-bit interval arithmetic cannot overflow.
inline constexpr uint64_t kMaxCodingTotal = 1ull << 30;

// Static model for the range coder: one half-open interval [cum, cum+freq)
// per symbol, partitioning [0, total).  Built from the exact stream
// frequencies, so it is the same model the gain math prices.
class CodingModel {
 public:
  static CodingModel from_frequencies(const FrequencyTable& freqs);

  uint64_t total() const { return cum_.empty() ? 0 : cum_.back(); }
  size_t symbol_count() const { return cum_.empty() ? 0 : cum_.size() - 1; }
  uint64_t cum(SymbolId id) const { return cum_[id]; }
  uint64_t freq(SymbolId id) const { return cum_[id + 1] - cum_[id]; }

  // Symbol whose interval contains the scaled value, for decoding.
  SymbolId find(uint64_t value) const;

 private:
  std::vector<uint64_t> cum_;  // size symbol_count()+1
};

// Static arithmetic (range) coding of a token stream.  Output length stays
// within a small constant of total()*H; the bound is asserted in tests.
std::vector<uint8_t> encode(std::span<const SymbolId> tokens,
                            const CodingModel& model);

// Exact inverse of encode for the same model and token count.  Verifies the
// decoded symbol counts against the model, so corrupt or truncated payloads
// fail instead of decoding silently wrong.
std::vector<SymbolId> decode(std::span<const uint8_t> bytes,
                             const CodingModel& model, uint64_t token_count);

}  // namespace agsy
