#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "agsy/symbols.hpp"

namespace agsy {

// An adjacent ordered pair of current-alphabet symbols, proposed as a new
// aggregate.  `count` is the number of leftmost-greedy non-overlapping
// occurrences in the stream it was enumerated from.
struct AggregateCandidate {
  SymbolId left = 0;
  SymbolId right = 0;
  uint64_t count = 0;
  uint32_t expanded_length = 0;  // bytes covered by one occurrence
};

// One token per input byte.  Bytes outside the alphabet report position
// and value; Alphabet::for_document never produces such an alphabet for
// its own document.
TokenStream tokenize_base(std::span<const uint8_t> data, const Alphabet& alphabet);

// Concatenated byte expansion of every token.
std::vector<uint8_t> detokenize(const TokenStream& stream, const Alphabet& alphabet);

// Every ordered pair that occurs adjacently, with leftmost-greedy
// non-overlapping counts.  Pairs that never occur are omitted (their gain
// is zero).  Order of the result is unspecified; the builder's selection
// is a total order, so it does not depend on it.
std::vector<AggregateCandidate> enumerate_candidates(const TokenStream& stream,
                                                     const Alphabet& alphabet);

// Leftmost-greedy count for a single pair.  Shares the scan with
// apply_aggregate, so counting and replacement cannot disagree.
uint64_t count_pair(const TokenStream& stream, SymbolId left, SymbolId right);

// Replace each leftmost non-overlapping (left,right) adjacency with new_id.
// Removes exactly count_pair(stream,left,right) tokens.
TokenStream apply_aggregate(const TokenStream& stream, SymbolId left,
                            SymbolId right, SymbolId new_id);

}  // namespace agsy
