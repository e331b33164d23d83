#include "agsy/tokenizer.hpp"

#include <unordered_map>

#include "agsy/error.hpp"

namespace agsy {
namespace {

// One left-to-right pass.  `match(i)` fires for each leftmost
// non-overlapping occurrence of (left,right) starting at i and the scan
// skips both tokens; `other(i)` fires for every token not consumed by a
// match.  count_pair and apply_aggregate are both thin wrappers, so the
// occurrence convention is shared by construction.
template <typename Match, typename Other>
void scan_pair(std::span<const SymbolId> toks, SymbolId left, SymbolId right,
               Match&& match, Other&& other) {
  size_t i = 0;
  const size_t n = toks.size();
  while (i < n) {
    if (i + 1 < n && toks[i] == left && toks[i + 1] == right) {
      match(i);
      i += 2;
    } else {
      other(i);
      ++i;
    }
  }
}

}  // namespace

TokenStream tokenize_base(std::span<const uint8_t> data, const Alphabet& alphabet) {
  TokenStream stream;
  stream.tokens.reserve(data.size());
  stream.source_length_bytes = data.size();
  for (size_t i = 0; i < data.size(); ++i) {
    int32_t id = alphabet.base_id(data[i]);
    if (id < 0)
      throw Error(Errc::invalid_argument,
                  "byte " + std::to_string(data[i]) + " at offset " +
                      std::to_string(i) + " is not in the alphabet");
    stream.tokens.push_back(static_cast<SymbolId>(id));
  }
  return stream;
}

std::vector<uint8_t> detokenize(const TokenStream& stream, const Alphabet& alphabet) {
  std::vector<uint8_t> out;
  out.reserve(stream.source_length_bytes);
  for (SymbolId id : stream.tokens) {
    std::string_view exp = alphabet.expansion(id);
    out.insert(out.end(), exp.begin(), exp.end());
  }
  return out;
}

std::vector<AggregateCandidate> enumerate_candidates(const TokenStream& stream,
                                                     const Alphabet& alphabet) {
  struct PairStat {
    uint64_t count = 0;
    size_t last_end = 0;  // index one past the last counted occurrence
  };
  std::unordered_map<uint64_t, PairStat> stats;
  const auto& toks = stream.tokens;
  if (toks.size() >= 2) stats.reserve(toks.size() / 4);
  for (size_t i = 0; i + 1 < toks.size(); ++i) {
    uint64_t key = (static_cast<uint64_t>(toks[i]) << 32) | toks[i + 1];
    PairStat& s = stats[key];
    if (s.count > 0 && s.last_end > i) continue;  // overlaps previous occurrence
    ++s.count;
    s.last_end = i + 2;
  }
  std::vector<AggregateCandidate> out;
  out.reserve(stats.size());
  for (const auto& [key, s] : stats) {
    AggregateCandidate c;
    c.left = static_cast<SymbolId>(key >> 32);
    c.right = static_cast<SymbolId>(key & 0xFFFFFFFFu);
    c.count = s.count;
    c.expanded_length =
        alphabet.expanded_length(c.left) + alphabet.expanded_length(c.right);
    out.push_back(c);
  }
  return out;
}

uint64_t count_pair(const TokenStream& stream, SymbolId left, SymbolId right) {
  uint64_t count = 0;
  scan_pair(
      stream.tokens, left, right, [&](size_t) { ++count; }, [](size_t) {});
  return count;
}

TokenStream apply_aggregate(const TokenStream& stream, SymbolId left,
                            SymbolId right, SymbolId new_id) {
  TokenStream out;
  out.source_length_bytes = stream.source_length_bytes;
  out.tokens.reserve(stream.tokens.size());
  const auto& toks = stream.tokens;
  scan_pair(
      toks, left, right, [&](size_t) { out.tokens.push_back(new_id); },
      [&](size_t i) { out.tokens.push_back(toks[i]); });
  return out;
}

}  // namespace agsy
