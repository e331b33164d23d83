#pragma once

#include <optional>
#include <string>
#include <vector>

#include "agsy/gain.hpp"
#include "agsy/symbols.hpp"
#include "agsy/tokenizer.hpp"

namespace agsy {

struct BuildConfig {
  std::optional<uint64_t> max_aggregates;  // absent = unlimited
  double min_net_gain_bits = 0.0;   // extra margin a step must clear
  std::optional<double> stop_at_bpc;
  unsigned threads = 0;             // 0 = hardware concurrency
  bool verify = false;              // cross-check accepted gains vs the oracle
};

struct BuildStep {
  uint32_t step_index = 0;  // 1-based
  SymbolId symbol_id = 0;
  SymbolId left = 0;
  SymbolId right = 0;
  std::string expansion;
  uint64_t frequency = 0;        // f_S at selection time
  double gain_bits = 0.0;        // gain at selection time, on the then-current stream
  uint32_t header_cost_bits = 0;
  double message_bits_after = 0.0;
  uint64_t alphabet_bits_after = 0;
  double bpc_message = 0.0;
  double bpc_total = 0.0;
};

struct BuildResult {
  Alphabet alphabet;
  TokenStream stream;
  FrequencyTable freqs;  // of the final stream
  std::vector<BuildStep> steps;
  uint32_t document_mxbits = 1;
  double initial_message_bits = 0.0;
  uint64_t initial_header_bits = 0;
  double verify_max_rel_deviation = -1.0;  // < 0 when verify was off
};

// Bits one more aggregate entry adds to the header:
//   freq_bits + 2*ceil(log2(alphabet size before adding)).
uint32_t marginal_header_cost(const Alphabet& alphabet, uint32_t freq_bits);

// Greedy search: score every adjacent pair on the current stream, take the
// highest gain (ties: lowest (left,right)), accept while the gain exceeds
// the marginal header cost plus the configured margin.  Deterministic for
// a given input and config, regardless of thread count.
BuildResult build(TokenStream stream, Alphabet alphabet,
                  const BuildConfig& config = {});

}  // namespace agsy
