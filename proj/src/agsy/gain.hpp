#pragma once

#include <map>

#include "agsy/symbols.hpp"
#include "agsy/tokenizer.hpp"

namespace agsy {

// Shannon-optimal length of the whole message in bits:
//   N*log2(N) - sum_x f_x*log2(f_x),  with 0*log2(0) = 0.
// Real-valued; integer packaging happens only in the entropy coder.
double message_code_length(const FrequencyTable& freqs);

// Every intermediate quantity of the per-character gain, kept for audit.
// char_gain == entropy_before - entropy_after + correction.
struct GainBreakdown {
  double p_s = 0.0;       // probability of the new symbol, f_S/N
  uint32_t r = 2;         // constituent symbols condensed per occurrence
  double mu_s = 1.0;      // rescale constant 1 - p_s*(r-1) = N'/N
  std::map<SymbolId, double> lambda;  // residual constituent probabilities
  double entropy_before = 0.0;  // sum p*log2(1/p) over distinct constituents
  double entropy_after = 0.0;   // sum lambda*log2(1/lambda)
  double correction = 0.0;      // mu_s*log2(1/mu_s) - p_s*log2(1/p_s)
  double char_gain = 0.0;       // bits per character of the current message
  double total_gain = 0.0;      // N * char_gain
};

// Coding gain of adding the candidate, in bits over the whole message,
// computed from frequencies:
//   N*log2(N) - N'*log2(N') + f_S*log2(f_S)
//   - sum_{a in S} f_a*log2(f_a) + sum_{a in S} f'_a*log2(f'_a)
// with N' = N - f_S*(r-1) and f'_a = f_a - f_S*S(a).  A candidate with
// count 0 has zero gain.  Positive means the optimally encoded message
// shrinks.
double gain_frequency_form(const FrequencyTable& freqs,
                           const AggregateCandidate& candidate);

// The same gain in probability form (difference of two entropies plus a
// correction), with the full breakdown.  gain_frequency_form equals
// total_gain up to floating-point noise; the equivalence is fuzz-tested.
GainBreakdown char_gain(const FrequencyTable& freqs,
                        const AggregateCandidate& candidate);

// Brute-force reference: retokenize the stream with the candidate applied
// and return message_code_length(before) - message_code_length(after).
// Test/verification use only; independent of the closed forms above.
double oracle_gain(const TokenStream& stream, const Alphabet& alphabet,
                   const AggregateCandidate& candidate);

}  // namespace agsy
