#include "agsy/builder.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "agsy/error.hpp"
#include "agsy/header_codec.hpp"

namespace agsy {
namespace {

struct Scored {
  double gain = 0.0;
  AggregateCandidate candidate;
};

// Total order: higher gain wins, ties go to the lowest (left,right).  Total,
// so the argmax is the same whatever the scan or chunk order.
bool better(const Scored& a, const Scored& b) {
  if (a.gain != b.gain) return a.gain > b.gain;
  if (a.candidate.left != b.candidate.left)
    return a.candidate.left < b.candidate.left;
  return a.candidate.right < b.candidate.right;
}

Scored best_candidate(const FrequencyTable& freqs,
                      std::span<const AggregateCandidate> candidates,
                      unsigned threads) {
  auto scan = [&](size_t begin, size_t end) {
    Scored best{-HUGE_VAL, {}};
    for (size_t i = begin; i < end; ++i) {
      Scored s{gain_frequency_form(freqs, candidates[i]), candidates[i]};
      if (better(s, best)) best = s;
    }
    return best;
  };

  if (threads <= 1 || candidates.size() < 4096) return scan(0, candidates.size());

  const size_t chunk = (candidates.size() + threads - 1) / threads;
  std::vector<Scored> partial(threads, Scored{-HUGE_VAL, {}});
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    const size_t begin = std::min(candidates.size(), t * chunk);
    const size_t end = std::min(candidates.size(), begin + chunk);
    pool.emplace_back([&, t, begin, end] { partial[t] = scan(begin, end); });
  }
  for (auto& th : pool) th.join();

  Scored best{-HUGE_VAL, {}};
  for (const Scored& s : partial)
    if (better(s, best)) best = s;
  return best;
}

double relative_deviation(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

}  // namespace

uint32_t marginal_header_cost(const Alphabet& alphabet, uint32_t freq_bits) {
  return freq_bits + 2 * ceil_log2(alphabet.size());
}

BuildResult build(TokenStream stream, Alphabet alphabet, const BuildConfig& config) {
  BuildResult result;
  const uint64_t source_bytes = stream.source_length_bytes;

  FrequencyTable freqs = FrequencyTable::count(stream, alphabet.size());
  const bool empty = stream.tokens.empty();
  if (config.verify) result.verify_max_rel_deviation = 0.0;
  result.document_mxbits = required_mxbits(freqs);
  result.initial_message_bits = empty ? 0.0 : message_code_length(freqs);
  result.initial_header_bits = header_bit_size(alphabet, result.document_mxbits);

  double message_bits = result.initial_message_bits;
  uint64_t header_bits = result.initial_header_bits;
  auto bpc_total = [&] {
    return source_bytes == 0
               ? 0.0
               : (message_bits + double(header_bits)) / double(source_bytes);
  };

  unsigned threads = config.threads != 0 ? config.threads
                                         : std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;

  while (!empty) {
    if (config.max_aggregates && result.steps.size() >= *config.max_aggregates)
      break;
    if (config.stop_at_bpc && bpc_total() <= *config.stop_at_bpc) break;

    const std::vector<AggregateCandidate> candidates =
        enumerate_candidates(stream, alphabet);
    if (candidates.empty()) break;

    const Scored best = best_candidate(freqs, candidates, threads);
    const uint32_t cost = marginal_header_cost(alphabet, result.document_mxbits);
    if (!(best.gain > double(cost) + config.min_net_gain_bits)) break;

    if (config.verify) {
      const double oracle = oracle_gain(stream, alphabet, best.candidate);
      const GainBreakdown breakdown = char_gain(freqs, best.candidate);
      result.verify_max_rel_deviation =
          std::max({result.verify_max_rel_deviation,
                    relative_deviation(best.gain, oracle),
                    relative_deviation(breakdown.total_gain, oracle)});
    }

    const SymbolId new_id =
        alphabet.add_aggregate(best.candidate.left, best.candidate.right);
    stream = apply_aggregate(stream, best.candidate.left, best.candidate.right,
                             new_id);
    freqs = FrequencyTable::count(stream, alphabet.size());
    message_bits = message_code_length(freqs);
    header_bits += cost;

    BuildStep step;
    step.step_index = static_cast<uint32_t>(result.steps.size() + 1);
    step.symbol_id = new_id;
    step.left = best.candidate.left;
    step.right = best.candidate.right;
    step.expansion = std::string(alphabet.expansion(new_id));
    step.frequency = best.candidate.count;
    step.gain_bits = best.gain;
    step.header_cost_bits = cost;
    step.message_bits_after = message_bits;
    step.alphabet_bits_after = header_bits;
    step.bpc_message =
        source_bytes == 0 ? 0.0 : message_bits / double(source_bytes);
    step.bpc_total = bpc_total();
    result.steps.push_back(std::move(step));
  }

  result.alphabet = std::move(alphabet);
  result.stream = std::move(stream);
  result.freqs = std::move(freqs);
  return result;
}

}  // namespace agsy
