#include "agsy/gain.hpp"

#include <cmath>

#include "agsy/error.hpp"

namespace agsy {
namespace {

// f*log2(f) with the 0*log2(0) = 0 convention made explicit.
long double flog2f(uint64_t f) {
  if (f == 0) return 0.0L;
  return static_cast<long double>(f) * std::log2(static_cast<long double>(f));
}

// p*log2(1/p), again with 0 mapping to 0.
long double plog2_inv(long double p) {
  if (p <= 0.0L) return 0.0L;
  return -p * std::log2(p);
}

// Pair-level constituents: one or two distinct ids with multiplicities
// summing to 2.
struct Constituents {
  SymbolId id[2];
  uint32_t mult[2];
  int distinct;
};

Constituents constituents_of(const AggregateCandidate& c) {
  if (c.left == c.right) return {{c.left, 0}, {2, 0}, 1};
  return {{c.left, c.right}, {1, 1}, 2};
}

void check_candidate(const FrequencyTable& freqs, const AggregateCandidate& c) {
  if (freqs.total() == 0)
    throw Error(Errc::invalid_argument, "gain over an empty frequency table");
  const Constituents k = constituents_of(c);
  for (int i = 0; i < k.distinct; ++i) {
    uint64_t f = freqs.at(k.id[i]);  // throws on unknown id
    if (c.count * k.mult[i] > f)
      throw Error(Errc::invalid_argument,
                  "candidate consumes symbol " + std::to_string(k.id[i]) +
                      " " + std::to_string(c.count * k.mult[i]) +
                      " times but it occurs only " + std::to_string(f));
  }
  // r-1 == 1 for pair candidates.
  if (c.count >= freqs.total() && c.count > 0)
    throw Error(Errc::invalid_argument,
                "candidate would condense the message below one token");
}

}  // namespace

double message_code_length(const FrequencyTable& freqs) {
  if (freqs.total() == 0)
    throw Error(Errc::invalid_argument,
                "message_code_length of an empty frequency table");
  long double sum = 0.0L;
  for (size_t id = 0; id < freqs.size(); ++id)
    sum += flog2f(freqs.at(static_cast<SymbolId>(id)));
  return static_cast<double>(flog2f(freqs.total()) - sum);
}

double gain_frequency_form(const FrequencyTable& freqs,
                           const AggregateCandidate& candidate) {
  check_candidate(freqs, candidate);
  if (candidate.count == 0) return 0.0;

  const uint64_t n = freqs.total();
  const uint64_t f_s = candidate.count;
  const uint64_t n_after = n - f_s;  // N' = N - f_S*(r-1), r = 2

  long double gain = flog2f(n) - flog2f(n_after) + flog2f(f_s);
  const Constituents k = constituents_of(candidate);
  for (int i = 0; i < k.distinct; ++i) {
    uint64_t f = freqs.at(k.id[i]);
    gain -= flog2f(f);
    gain += flog2f(f - f_s * k.mult[i]);
  }
  return static_cast<double>(gain);
}

GainBreakdown char_gain(const FrequencyTable& freqs,
                        const AggregateCandidate& candidate) {
  check_candidate(freqs, candidate);

  GainBreakdown b;
  b.r = 2;
  const long double n = static_cast<long double>(freqs.total());
  const uint64_t f_s = candidate.count;
  const long double p_s = static_cast<long double>(f_s) / n;
  // mu_s = N'/N, derived from the integer counts.
  const long double mu_s = static_cast<long double>(freqs.total() - f_s) / n;

  long double before = 0.0L;
  long double after = 0.0L;
  const Constituents k = constituents_of(candidate);
  for (int i = 0; i < k.distinct; ++i) {
    const uint64_t f = freqs.at(k.id[i]);
    const long double p = static_cast<long double>(f) / n;
    // lambda = p - p_s*S(a), from integers: (f - f_S*S(a)) / N.
    const long double lambda =
        static_cast<long double>(f - f_s * k.mult[i]) / n;
    before += plog2_inv(p);
    after += plog2_inv(lambda);
    b.lambda[k.id[i]] = static_cast<double>(lambda);
  }
  const long double correction = plog2_inv(mu_s) - plog2_inv(p_s);
  const long double cg = before - after + correction;

  b.p_s = static_cast<double>(p_s);
  b.mu_s = static_cast<double>(mu_s);
  b.entropy_before = static_cast<double>(before);
  b.entropy_after = static_cast<double>(after);
  b.correction = static_cast<double>(correction);
  b.char_gain = static_cast<double>(cg);
  b.total_gain = static_cast<double>(cg * n);
  return b;
}

double oracle_gain(const TokenStream& stream, const Alphabet& alphabet,
                   const AggregateCandidate& candidate) {
  alphabet.symbol(candidate.left);
  alphabet.symbol(candidate.right);
  if (stream.tokens.empty()) return 0.0;

  const FrequencyTable before = FrequencyTable::count(stream, alphabet.size());
  const SymbolId scratch_id = static_cast<SymbolId>(alphabet.size());
  TokenStream replaced =
      apply_aggregate(stream, candidate.left, candidate.right, scratch_id);
  const FrequencyTable after =
      FrequencyTable::count(replaced, alphabet.size() + 1);
  return message_code_length(before) - message_code_length(after);
}

}  // namespace agsy
