#include "agsy/pipeline.hpp"

#include <chrono>

#include "agsy/gain.hpp"
#include "agsy/header_codec.hpp"
#include "agsy/tokenizer.hpp"

namespace agsy {
namespace {

constexpr uint64_t kAgcountFieldBits = 15;

StatsBlock stats_block(uint32_t aggregate_count, uint64_t header_bits,
                       double message_bits, uint64_t input_bytes) {
  StatsBlock s;
  s.aggregate_count = aggregate_count;
  s.header_bits = header_bits;
  s.header_bits_excl_agcount = header_bits - kAgcountFieldBits;
  s.message_bits = message_bits;
  s.total_bits = double(header_bits) + message_bits;
  if (input_bytes > 0) {
    s.bpc_message = message_bits / double(input_bytes);
    s.bpc_total = s.total_bits / double(input_bytes);
  }
  return s;
}

RunReport run(std::span<const uint8_t> data, const std::string& path,
              const BuildConfig& config, bool search,
              std::vector<uint8_t>* container_out) {
  const auto t0 = std::chrono::steady_clock::now();

  RunReport report;
  report.input_path = path;
  report.input_bytes = data.size();

  Alphabet alphabet = Alphabet::for_document(data);
  report.base_alphabet_size = alphabet.base_count();
  report.nonstandard_count = alphabet.nonstandard_count();

  TokenStream stream = tokenize_base(data, alphabet);
  {
    const FrequencyTable base = FrequencyTable::count(stream, alphabet.size());
    for (SymbolId id = 0; id < base.size(); ++id)
      if (base.at(id) > 0) ++report.distinct_symbols;
  }

  BuildConfig effective = config;
  if (!search) effective.max_aggregates = 0;
  BuildResult built = build(std::move(stream), std::move(alphabet), effective);

  report.mxbits = built.document_mxbits;
  report.verify_max_rel_deviation = built.verify_max_rel_deviation;
  report.initial = stats_block(0, built.initial_header_bits,
                               built.initial_message_bits, report.input_bytes);
  report.steps = built.steps;

  const uint64_t final_header =
      built.steps.empty() ? built.initial_header_bits
                          : built.steps.back().alphabet_bits_after;
  const double final_message = built.steps.empty()
                                   ? built.initial_message_bits
                                   : built.steps.back().message_bits_after;
  report.final_stats =
      stats_block(static_cast<uint32_t>(built.steps.size()), final_header,
                  final_message, report.input_bytes);

  if (container_out) {
    *container_out = write_container(built.alphabet, built.freqs,
                                     built.stream.tokens, &report.container);
    report.has_container = true;
  }

  report.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

}  // namespace

RunReport analyze(std::span<const uint8_t> data, const std::string& path) {
  return run(data, path, BuildConfig{}, false, nullptr);
}

RunReport build_report(std::span<const uint8_t> data, const std::string& path,
                       const BuildConfig& config) {
  return run(data, path, config, true, nullptr);
}

std::vector<uint8_t> compress(std::span<const uint8_t> data,
                              const std::string& path, const BuildConfig& config,
                              RunReport* report) {
  std::vector<uint8_t> container;
  RunReport r = run(data, path, config, true, &container);
  if (report) *report = std::move(r);
  return container;
}

std::vector<uint8_t> decompress(std::span<const uint8_t> container) {
  return read_container(container);
}

}  // namespace agsy
