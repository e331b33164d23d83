#pragma once

#include <span>
#include <string>
#include <vector>

#include "agsy/builder.hpp"
#include "agsy/container.hpp"
#include "agsy/symbols.hpp"

namespace agsy {

// Size/rate snapshot at one point of a run.  header_bits includes the
// 15-bit AGCOUNT field; the _excl_agcount tally leaves it out (both appear
// in reports because the reference figures quote the latter).
struct StatsBlock {
  uint32_t aggregate_count = 0;
  uint64_t header_bits = 0;
  uint64_t header_bits_excl_agcount = 0;
  double message_bits = 0.0;  // Shannon-optimal for the current model
  double total_bits = 0.0;    // header_bits + message_bits
  double bpc_message = 0.0;   // per original character
  double bpc_total = 0.0;
};

struct RunReport {
  std::string input_path;
  uint64_t input_bytes = 0;
  uint32_t base_alphabet_size = 0;  // 64 + nonstandard_count
  uint32_t nonstandard_count = 0;
  uint32_t distinct_symbols = 0;    // base symbols that actually occur
  uint32_t mxbits = 1;              // of the document's base frequencies
  StatsBlock initial;
  StatsBlock final_stats;
  std::vector<BuildStep> steps;
  bool has_container = false;
  ContainerStats container;         // set when a container was written
  double verify_max_rel_deviation = -1.0;  // < 0 when --verify was off
  double wall_clock_seconds = 0.0;
};

// Initial statistics only; no aggregate search.
RunReport analyze(std::span<const uint8_t> data, const std::string& path);

// Full greedy build with per-step ledger.
RunReport build_report(std::span<const uint8_t> data, const std::string& path,
                       const BuildConfig& config);

// Build, then write the container.  The returned bytes decompress back to
// `data` exactly.
std::vector<uint8_t> compress(std::span<const uint8_t> data,
                              const std::string& path, const BuildConfig& config,
                              RunReport* report = nullptr);

// Inverse of compress.
std::vector<uint8_t> decompress(std::span<const uint8_t> container);

}  // namespace agsy
