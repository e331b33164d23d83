#include "agsy/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace agsy {
namespace {

using nlohmann::ordered_json;

double round4(double v) {
  if (!std::isfinite(v)) return v;
  return std::round(v * 1e4) / 1e4;
}

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

ordered_json stats_json(const StatsBlock& s) {
  return ordered_json{{"aggregate_count", s.aggregate_count},
                      {"header_bits", s.header_bits},
                      {"header_bits_excl_agcount", s.header_bits_excl_agcount},
                      {"message_bits", round4(s.message_bits)},
                      {"total_bits", round4(s.total_bits)},
                      {"bpc_message", round4(s.bpc_message)},
                      {"bpc_total", round4(s.bpc_total)}};
}

ordered_json report_json(const RunReport& r) {
  ordered_json j;
  j["schema_version"] = 1;
  j["input_path"] = r.input_path;
  j["input_bytes"] = r.input_bytes;
  j["base_alphabet_size"] = r.base_alphabet_size;
  j["nonstandard_count"] = r.nonstandard_count;
  j["distinct_symbols"] = r.distinct_symbols;
  j["mxbits"] = r.mxbits;
  j["initial"] = stats_json(r.initial);
  ordered_json steps = ordered_json::array();
  for (const BuildStep& s : r.steps) {
    steps.push_back(ordered_json{{"step", s.step_index},
                                 {"symbol", escape_bytes(s.expansion)},
                                 {"left", s.left},
                                 {"right", s.right},
                                 {"freq", s.frequency},
                                 {"gain_bits", round4(s.gain_bits)},
                                 {"header_cost_bits", s.header_cost_bits},
                                 {"message_bits_after", round4(s.message_bits_after)},
                                 {"alphabet_bits_after", s.alphabet_bits_after},
                                 {"bpc_message", round4(s.bpc_message)},
                                 {"bpc_total", round4(s.bpc_total)}});
  }
  j["steps"] = std::move(steps);
  j["final"] = stats_json(r.final_stats);
  if (r.has_container) {
    j["container"] = ordered_json{
        {"framing_bits", r.container.framing_bits},
        {"header_bits", r.container.header_bits},
        {"header_padding_bits", r.container.header_padding_bits},
        {"payload_bits", r.container.payload_bits},
        {"total_bits", r.container.total_bits},
        {"total_bytes", r.container.total_bits / 8},
        {"bpc", r.input_bytes == 0
                    ? 0.0
                    : round4(double(r.container.total_bits) / double(r.input_bytes))}};
  }
  if (r.verify_max_rel_deviation >= 0.0)
    j["verify_max_rel_deviation"] = r.verify_max_rel_deviation;
  j["wall_clock_seconds"] = round4(r.wall_clock_seconds);
  return j;
}

}  // namespace

std::string escape_bytes(std::string_view bytes) {
  std::string out;
  out.reserve(bytes.size());
  for (unsigned char c : bytes) {
    switch (c) {
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      default:
        if (c >= 0x20 && c < 0x7F) {
          out += static_cast<char>(c);
        } else {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\x%02X", c);
          out += buf;
        }
    }
  }
  return out;
}

std::string report_to_json(const RunReport& report) {
  return report_json(report).dump(2) + "\n";
}

std::string report_to_csv(const RunReport& report) {
  std::ostringstream out;
  out << "step,symbol_expansion_escaped,freq,gain_bits,header_cost_bits,"
         "bpc_message,bpc_total\n";
  for (const BuildStep& s : report.steps) {
    out << s.step_index << ",\"" << escape_bytes(s.expansion) << "\","
        << s.frequency << ',' << fixed4(s.gain_bits) << ','
        << s.header_cost_bits << ',' << fixed4(s.bpc_message) << ','
        << fixed4(s.bpc_total) << '\n';
  }
  return out.str();
}

}  // namespace agsy
