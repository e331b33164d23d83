// agsy command line: analysis, alphabet construction, compression,
// decompression and corpus benchmarking over the C API.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "agsy.h"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

// Exit codes: 0 success, 1 usage, 2 i/o, 3 format/capacity.
constexpr int kExitIo = 2;
constexpr int kExitFormat = 3;

struct CliError {
  int exit_code;
  std::string message;
};

int exit_code_of(agsy_status status) {
  return status == AGSY_E_IO ? kExitIo : kExitFormat;
}

void check(agsy_status status, const std::string& what) {
  if (status == AGSY_OK) return;
  throw CliError{exit_code_of(status), what + ": " + agsy_status_name(status) +
                                           " (" + agsy_last_error_message() + ")"};
}

std::vector<uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kExitIo, "cannot open " + path};
  std::vector<uint8_t> data((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
  if (in.bad()) throw CliError{kExitIo, "read failed on " + path};
  return data;
}

void write_file(const std::string& path, const void* data, size_t size) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CliError{kExitIo, "cannot create " + path};
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
  if (!out) throw CliError{kExitIo, "write failed on " + path};
}

// RAII for the C handles.
struct Buffer {
  agsy_buffer* ptr = nullptr;
  ~Buffer() { agsy_buffer_free(ptr); }
  std::string str() const {
    return {reinterpret_cast<const char*>(agsy_buffer_data(ptr)),
            agsy_buffer_size(ptr)};
  }
};

struct Report {
  agsy_report* ptr = nullptr;
  ~Report() { agsy_report_free(ptr); }

  ordered_json json() const {
    Buffer b;
    check(agsy_report_to_json(ptr, &b.ptr), "report serialization");
    return ordered_json::parse(b.str());
  }
  std::string csv() const {
    Buffer b;
    check(agsy_report_to_csv(ptr, &b.ptr), "report serialization");
    return b.str();
  }
};

struct BuildFlags {
  int64_t max_symbols = -1;
  double stop_bpc = 0.0;
  double min_net_gain = 0.0;
  int32_t threads = 0;
  bool verify = false;

  agsy_build_options options() const {
    agsy_build_options o;
    agsy_build_options_init(&o);
    o.max_symbols = max_symbols;
    o.stop_bpc = stop_bpc;
    o.min_net_gain_bits = min_net_gain;
    o.threads = threads;
    o.verify = verify ? 1 : 0;
    return o;
  }
};

struct ReportFlags {
  std::string path;
  std::string format = "json";
};

void add_build_flags(CLI::App* cmd, BuildFlags& f) {
  cmd->add_option("--max-symbols", f.max_symbols,
                  "Maximum aggregate symbols to add (-1 = unlimited)");
  cmd->add_option("--stop-bpc", f.stop_bpc,
                  "Stop once total bits per character reaches this");
  cmd->add_option("--min-net-gain", f.min_net_gain,
                  "Extra bits a step must gain beyond its header cost");
  cmd->add_option("--threads", f.threads,
                  "Scoring threads (0 = all cores); output is identical "
                  "for any value");
  cmd->add_flag("--verify", f.verify,
                "Cross-check accepted gains against the brute-force oracle");
}

void add_report_flags(CLI::App* cmd, ReportFlags& f) {
  cmd->add_option("--report", f.path, "Write a machine-readable report here");
  cmd->add_option("--format", f.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));
}

void write_report(const Report& report, const ReportFlags& flags) {
  if (flags.path.empty()) return;
  const std::string text = flags.format == "csv" ? report.csv()
                                                 : report.json().dump(2) + "\n";
  write_file(flags.path, text.data(), text.size());
}

void print_stats(const char* label, const ordered_json& s) {
  std::printf(
      "%s: header %llu bits (%llu excl AGCOUNT), message %.4f bits, "
      "%.4f bpc message, %.4f bpc total\n",
      label, s["header_bits"].get<unsigned long long>(),
      s["header_bits_excl_agcount"].get<unsigned long long>(),
      s["message_bits"].get<double>(), s["bpc_message"].get<double>(),
      s["bpc_total"].get<double>());
}

void print_summary(const ordered_json& j, bool verbose) {
  std::printf("%s: %llu bytes, base alphabet %u (64 standard + %u document), "
              "mxbits %u\n",
              j["input_path"].get<std::string>().c_str(),
              j["input_bytes"].get<unsigned long long>(),
              j["base_alphabet_size"].get<unsigned>(),
              j["nonstandard_count"].get<unsigned>(),
              j["mxbits"].get<unsigned>());
  print_stats("initial", j["initial"]);
  if (verbose) {
    for (const auto& s : j["steps"]) {
      std::printf("step %4u: +\"%s\" freq %llu gain %.4f bits (cost %u) -> "
                  "%.4f bpc total\n",
                  s["step"].get<unsigned>(),
                  s["symbol"].get<std::string>().c_str(),
                  s["freq"].get<unsigned long long>(),
                  s["gain_bits"].get<double>(),
                  s["header_cost_bits"].get<unsigned>(),
                  s["bpc_total"].get<double>());
    }
  }
  const auto& f = j["final"];
  std::printf("aggregates accepted: %u\n", f["aggregate_count"].get<unsigned>());
  print_stats("final", f);
  if (j.contains("verify_max_rel_deviation"))
    std::printf("verify: max relative deviation vs oracle %.3e\n",
                j["verify_max_rel_deviation"].get<double>());
}

int run_analyze(const std::string& path, const ReportFlags& rf) {
  const std::vector<uint8_t> data = read_file(path);
  Report report;
  check(agsy_analyze(data.data(), data.size(), path.c_str(), &report.ptr),
        "analyze");
  print_summary(report.json(), false);
  write_report(report, rf);
  return 0;
}

int run_build(const std::string& path, const BuildFlags& bf,
              const ReportFlags& rf, bool verbose) {
  const std::vector<uint8_t> data = read_file(path);
  const agsy_build_options options = bf.options();
  Report report;
  check(agsy_build(data.data(), data.size(), path.c_str(), &options, &report.ptr),
        "build");
  print_summary(report.json(), verbose);
  write_report(report, rf);
  return 0;
}

int run_compress(const std::string& in_path, const std::string& out_path,
                 const BuildFlags& bf, const ReportFlags& rf) {
  const std::vector<uint8_t> data = read_file(in_path);
  const agsy_build_options options = bf.options();
  Buffer container;
  Report report;
  check(agsy_compress(data.data(), data.size(), in_path.c_str(), &options,
                      &container.ptr, &report.ptr),
        "compress");
  write_file(out_path, agsy_buffer_data(container.ptr),
             agsy_buffer_size(container.ptr));
  const size_t out_size = agsy_buffer_size(container.ptr);
  std::printf("%s: %zu bytes -> %s: %zu bytes (%.4f bpc)\n", in_path.c_str(),
              data.size(), out_path.c_str(), out_size,
              data.empty() ? 0.0 : 8.0 * double(out_size) / double(data.size()));
  write_report(report, rf);
  return 0;
}

int run_decompress(const std::string& in_path, const std::string& out_path) {
  const std::vector<uint8_t> data = read_file(in_path);
  Buffer bytes;
  check(agsy_decompress(data.data(), data.size(), &bytes.ptr), "decompress");
  write_file(out_path, agsy_buffer_data(bytes.ptr), agsy_buffer_size(bytes.ptr));
  std::printf("%s: %zu bytes -> %s: %zu bytes\n", in_path.c_str(), data.size(),
              out_path.c_str(), agsy_buffer_size(bytes.ptr));
  return 0;
}

int run_bench(const std::string& dir, const BuildFlags& bf,
              const ReportFlags& rf) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec))
    throw CliError{kExitIo, dir + " is not a directory"};

  std::vector<std::string> paths;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) paths.push_back(entry.path().string());
  }
  std::sort(paths.begin(), paths.end());

  const agsy_build_options options = bf.options();
  ordered_json files = ordered_json::array();
  std::printf("%-32s %12s %10s %12s %8s\n", "file", "bytes", "symbols",
              "total_bits", "bpc");
  for (const std::string& path : paths) {
    std::vector<uint8_t> data;
    try {
      data = read_file(path);
    } catch (const CliError& e) {
      std::fprintf(stderr, "warning: skipping %s (%s)\n", path.c_str(),
                   e.message.c_str());
      continue;
    }
    Report report;
    const agsy_status status =
        agsy_build(data.data(), data.size(), path.c_str(), &options, &report.ptr);
    if (status != AGSY_OK) {
      std::fprintf(stderr, "warning: skipping %s (%s: %s)\n", path.c_str(),
                   agsy_status_name(status), agsy_last_error_message());
      continue;
    }
    ordered_json j = report.json();
    const auto& f = j["final"];
    std::printf("%-32s %12llu %10u %12.0f %8.4f\n",
                fs::path(path).filename().string().c_str(),
                j["input_bytes"].get<unsigned long long>(),
                f["aggregate_count"].get<unsigned>(),
                f["total_bits"].get<double>(), f["bpc_total"].get<double>());
    files.push_back(std::move(j));
  }

  if (!rf.path.empty()) {
    std::string text;
    if (rf.format == "csv") {
      std::string out =
          "file,input_bytes,aggregate_count,header_bits,message_bits,"
          "total_bits,bpc_message,bpc_total\n";
      char line[512];
      for (const auto& j : files) {
        const auto& f = j["final"];
        std::snprintf(line, sizeof(line), "\"%s\",%llu,%u,%llu,%.4f,%.4f,%.4f,%.4f\n",
                      j["input_path"].get<std::string>().c_str(),
                      j["input_bytes"].get<unsigned long long>(),
                      f["aggregate_count"].get<unsigned>(),
                      f["header_bits"].get<unsigned long long>(),
                      f["message_bits"].get<double>(),
                      f["total_bits"].get<double>(), f["bpc_message"].get<double>(),
                      f["bpc_total"].get<double>());
        out += line;
      }
      text = std::move(out);
    } else {
      ordered_json j;
      j["schema_version"] = 1;
      j["files"] = std::move(files);
      text = j.dump(2) + "\n";
    }
    write_file(rf.path, text.data(), text.size());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"aggregate-symbol text compression"};
  app.set_version_flag("--version", agsy_version());
  app.require_subcommand(1);

  std::string in_path, out_path, dir;
  BuildFlags build_flags;
  ReportFlags report_flags;
  bool verbose = false;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Initial statistics without building aggregates");
  analyze->add_option("file", in_path)->required();
  add_report_flags(analyze, report_flags);

  CLI::App* build = app.add_subcommand(
      "build", "Construct the aggregate alphabet and report each step");
  build->add_option("file", in_path)->required();
  add_build_flags(build, build_flags);
  add_report_flags(build, report_flags);
  build->add_flag("-v,--verbose", verbose, "Print every accepted step");

  CLI::App* compress =
      app.add_subcommand("compress", "Compress a file into an AGSY container");
  compress->add_option("file", in_path)->required();
  compress->add_option("output", out_path)->required();
  add_build_flags(compress, build_flags);
  add_report_flags(compress, report_flags);

  CLI::App* decompress =
      app.add_subcommand("decompress", "Restore the original file");
  decompress->add_option("input", in_path)->required();
  decompress->add_option("output", out_path)->required();

  CLI::App* bench =
      app.add_subcommand("bench", "Run the builder over a directory of files");
  bench->add_option("dir", dir)->required();
  add_build_flags(bench, build_flags);
  add_report_flags(bench, report_flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(in_path, report_flags);
    if (build->parsed()) return run_build(in_path, build_flags, report_flags, verbose);
    if (compress->parsed())
      return run_compress(in_path, out_path, build_flags, report_flags);
    if (decompress->parsed()) return run_decompress(in_path, out_path);
    if (bench->parsed()) return run_bench(dir, build_flags, report_flags);
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return e.exit_code;
  }
  return 0;
}
