#include "agsy.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "agsy/error.hpp"
#include "agsy/pipeline.hpp"
#include "agsy/report.hpp"

struct agsy_buffer {
  std::vector<uint8_t> bytes;
};

struct agsy_report {
  agsy::RunReport rep;
};

namespace {

thread_local std::string g_last_error;

agsy_status status_of(agsy::Errc code) {
  switch (code) {
    case agsy::Errc::invalid_argument: return AGSY_E_INVALID;
    case agsy::Errc::io: return AGSY_E_IO;
    case agsy::Errc::format: return AGSY_E_FORMAT;
    case agsy::Errc::capacity: return AGSY_E_CAPACITY;
  }
  return AGSY_E_INTERNAL;
}

template <typename Fn>
agsy_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return AGSY_OK;
  } catch (const agsy::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return AGSY_E_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return AGSY_E_INTERNAL;
  }
}

std::span<const uint8_t> as_span(const void* data, size_t size) {
  return {static_cast<const uint8_t*>(data), size};
}

agsy::BuildConfig config_of(const agsy_build_options* options) {
  agsy::BuildConfig c;
  if (!options) return c;
  if (options->max_symbols >= 0)
    c.max_aggregates = static_cast<uint64_t>(options->max_symbols);
  if (options->stop_bpc > 0) c.stop_at_bpc = options->stop_bpc;
  c.min_net_gain_bits = options->min_net_gain_bits;
  c.threads = options->threads > 0 ? static_cast<unsigned>(options->threads) : 0;
  c.verify = options->verify != 0;
  return c;
}

agsy_buffer* buffer_of(std::vector<uint8_t> bytes) {
  return new agsy_buffer{std::move(bytes)};
}

agsy_buffer* buffer_of(const std::string& text) {
  return new agsy_buffer{{text.begin(), text.end()}};
}

}  // namespace

extern "C" {

void agsy_build_options_init(agsy_build_options* options) {
  if (!options) return;
  options->max_symbols = -1;
  options->stop_bpc = 0.0;
  options->min_net_gain_bits = 0.0;
  options->threads = 0;
  options->verify = 0;
}

agsy_status agsy_analyze(const void* data, size_t size, const char* name,
                         agsy_report** out_report) {
  if ((!data && size > 0) || !out_report) {
    g_last_error = "null argument";
    return AGSY_E_INVALID;
  }
  return guarded([&] {
    *out_report =
        new agsy_report{agsy::analyze(as_span(data, size), name ? name : "")};
  });
}

agsy_status agsy_build(const void* data, size_t size, const char* name,
                       const agsy_build_options* options,
                       agsy_report** out_report) {
  if ((!data && size > 0) || !out_report) {
    g_last_error = "null argument";
    return AGSY_E_INVALID;
  }
  return guarded([&] {
    *out_report = new agsy_report{agsy::build_report(
        as_span(data, size), name ? name : "", config_of(options))};
  });
}

agsy_status agsy_compress(const void* data, size_t size, const char* name,
                          const agsy_build_options* options,
                          agsy_buffer** out_container, agsy_report** out_report) {
  if ((!data && size > 0) || !out_container) {
    g_last_error = "null argument";
    return AGSY_E_INVALID;
  }
  return guarded([&] {
    agsy::RunReport report;
    std::vector<uint8_t> container = agsy::compress(
        as_span(data, size), name ? name : "", config_of(options), &report);
    *out_container = buffer_of(std::move(container));
    if (out_report) *out_report = new agsy_report{std::move(report)};
  });
}

agsy_status agsy_decompress(const void* data, size_t size,
                            agsy_buffer** out_bytes) {
  if ((!data && size > 0) || !out_bytes) {
    g_last_error = "null argument";
    return AGSY_E_INVALID;
  }
  return guarded([&] {
    *out_bytes = buffer_of(agsy::decompress(as_span(data, size)));
  });
}

const uint8_t* agsy_buffer_data(const agsy_buffer* buffer) {
  return buffer ? buffer->bytes.data() : nullptr;
}

size_t agsy_buffer_size(const agsy_buffer* buffer) {
  return buffer ? buffer->bytes.size() : 0;
}

void agsy_buffer_free(agsy_buffer* buffer) { delete buffer; }

agsy_status agsy_report_to_json(const agsy_report* report, agsy_buffer** out) {
  if (!report || !out) {
    g_last_error = "null argument";
    return AGSY_E_INVALID;
  }
  return guarded([&] { *out = buffer_of(agsy::report_to_json(report->rep)); });
}

agsy_status agsy_report_to_csv(const agsy_report* report, agsy_buffer** out) {
  if (!report || !out) {
    g_last_error = "null argument";
    return AGSY_E_INVALID;
  }
  return guarded([&] { *out = buffer_of(agsy::report_to_csv(report->rep)); });
}

void agsy_report_free(agsy_report* report) { delete report; }

const char* agsy_status_name(agsy_status status) {
  switch (status) {
    case AGSY_OK: return "ok";
    case AGSY_E_INVALID: return "invalid argument";
    case AGSY_E_IO: return "i/o error";
    case AGSY_E_FORMAT: return "format error";
    case AGSY_E_CAPACITY: return "capacity error";
    case AGSY_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* agsy_last_error_message(void) { return g_last_error.c_str(); }

const char* agsy_version(void) { return "1.0.0"; }

}  // extern "C"
