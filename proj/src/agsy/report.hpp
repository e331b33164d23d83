#pragma once

#include <string>
#include <vector>

#include "agsy/pipeline.hpp"

namespace agsy {

// C-style escaping for symbol expansions, which are raw bytes: \n, \r, \t,
// \\, \", \xNN for everything else non-printable.
std::string escape_bytes(std::string_view bytes);

// Schema-stable JSON (schema_version 1).  Floating-point values are
// rounded to 4 decimal places.
std::string report_to_json(const RunReport& report);

// Fixed columns:
// step,symbol_expansion_escaped,freq,gain_bits,header_cost_bits,bpc_message,bpc_total
std::string report_to_csv(const RunReport& report);

}  // namespace agsy
