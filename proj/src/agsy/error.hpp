#pragma once

#include <stdexcept>
#include <string>

namespace agsy {

// Error categories; the C API and the CLI map these to status/exit codes.
enum class Errc {
  invalid_argument = 1,  // bad inputs, violated preconditions
  io = 2,                // file system failures (CLI level)
  format = 3,            // malformed or corrupt container/header/payload
  capacity = 4,          // a fixed-width field cannot hold the value
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace agsy
