#pragma once

#include <stdexcept>
#include <string>

namespace arbordom {

// Stable error categories. The numeric values double as CLI exit codes and
// C-API status codes, so they must not be reordered.
enum class Errc : int {
  ok = 0,
  invalid_argument = 1,
  parse = 2,
  promise_violation = 3,
  round_cap = 4,
  bandwidth = 5,
  oracle_budget = 6,
  infeasible = 7,
  io = 8,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace arbordom
