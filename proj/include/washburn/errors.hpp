#pragma once

#include <stdexcept>
#include <string>

namespace washburn {

enum class Errc {
  domain = 1,          // a precondition on an input value failed
  consistency = 2,     // two routes to the same quantity disagree
  singularity = 3,     // H-form evaluated at H ~ 0
  step_underflow = 4,  // adaptive step collapsed
  horizon = 5,         // requested horizon above the cap
  non_convergence = 6, // fixed-point iteration ran out of iterations
  inconclusive = 7,    // approach classification cannot decide
  io = 8,
};

/// Single exception type for the library; `code()` drives the C API status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void throw_domain(const std::string& field, const std::string& why) {
  throw Error(Errc::domain, field + ": " + why);
}

}  // namespace washburn
