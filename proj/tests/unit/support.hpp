#pragma once

#include <cmath>

#include "doctest.h"
#include "washburn/errors.hpp"

namespace test {

inline double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Error code of the washburn::Error thrown by f.
template <class F>
washburn::Errc code_of(F&& f) {
  try {
    f();
  } catch (const washburn::Error& e) {
    return e.code();
  }
  FAIL("expected washburn::Error");
  return washburn::Errc::io;
}

}  // namespace test
