// shared scaffolding for the acceptance checks
#pragma once

#include <chrono>
#include <cstdlib>
#include <iostream>

// Always-on requirement: never compiled out in Release.
#define REQUIRE(cond, msg)                                                      \
  do {                                                                          \
    if (!(cond)) {                                                              \
      std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << msg      \
                << "\n";                                                        \
      std::exit(1);                                                             \
    }                                                                           \
  } while (0)

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}
