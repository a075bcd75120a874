#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqc {

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a bounded search gives up without a wrong answer.
struct InconclusiveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// splitmix64; deterministic across platforms, good enough for test data
// and Cantor-Zassenhaus splitting.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed = 0x9e3779b97f4a7c15ull) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  uint64_t below(uint64_t n) { return n ? next() % n : 0; }
};

template <class Seq>
std::string join(const Seq& parts, const std::string& sep) {
  std::ostringstream os;
  bool first = true;
  for (const auto& p : parts) {
    if (!first) os << sep;
    os << p;
    first = false;
  }
  return os.str();
}

inline int checked_int(long long v, const char* what) {
  if (v < -2147483647LL || v > 2147483647LL)
    throw InputError(std::string("value out of int range: ") + what);
  return static_cast<int>(v);
}

}  // namespace eqc
