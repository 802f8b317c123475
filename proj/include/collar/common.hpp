#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace collar {

using BigInt = boost::multiprecision::cpp_int;

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid or inconsistent input data.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

/// A configured size cap was exceeded (e.g. group closure enumeration).
class SizeLimitError : public Error {
 public:
  explicit SizeLimitError(const std::string& what) : Error(what) {}
};

/// An operation's mathematical precondition does not hold.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// Deterministic RNG used by every randomized suite. std::mt19937_64 with
/// modulo draws, so sequences are identical across platforms, unlike the
/// standard distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : state_(seed ^ 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() {
    // xorshift* — tiny, fast, reproducible
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545F4914F6CDD1DULL;
  }

  /// Uniform draw from [0, n).
  std::uint64_t below(std::uint64_t n) { return n <= 1 ? 0 : next() % n; }

  /// Uniform draw from [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool flip() { return (next() & 1) != 0; }

 private:
  std::uint64_t state_;
};

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace collar
