// Exact integer/rational scalar types and small numeric helpers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace farey {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

// Floor toward -inf; denominators are kept positive by cpp_rational.
Int floor_rat(const Rat& q);

// max(0, floor(q)).
Int floor_rat_clamped(const Rat& q);

// Parses "p", "-p" or "p/q" with q > 0 after sign normalization.
Rat parse_rat(const std::string& text);

// Inverse rendering: "p" for integers, "p/q" otherwise.
std::string rat_string(const Rat& q);

// Truncated positional rendering with `digits` fractional digits, no padding
// of trailing zeros removed (fixed width keeps CSV output stable).
std::string decimal_string(const Rat& q, int digits);

// Balanced pairwise summation; keeps intermediate gcd reductions cheap when
// many denominators repeat.
Rat exact_sum(std::vector<Rat> terms);

// Deterministic RNG used by the randomized suites. Raw engine output is
// standardized; modulo rejection keeps the value stream portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n);

  // Uniform in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi);

  bool coin() { return (next() & 1u) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace farey
