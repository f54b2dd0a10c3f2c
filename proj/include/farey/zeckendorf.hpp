// Fibonacci sequence, Zeckendorf and binary expansions, carry-rule
// arithmetic, and the product-pattern report.
#pragma once

#include "farey/numeric.hpp"

#include <string>
#include <vector>

namespace farey {

// a(1) = a(2) = 1, a(n) = a(n-1) + a(n-2); a(0) = 0.  Memoized, thread-safe.
const Int& fib(std::size_t n);

// phi^n := a(n+1), the shifted indexing used by the expansions below, so
// phi^1 = 1, phi^2 = 2, phi^3 = 3, phi^4 = 5, ...
const Int& phi_power(std::size_t n);

// Sum of non-adjacent Fibonacci numbers: strictly decreasing exponents with
// n[j] > n[j+1] + 1, every exponent >= 1.
struct Zeck {
  std::vector<int> exponents;

  bool operator==(const Zeck& other) const { return exponents == other.exponents; }
};

// Sum of distinct powers of two: strictly decreasing exponents >= 0.
struct Bin {
  std::vector<int> exponents;

  bool operator==(const Bin& other) const { return exponents == other.exponents; }
};

bool is_canonical(const Zeck& z);
bool is_canonical(const Bin& b);

// Greedy largest-term-first; the result is canonical.  N >= 1.
Zeck zeck_encode(const Int& n);
Int zeck_decode(const Zeck& z);

Bin bin_encode(const Int& n);
Int bin_decode(const Bin& b);

// Carry-rule addition: phi^n + phi^(n+1) = phi^(n+2) and, for n >= 3,
// phi^n + phi^n = phi^(n+1) + phi^(n-2); the low cases 1+1=2 and 2+2=3+1
// are the same rules with the underflowing exponent renormalized.
Zeck zeck_add(const Zeck& a, const Zeck& b);

// Product via decode, integer multiply, encode.
Zeck zeck_mul(const Zeck& a, const Zeck& b);

Bin bin_add(const Bin& a, const Bin& b);

// Distributes 2^n * 2^m = 2^(n+m) over exponent pairs, then normalizes.
Bin bin_mul(const Bin& a, const Bin& b);

// "phi^5+phi^2" with a literal Greek phi.
std::string zeck_render(const Zeck& z);

// Most-significant-first bit string over exponents max..1 ("10010" for
// phi^5+phi^2); "0" for the empty expansion.
std::string zeck_render_bits(const Zeck& z);

// Most-significant-first bit string over exponents max..0.
std::string bin_render_bits(const Bin& b);

// One evaluated reading of the product pattern for phi^n * phi^m.
struct StarConvention {
  std::string label;
  std::vector<int> series;  // descending-run exponents actually used
  std::vector<int> tail;    // the case tail appended (exponents)
  Int value = 0;
  bool matches = false;
};

// Evaluates the displayed right-hand side of the product pattern under each
// plausible convention (exponent base phi^n = a(n+1) vs a(n); tail extending
// vs replacing the last run term) and compares against the true product.
// Nothing here is asserted; callers read `matches`.
struct StarPatternReport {
  int n = 0;
  int m = 0;
  Int product = 0;
  Zeck oracle;
  std::vector<StarConvention> conventions;
};

StarPatternReport star_pattern_report(int n, int m);

}  // namespace farey
