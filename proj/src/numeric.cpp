#include "farey/numeric.hpp"

#include <stdexcept>

namespace farey {

Int floor_rat(const Rat& q) {
  Int quot = numerator(q) / denominator(q);
  if (numerator(q) < 0 && quot * denominator(q) != numerator(q)) --quot;
  return quot;
}

Int floor_rat_clamped(const Rat& q) {
  Int f = floor_rat(q);
  if (f < 0) f = 0;
  return f;
}

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

std::string rat_string(const Rat& q) {
  Int den = denominator(q);
  if (den == 1) return numerator(q).str();
  return numerator(q).str() + "/" + den.str();
}

std::string decimal_string(const Rat& q, int digits) {
  Int num = numerator(q);
  Int den = denominator(q);
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  Int whole = num / den;
  Int rem = num % den;
  std::string out = sign + whole.str();
  if (digits <= 0) return out;
  out += '.';
  for (int i = 0; i < digits; ++i) {
    rem *= 10;
    Int d = rem / den;
    rem %= den;
    out += static_cast<char>('0' + d.convert_to<int>());
  }
  return out;
}

Rat exact_sum(std::vector<Rat> terms) {
  if (terms.empty()) return Rat(0);
  while (terms.size() > 1) {
    std::size_t half = (terms.size() + 1) / 2;
    for (std::size_t i = 0; i + half < terms.size(); ++i) terms[i] += terms[i + half];
    terms.resize(half);
  }
  return terms[0];
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return v % n;
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("Rng::range: lo > hi");
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

}  // namespace farey
