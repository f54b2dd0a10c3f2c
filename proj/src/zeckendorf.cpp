#include "farey/zeckendorf.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>

namespace farey {

namespace {

// Deque: growth must not invalidate references already handed out.
std::deque<Int>& fib_table() {
  static std::deque<Int> table{0, 1, 1};
  return table;
}

std::mutex& fib_mutex() {
  static std::mutex m;
  return m;
}

using Counts = std::map<int, long long>;

Int counts_value_zeck(const Counts& counts) {
  Int total = 0;
  for (const auto& [e, k] : counts) {
    if (k != 0) total += k * phi_power(static_cast<std::size_t>(std::max(e, 1)));
  }
  return total;
}

void bump(Counts& counts, int e, long long by) {
  long long& slot = counts[e];
  slot += by;
  if (slot == 0) counts.erase(e);
}

// Iterated carry rules; terminates because every step either removes a term
// or shifts weight toward smaller exponents.
std::vector<int> normalize_zeck(Counts counts) {
#ifndef NDEBUG
  const Int frozen = counts_value_zeck(counts);
#endif
  for (;;) {
    bool changed = false;
    auto zero = counts.find(0);
    if (zero != counts.end()) {  // phi^0 = phi^1 = 1
      long long k = zero->second;
      counts.erase(zero);
      bump(counts, 1, k);
      changed = true;
    }
    if (!changed) {
      for (const auto& entry : counts) {
        if (entry.second < 2) continue;
        const int e = entry.first;  // copy before bump() erases the node
        if (e == 1) {               // 1 + 1 = 2
          bump(counts, 1, -2);
          bump(counts, 2, 1);
        } else {  // phi^e + phi^e = phi^(e+1) + phi^(e-2)
          bump(counts, e, -2);
          bump(counts, e + 1, 1);
          bump(counts, e - 2, 1);
        }
        changed = true;
        break;
      }
    }
    if (!changed) {
      for (auto it = counts.begin(); it != counts.end(); ++it) {
        auto up = std::next(it);
        if (up == counts.end() || up->first != it->first + 1) continue;
        // phi^e + phi^(e+1) = phi^(e+2)
        int e = it->first;
        bump(counts, e, -1);
        bump(counts, e + 1, -1);
        bump(counts, e + 2, 1);
        changed = true;
        break;
      }
    }
    if (!changed) break;
    assert(counts_value_zeck(counts) == frozen);
  }
  std::vector<int> exps;
  exps.reserve(counts.size());
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    assert(it->second == 1);
    exps.push_back(it->first);
  }
  return exps;
}

std::vector<int> normalize_bin(Counts counts) {
  for (;;) {
    bool changed = false;
    for (const auto& entry : counts) {
      if (entry.second < 2) continue;  // 2^e + 2^e = 2^(e+1)
      const int e = entry.first;
      const long long pairs = entry.second / 2;
      bump(counts, e, -2 * pairs);
      bump(counts, e + 1, pairs);
      changed = true;
      break;
    }
    if (!changed) break;
  }
  std::vector<int> exps;
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) exps.push_back(it->first);
  return exps;
}

}  // namespace

const Int& fib(std::size_t n) {
  std::lock_guard<std::mutex> lock(fib_mutex());
  std::deque<Int>& table = fib_table();
  while (table.size() <= n) {
    table.push_back(table[table.size() - 1] + table[table.size() - 2]);
  }
  return table[n];
}

const Int& phi_power(std::size_t n) { return fib(n + 1); }

bool is_canonical(const Zeck& z) {
  for (std::size_t i = 0; i < z.exponents.size(); ++i) {
    if (z.exponents[i] < 1) return false;
    if (i + 1 < z.exponents.size() && z.exponents[i] <= z.exponents[i + 1] + 1) return false;
  }
  return true;
}

bool is_canonical(const Bin& b) {
  for (std::size_t i = 0; i < b.exponents.size(); ++i) {
    if (b.exponents[i] < 0) return false;
    if (i + 1 < b.exponents.size() && b.exponents[i] <= b.exponents[i + 1]) return false;
  }
  return true;
}

Zeck zeck_encode(const Int& n) {
  if (n < 1) throw std::invalid_argument("expansion needs a positive integer");
  Zeck out;
  Int rest = n;
  int k = 1;
  while (phi_power(static_cast<std::size_t>(k + 1)) <= rest) ++k;
  while (rest > 0) {
    while (phi_power(static_cast<std::size_t>(k)) > rest) --k;
    out.exponents.push_back(k);
    rest -= phi_power(static_cast<std::size_t>(k));
  }
  assert(is_canonical(out));
  return out;
}

Int zeck_decode(const Zeck& z) {
  Int total = 0;
  for (int e : z.exponents) {
    if (e < 1) throw std::invalid_argument("exponent below 1 in expansion");
    total += phi_power(static_cast<std::size_t>(e));
  }
  return total;
}

Bin bin_encode(const Int& n) {
  if (n < 1) throw std::invalid_argument("expansion needs a positive integer");
  Bin out;
  for (int e = static_cast<int>(boost::multiprecision::msb(n)); e >= 0; --e) {
    if (boost::multiprecision::bit_test(n, static_cast<unsigned>(e))) out.exponents.push_back(e);
  }
  return out;
}

Int bin_decode(const Bin& b) {
  Int total = 0;
  for (int e : b.exponents) {
    if (e < 0) throw std::invalid_argument("negative exponent in expansion");
    total += Int(1) << e;
  }
  return total;
}

Zeck zeck_add(const Zeck& a, const Zeck& b) {
  Counts counts;
  for (int e : a.exponents) bump(counts, e, 1);
  for (int e : b.exponents) bump(counts, e, 1);
  return Zeck{normalize_zeck(std::move(counts))};
}

Zeck zeck_mul(const Zeck& a, const Zeck& b) {
  return zeck_encode(zeck_decode(a) * zeck_decode(b));
}

Bin bin_add(const Bin& a, const Bin& b) {
  Counts counts;
  for (int e : a.exponents) bump(counts, e, 1);
  for (int e : b.exponents) bump(counts, e, 1);
  return Bin{normalize_bin(std::move(counts))};
}

Bin bin_mul(const Bin& a, const Bin& b) {
  Counts counts;
  for (int ea : a.exponents) {
    for (int eb : b.exponents) bump(counts, ea + eb, 1);
  }
  return Bin{normalize_bin(std::move(counts))};
}

std::string zeck_render(const Zeck& z) {
  if (z.exponents.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < z.exponents.size(); ++i) {
    if (i) out += '+';
    out += "φ^" + std::to_string(z.exponents[i]);
  }
  return out;
}

std::string zeck_render_bits(const Zeck& z) {
  if (z.exponents.empty()) return "0";
  std::string out(static_cast<std::size_t>(z.exponents.front()), '0');
  for (int e : z.exponents) out[out.size() - static_cast<std::size_t>(e)] = '1';
  return out;
}

std::string bin_render_bits(const Bin& b) {
  if (b.exponents.empty()) return "0";
  std::string out(static_cast<std::size_t>(b.exponents.front()) + 1, '0');
  for (int e : b.exponents) out[out.size() - 1 - static_cast<std::size_t>(e)] = '1';
  return out;
}

StarPatternReport star_pattern_report(int n, int m) {
  if (n < 1 || m < n) throw std::invalid_argument("pattern requires 1 <= n <= m");
  StarPatternReport rep;
  rep.n = n;
  rep.m = m;
  rep.product = phi_power(static_cast<std::size_t>(n)) * phi_power(static_cast<std::size_t>(m));
  rep.oracle = zeck_encode(rep.product);

  std::vector<int> tail;
  if (n % 2 == 0) {
    tail = {m - n + 4, m - n};
  } else if (n < m) {
    tail = {m - n + 2, m - n - 1};
  } else {
    tail = {2, 0};
  }

  // The descending run phi^(n+m), phi^(n+m-4), ... stops above the tail.
  std::vector<int> run;
  for (int e = n + m; e > tail.front(); e -= 4) run.push_back(e);

  struct Indexing {
    const char* name;
    int shift;  // phi^k evaluated as a(k + shift)
  };
  const Indexing indexings[2] = {{"phi^k=a(k+1)", 1}, {"phi^k=a(k)", 0}};

  for (const Indexing& ix : indexings) {
    auto term = [&](int e) -> Int {
      int idx = e + ix.shift;
      return idx >= 0 ? fib(static_cast<std::size_t>(idx)) : Int(0);
    };
    Int lhs = term(n) * term(m);
    for (int replace = 0; replace <= 1; ++replace) {
      StarConvention conv;
      conv.label = std::string(ix.name) + (replace ? ", tail replaces last run term"
                                                   : ", tail extends run");
      conv.series = run;
      if (replace && !conv.series.empty()) conv.series.pop_back();
      conv.tail = tail;
      Int value = 0;
      for (int e : conv.series) value += term(e);
      for (int e : conv.tail) value += term(e);
      conv.value = value;
      conv.matches = (value == lhs);
      rep.conventions.push_back(std::move(conv));
    }
  }
  return rep;
}

}  // namespace farey
