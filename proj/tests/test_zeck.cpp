#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "farey/numeric.hpp"
#include "farey/zeckendorf.hpp"

#include <string>
#include <vector>

using namespace farey;

namespace {

Zeck z(std::vector<int> exps) { return Zeck{std::move(exps)}; }
Bin b(std::vector<int> exps) { return Bin{std::move(exps)}; }

}  // namespace

TEST_CASE("fibonacci sequence and the shifted powers") {
  const long long want[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144};
  for (std::size_t n = 0; n < std::size(want); ++n) CHECK(fib(n) == want[n]);
  for (std::size_t n = 2; n <= 300; ++n) CHECK(fib(n) == fib(n - 1) + fib(n - 2));
  for (std::size_t n = 0; n <= 299; ++n) CHECK(phi_power(n) == fib(n + 1));
  CHECK(phi_power(1) == 1);
  CHECK(phi_power(2) == 2);
  CHECK(phi_power(3) == 3);
  CHECK(phi_power(4) == 5);
}

TEST_CASE("greedy encoding anchors and canonical round trips") {
  CHECK(zeck_encode(1) == z({1}));
  CHECK(zeck_encode(4) == z({3, 1}));
  CHECK(zeck_encode(10) == z({5, 2}));
  CHECK(bin_encode(5) == b({2, 0}));
  CHECK(bin_encode(10) == b({3, 1}));

  CHECK_THROWS_AS(zeck_encode(0), std::invalid_argument);
  CHECK_THROWS_AS(bin_encode(-3), std::invalid_argument);

  for (Int n = 1; n <= 100000; ++n) {
    Zeck zn = zeck_encode(n);
    if (!is_canonical(zn) || zeck_decode(zn) != n) {
      REQUIRE(is_canonical(zn));
      REQUIRE(zeck_decode(zn) == n);
    }
    Bin bn = bin_encode(n);
    if (!is_canonical(bn) || bin_decode(bn) != n) {
      REQUIRE(is_canonical(bn));
      REQUIRE(bin_decode(bn) == n);
    }
  }
}

TEST_CASE("canonical form predicate") {
  CHECK(is_canonical(z({})));
  CHECK(is_canonical(z({1})));
  CHECK(is_canonical(z({5, 2})));
  CHECK_FALSE(is_canonical(z({5, 4})));  // adjacent
  CHECK_FALSE(is_canonical(z({3, 3})));
  CHECK_FALSE(is_canonical(z({2, 0})));  // exponent below 1
  CHECK_FALSE(is_canonical(z({2, 5})));  // not decreasing
  CHECK(is_canonical(b({2, 0})));
  CHECK_FALSE(is_canonical(b({2, 2})));
  CHECK_FALSE(is_canonical(b({-1})));
}

TEST_CASE("carry-rule addition anchors") {
  CHECK(zeck_add(z({3}), z({2})) == z({4}));     // 3 + 2 = 5
  CHECK(zeck_add(z({2}), z({2})) == z({3, 1}));  // 2 + 2 = 3 + 1
  CHECK(zeck_add(z({1}), z({1})) == z({2}));     // 1 + 1 = 2
  CHECK(zeck_add(z({3}), z({3})) == z({4, 1}));  // the n >= 3 doubling rule
  CHECK(zeck_add(z({5, 2}), z({5, 2})) == zeck_encode(20));
  CHECK(zeck_add(z({}), z({4})) == z({4}));

  CHECK(bin_add(b({1}), b({1})) == b({2}));  // 2 + 2 = 4
  CHECK(bin_mul(b({2, 0}), b({1})) == b({3, 1}));
  CHECK(bin_mul(b({}), b({3})) == b({}));
}

TEST_CASE("multiplication anchors") {
  for (int k = 1; k <= 12; ++k) CHECK(zeck_mul(z({1}), z({k})) == z({k}));  // unit
  CHECK(zeck_mul(z({2}), z({4})) == z({5, 2}));  // 2 * 5 = 10
  CHECK(zeck_mul(z({3}), z({3})) == z({5, 1}));  // 9 = 8 + 1
}

TEST_CASE("arithmetic agrees with the integer oracle, exhaustively to 2000") {
  std::vector<Zeck> zs(4001);
  std::vector<Bin> bs(4001);
  for (int n = 1; n <= 4000; ++n) {
    zs[n] = zeck_encode(n);
    bs[n] = bin_encode(n);
  }
  int bad = 0;
  for (int a = 1; a <= 2000; ++a) {
    for (int c = a; c <= 2000; ++c) {
      Zeck sum = zeck_add(zs[a], zs[c]);
      if (!(sum == zs[a + c]) || !is_canonical(sum)) ++bad;
      Bin bsum = bin_add(bs[a], bs[c]);
      if (!(bsum == bs[a + c])) ++bad;
    }
  }
  CHECK(bad == 0);

  // Products sampled on a coarser grid; the decode-multiply-encode route
  // makes failures here structural rather than arithmetic.
  for (int a = 1; a <= 2000; a += 7) {
    for (int c = a; c <= 2000; c += 13) {
      Int p = Int(a) * c;
      if (!(zeck_mul(zs[a], zs[c]) == zeck_encode(p))) ++bad;
      if (!(bin_mul(bs[a], bs[c]) == bin_encode(p))) ++bad;
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("arithmetic agrees with the integer oracle on random 64-bit pairs") {
  Rng rng(2026);
  int bad = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    Int a = Int(rng.next() | 1);
    Int c = Int(rng.next() | 1);
    Zeck za = zeck_encode(a), zc = zeck_encode(c);
    Bin ba = bin_encode(a), bc = bin_encode(c);
    Zeck sum = zeck_add(za, zc);
    if (!(sum == zeck_encode(a + c)) || !is_canonical(sum)) ++bad;
    if (!(bin_add(ba, bc) == bin_encode(a + c))) ++bad;
    if (trial % 10 == 0) {
      if (!(zeck_mul(za, zc) == zeck_encode(a * c))) ++bad;
      if (!(bin_mul(ba, bc) == bin_encode(a * c))) ++bad;
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("renderings") {
  CHECK(zeck_render(zeck_encode(10)) == "φ^5+φ^2");
  CHECK(zeck_render(z({1})) == "φ^1");
  CHECK(zeck_render(z({})) == "0");
  CHECK(zeck_render_bits(zeck_encode(10)) == "10010");
  CHECK(zeck_render_bits(z({1})) == "1");
  CHECK(zeck_render_bits(z({})) == "0");
  CHECK(bin_render_bits(bin_encode(10)) == "1010");
  CHECK(bin_render_bits(b({0})) == "1");
  CHECK(bin_render_bits(b({})) == "0");

  for (Int n = 1; n <= 500; ++n) {
    std::string bits = zeck_render_bits(zeck_encode(n));
    CHECK(bits.find("11") == std::string::npos);  // non-adjacency, visibly
    CHECK(bits.front() == '1');
  }
}

TEST_CASE("product-pattern report stays honest about its conventions") {
  StarPatternReport r24 = star_pattern_report(2, 4);
  CHECK(r24.product == 10);
  CHECK(r24.oracle == z({5, 2}));
  CHECK(r24.conventions.size() == 4);

  StarPatternReport r11 = star_pattern_report(1, 1);
  CHECK(r11.product == 1);
  CHECK(r11.oracle == z({1}));

  StarPatternReport r33 = star_pattern_report(3, 3);
  CHECK(r33.product == 9);
  CHECK(r33.oracle == z({5, 1}));

  CHECK_THROWS_AS(star_pattern_report(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(star_pattern_report(3, 2), std::invalid_argument);

  // Sweep the grid without asserting any convention: the display is a
  // reported observation, not a dependency.  Count agreements per label.
  std::vector<int> hits(4, 0);
  int cells = 0;
  for (int n = 1; n <= 20; ++n) {
    for (int m = n; m <= 20; ++m) {
      StarPatternReport rep = star_pattern_report(n, m);
      REQUIRE(zeck_decode(rep.oracle) == rep.product);
      REQUIRE(rep.conventions.size() == 4);
      for (std::size_t i = 0; i < 4; ++i) {
        if (rep.conventions[i].matches) ++hits[i];
      }
      ++cells;
    }
  }
  for (std::size_t i = 0; i < 4; ++i) {
    MESSAGE("convention \"", star_pattern_report(1, 1).conventions[i].label,
            "\" matches ", hits[i], " of ", cells, " grid cells");
  }
}
