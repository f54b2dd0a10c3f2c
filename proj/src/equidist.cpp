#include "farey/equidist.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "farey/norm.hpp"
#include "farey/word.hpp"

namespace farey {

namespace {

Rat rat_pow(Rat base, int p) {
  Rat out = 1;
  for (int i = 0; i < p; ++i) out *= base;
  return out;
}

Int int128_to_int(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  Int out = static_cast<unsigned long long>(u >> 64);
  out <<= 64;
  out += static_cast<unsigned long long>(u);
  return neg ? Int(-out) : out;
}

void require_exponent(int p) {
  if (p < 1) throw std::invalid_argument("the exponent p must be a positive integer");
}

// Shared ramp-vs-height accumulation over inner points 1..m-1. The ramp runs
// from h0 to h0 + len over m steps.
template <typename HeightAt>
Rat ramp_discrepancy(std::size_t m, const Rat& h0, const Rat& len, int p,
                     HeightAt height_at) {
  Rat acc = 0;
  const Rat step = len / static_cast<std::uint64_t>(m);
  Rat ramp = h0;
  for (std::size_t j = 1; j < m; ++j) {
    ramp += step;
    acc += rat_pow(abs(ramp - height_at(j)), p);
  }
  return acc;
}

}  // namespace

Rat potential(const Vertex& a, const Vertex& b) {
  if (det(a, b) != 1) {
    throw std::invalid_argument("not a Farey edge: " + a.str() + "," + b.str());
  }
  return Rat(1, (a.x() + a.y()) * (b.x() + b.y()));
}

bool exactness_check(const Vertex& v) {
  if (!v.is_interior()) throw std::invalid_argument("exactness needs an interior vertex");
  auto [lo, up] = bounds(v);
  return potential(lo, up) == potential(lo, v) + potential(v, up);
}

Rat height(const Vertex& v) { return Rat(v.y(), v.x() + v.y()); }

PartialPath::PartialPath(std::vector<Vertex> points) : points_(std::move(points)) {
  if (points_.size() < 2) {
    throw std::invalid_argument("an interval needs at least one edge");
  }
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (det(points_[i - 1], points_[i]) != 1) {
      throw std::invalid_argument("broken edge: " + points_[i - 1].str() + "," +
                                  points_[i].str());
    }
  }
}

PartialPath PartialPath::of_path(const FareyPath& c) {
  std::vector<Vertex> pts;
  pts.reserve(c.degree() + 1);
  pts.push_back(Vertex::zero());
  pts.insert(pts.end(), c.interior().begin(), c.interior().end());
  pts.push_back(Vertex::infinity());
  return PartialPath(std::move(pts));
}

Rat PartialPath::real_length() const {
  return height(points_.back()) - height(points_.front());
}

PartialPath refine(const PartialPath& c) {
  std::vector<Vertex> pts;
  pts.reserve(2 * c.degree() + 1);
  pts.push_back(c.at(0));
  for (std::size_t i = 1; i <= c.degree(); ++i) {
    pts.push_back(mediant(c.at(i - 1), c.at(i)));
    pts.push_back(c.at(i));
  }
  return PartialPath(std::move(pts));
}

PartialPath concat(const std::vector<PartialPath>& parts) {
  if (parts.empty()) throw std::invalid_argument("nothing to concatenate");
  std::vector<Vertex> pts = parts.front().points();
  for (std::size_t j = 1; j < parts.size(); ++j) {
    if (!(parts[j].at(0) == pts.back())) {
      throw std::invalid_argument("interval endpoints do not chain");
    }
    pts.insert(pts.end(), parts[j].points().begin() + 1, parts[j].points().end());
  }
  return PartialPath(std::move(pts));
}

Rat delta_p(const FareyPath& c, int p) {
  require_exponent(p);
  const auto& in = c.interior();
  return ramp_discrepancy(c.degree(), Rat(0), Rat(1), p,
                          [&](std::size_t j) { return height(in[j - 1]); });
}

Rat delta_p_interval(const PartialPath& c, int p) {
  require_exponent(p);
  const Rat h0 = height(c.at(0));
  return ramp_discrepancy(c.degree(), h0, c.real_length(), p,
                          [&](std::size_t j) { return height(c.at(j)); });
}

bool refine_bound_check(const PartialPath& c) {
  const Rat lhs = delta_p_interval(refine(c), 1);
  return lhs <= 2 * delta_p_interval(c, 1) + c.real_length() / 2;
}

bool concat_bound_check(const std::vector<PartialPath>& parts) {
  const PartialPath whole = concat(parts);
  Rat sum = 0;
  for (const PartialPath& part : parts) sum += delta_p_interval(part, 1);
  const Rat lhs = abs(delta_p_interval(whole, 1) - sum);

  Rat rhs = 0;
  for (std::size_t j1 = 0; j1 < parts.size(); ++j1) {
    for (std::size_t j2 = j1 + 1; j2 < parts.size(); ++j2) {
      rhs += abs(parts[j1].real_length() * static_cast<std::uint64_t>(parts[j2].degree()) -
                 parts[j2].real_length() * static_cast<std::uint64_t>(parts[j1].degree()));
    }
  }
  return lhs <= rhs / 2;
}

Rat s_n(std::size_t n) {
  if (n < 1) throw std::invalid_argument("the statistic starts at n = 1");
  if (n > 22) throw std::length_error("2^n - 1 vertices exceed the materialization limit");
  return delta_p(zero_dna_corona(n).path(), 2);
}

std::vector<long long> totient_prefix_sums(long long r_max) {
  if (r_max < 1) throw std::invalid_argument("need a positive range");
  std::vector<long long> phi(static_cast<std::size_t>(r_max) + 1);
  std::iota(phi.begin(), phi.end(), 0LL);
  for (long long i = 2; i <= r_max; ++i) {
    if (phi[i] != i) continue;  // i composite: some prime already reduced it
    for (long long j = i; j <= r_max; j += i) phi[j] -= phi[j] / i;
  }
  std::vector<long long> sums(static_cast<std::size_t>(r_max) + 1, 0);
  for (long long i = 1; i <= r_max; ++i) sums[i] = sums[i - 1] + phi[i];
  return sums;
}

long long strata_interior_count(long long r) {
  long long count = 0;
  for (long long s = 2; s <= r; ++s) {
    for (long long x = 1; x < s; ++x) {
      if (std::gcd(x, s - x) == 1) ++count;
    }
  }
  return count;
}

bool totient_identity_check(long long r_max) {
  const std::vector<long long> sums = totient_prefix_sums(r_max);
  long long interior = 0;
  for (long long r = 1; r <= r_max; ++r) {
    for (long long x = 1; x < r; ++x) {
      if (std::gcd(x, r - x) == 1) ++interior;  // stratum x + y = r
    }
    if (sums[r] != 1 + interior) return false;
  }
  return true;
}

bool local_spacing_check(long long r) {
  if (r < 2) throw std::invalid_argument("spacing needs r >= 2");
  // Threshold r + 1 puts (r,1) and (1,r) directly next to the endpoints.
  const FareyPath c = build_c_leq_path(NormSpec::linear(1, 1), Rat(r + 1));
  const std::size_t m = c.degree();
  if (m < 3) return false;
  const Rat gap1(1, r + 1), gap2(1, r * (r + 1));
  return c.at(1) == Vertex(r, 1) && c.at(2) == Vertex(r - 1, 1) &&
         c.at(m - 1) == Vertex(1, r) && c.at(m - 2) == Vertex(1, r - 1) &&
         height(c.at(1)) - height(c.at(0)) == gap1 &&
         height(c.at(2)) - height(c.at(1)) == gap2 &&
         height(c.at(m)) - height(c.at(m - 1)) == gap1 &&
         height(c.at(m - 1)) - height(c.at(m - 2)) == gap2;
}

TrendRow trend_row(long long r) {
  if (r < 2 || r > 20000) throw std::invalid_argument("trend range is 2..20000");
  const long long m = totient_prefix_sums(r).back();  // degree of the path

  // Walk the path in real order: three consecutive vertices a < b < c obey
  // c = k*b - a with k maximal subject to the weight bound. Everything fits
  // in 64 bits for r <= 20000 except the squared sums.
  std::vector<long long> abs_err(static_cast<std::size_t>(r) + 1, 0);
  std::vector<__int128> sq_err(static_cast<std::size_t>(r) + 1, 0);
  long long xp = 1, yp = 0, x = r - 1, y = 1;
  long long j = 0;
  while (!(x == 0 && y == 1)) {
    ++j;
    const long long s = x + y;
    const long long e = j * s - m * y;  // sign of j/m - H(v), scaled by m*s
    abs_err[s] += std::llabs(e);
    sq_err[s] += static_cast<__int128>(e) * e;
    const long long k = (r + xp + yp) / s;
    const long long xn = k * x - xp, yn = k * y - yp;
    xp = x; yp = y; x = xn; y = yn;
  }
  if (j != m - 1) throw std::logic_error("path walk lost vertices");

  TrendRow row;
  row.r = r;
  for (long long s = 2; s <= r; ++s) {
    if (abs_err[s] != 0) row.delta1 += Rat(abs_err[s], s);
    if (sq_err[s] != 0) row.delta2 += Rat(int128_to_int(sq_err[s]), Int(s) * s);
  }
  row.delta1 /= m;
  row.delta2 /= Int(m) * m;
  return row;
}

std::vector<TrendRow> trend_rows(long long r_from, long long r_to, long long step) {
  if (step < 1 || r_from > r_to) throw std::invalid_argument("bad trend range");
  std::vector<TrendRow> rows;
  for (long long r = r_from; r <= r_to; r += step) rows.push_back(trend_row(r));
  return rows;
}

}  // namespace farey
