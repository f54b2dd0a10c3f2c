// Potential and height on the Farey graph, discrepancy statistics of paths,
// and the finite totient identity. Everything is exact rational arithmetic;
// decimal output is rendering only.
#pragma once

#include "farey/corona.hpp"
#include "farey/path.hpp"
#include "farey/vertex.hpp"

#include <cstddef>
#include <vector>

namespace farey {

// Edge potential h(a,b) = 1/((x_a+y_a)(x_b+y_b)); requires det(a,b) = 1.
Rat potential(const Vertex& a, const Vertex& b);

// h is exact: splitting an edge at its mediant preserves the total potential.
bool exactness_check(const Vertex& v);

// Height H(x,y) = y/(x+y); H(0) = 0, H(inf) = 1, and dH = h across every
// Farey edge, so H is also the h-sum along any path from 0.
Rat height(const Vertex& v);

// A path in the Farey graph with arbitrary endpoints: consecutive
// determinants are 1, which already forces strictly increasing real order.
class PartialPath {
 public:
  explicit PartialPath(std::vector<Vertex> points);  // throws on a broken edge

  static PartialPath of_path(const FareyPath& c);

  std::size_t degree() const { return points_.size() - 1; }
  const Vertex& at(std::size_t i) const { return points_.at(i); }
  const std::vector<Vertex>& points() const { return points_; }
  // H(end) - H(start), the real length of the interval covered.
  Rat real_length() const;

  friend bool operator==(const PartialPath& a, const PartialPath& b) {
    return a.points_ == b.points_;
  }

 private:
  std::vector<Vertex> points_;
};

// The same path with all m mediants inserted; endpoints unchanged.
PartialPath refine(const PartialPath& c);

// Joins intervals whose endpoints chain; throws on a mismatch.
PartialPath concat(const std::vector<PartialPath>& parts);

// Discrepancy of a path against the uniform ramp: sum over the interior of
// |j/m - H(c_j)|^p, exactly. Integer p >= 1 keeps the result rational.
Rat delta_p(const FareyPath& c, int p);

// Interval version: the ramp interpolates between the endpoint heights.
// Agrees with delta_p when the endpoints are 0 and inf.
Rat delta_p_interval(const PartialPath& c, int p);

// delta_1(refine(c)) <= 2 delta_1(c) + real_length(c)/2.
bool refine_bound_check(const PartialPath& c);

// |delta_1(concat) - sum_j delta_1(c_j)| <=
//   (1/2) sum_{j1<j2} |h(c_j1) deg(c_j2) - h(c_j2) deg(c_j1)|.
bool concat_bound_check(const std::vector<PartialPath>& parts);

// delta_2 of the height-n corona with identically zero d.n.a. (degree 2^n).
Rat s_n(std::size_t n);

// Totient sums by linear sieve: sums[r] = phi(1) + ... + phi(r).
std::vector<long long> totient_prefix_sums(long long r_max);

// #interior(c_R) for the weight x + y, counted stratum by stratum with gcd
// tests, never through the sieve and never by materializing the path.
long long strata_interior_count(long long r);

// Totient sum vs 1 + interior count, for every R in [1, r_max].
bool totient_identity_check(long long r_max);

// Endpoint spacing of c_R for the weight x + y: the first gap of H is
// 1/(R+1), the second 1/(R(R+1)), and mirrored at the other end. Verified on
// the actually built path, R >= 2.
bool local_spacing_check(long long r);

// Exact discrepancy row for c_R with the weight x + y, computed by walking
// the path in real order with the neighbour recurrence (no materialization).
struct TrendRow {
  long long r = 0;
  Rat delta1;
  Rat delta2;
};
TrendRow trend_row(long long r);
std::vector<TrendRow> trend_rows(long long r_from, long long r_to, long long step);

}  // namespace farey
