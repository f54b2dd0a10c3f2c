// Paths from zero to infinity: finite tree-closed vertex sets whose
// real-sorted sequence c_0 = zero < c_1 < ... < c_m = infinity has unit
// determinants between neighbours. The interior is stored sorted; the degree
// is m = #interior + 1.
#pragma once

#include "farey/numeric.hpp"
#include "farey/vertex.hpp"
#include "farey/word.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace farey {

class FareyPath {
 public:
  FareyPath() = default;  // the empty path phi

  static FareyPath phi() { return FareyPath(); }

  // Validates: interior vertices only, no duplicates, tree-closure (every
  // mother present), unit determinants along the sorted sequence.
  static FareyPath from_interior(std::vector<Vertex> interior);

  // Trusted constructor for interiors already sorted and known valid.
  static FareyPath trusted(std::vector<Vertex> sorted_interior);

  std::size_t degree() const { return interior_.size() + 1; }
  const std::vector<Vertex>& interior() const { return interior_; }

  // Full sequence access, i = 0..degree(): endpoints at the ends.
  Vertex at(std::size_t i) const;

  std::string str() const;

  friend bool operator==(const FareyPath& a, const FareyPath& b) {
    return a.interior_ == b.interior_;
  }
  friend bool operator!=(const FareyPath& a, const FareyPath& b) { return !(a == b); }

 private:
  std::vector<Vertex> interior_;
};

// Canonical strict order on paths (lexicographic on the sorted interior).
struct PathLess {
  bool operator()(const FareyPath& a, const FareyPath& b) const;
};

// Fin indices towards both neighbours for every interior vertex, plus the
// full coefficient row f_0..f_m. c_i is a maximum iff both indices vanish, a
// member of the interior of Phi(c) iff both are positive.
struct FriezData {
  std::vector<Int> n_minus;  // size degree-1, entry i-1 belongs to c_i
  std::vector<Int> n_plus;
  std::vector<Int> f;  // size degree+1, f_i = 1 + n_minus + n_plus inside,
                       // f_0 = #{(n,1)}, f_m = #{(1,n)}
  // Every vertex with exactly one vanishing fin index is the componentwise
  // midpoint of its neighbours: the star condition, checked in the same pass.
  bool fin_midpoints = true;
};

FriezData friez(const FareyPath& c);

std::vector<Vertex> maxima(const FareyPath& c);
std::vector<Vertex> minima(const FareyPath& c);  // interior minima plus endpoints
FareyPath phi_path(const FareyPath& c);          // path on the interior minima
FareyPath phi_path(const FareyPath& c, const FriezData& fd);

// Bounds of an interior element recovered from its path neighbours alone.
std::pair<Vertex, Vertex> bounds_in_path(const FareyPath& c, std::size_t i);

// Every interior vertex is a maximum, a minimum, or the componentwise
// midpoint of its neighbours. The two-argument forms reuse a friez table
// already computed for the same path.
bool is_star(const FareyPath& c);
bool is_star(const FareyPath& c, const FriezData& fd);

// Straight-line path: interior {(1,1),...,(1,m+1)} for m >= 0, mirrored for
// m < 0. Degree |m| + 2.
FareyPath nu_path(const Int& m);

// Substitute block i for edge i (1-based, blocks.size() == degree): block
// interiors are transported by w -> w.x * c_{i-1} + w.y * c_i. Degrees add.
FareyPath operad_compose(const FareyPath& c, const std::vector<FareyPath>& blocks);

// Insert a fin run of |nu_i| + 1 vertices into edge i: for nu_i >= 0 the run
// c_{i-1} + k*c_i (k = 1..nu_i+1), otherwise c_i + k*c_{i-1}. Equivalent to
// operad composition with straight-line blocks; phi_path inverts it.
FareyPath expand(const FareyPath& c, const std::vector<Int>& nu);

// Inverse of expand on star paths: recovers (phi_path(c), nu).
std::pair<FareyPath, std::vector<Int>> extract_lambda(const FareyPath& c);

// Per-gap detail of the extraction. For a nonzero label the inserted run
// lives on a fin of `owner` (one of the two bounding minima): the opposite
// minimum sits at fin index k0 (0 when it is the bound itself or an
// endpoint), the leaf at k1 = k0 + |lambda| + 1.
struct GapDetail {
  std::size_t edge = 0;  // 1-based edge index in phi_path(c)
  Int lambda = 0;
  Vertex owner;
  Vertex other;
  FinSide side = FinSide::Plus;
  Int k0 = 0;
  Int k1 = 0;
};

std::vector<GapDetail> extract_lambda_detailed(const FareyPath& c);
std::vector<GapDetail> extract_lambda_detailed(const FareyPath& c, const FriezData& fd);

// Integer combinations of paths.
class FormalSum {
 public:
  FormalSum() = default;
  static FormalSum single(const FareyPath& c, long long coeff = 1);

  void add(const FareyPath& c, long long coeff);
  FormalSum& operator+=(const FormalSum& rhs);
  FormalSum& operator-=(const FormalSum& rhs);

  bool empty() const { return terms_.empty(); }
  const std::map<FareyPath, long long, PathLess>& terms() const { return terms_; }

  friend bool operator==(const FormalSum& a, const FormalSum& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<FareyPath, long long, PathLess> terms_;
};

// One term per edge: insert that edge's mediant.
FormalSum create(const FareyPath& c);
// One term per maximum: delete that leaf.
FormalSum annihilate(const FareyPath& c);
FormalSum create(const FormalSum& s);
FormalSum annihilate(const FormalSum& s);
// annihilate(create(s)) - create(annihilate(s)); diagonal on single paths
// with eigenvalue degree - #maxima.
FormalSum number(const FormalSum& s);

// All paths grouped by degree: level[d-1] holds the paths of degree d,
// each level sorted canonically. Level sizes follow the Catalan numbers.
std::vector<std::vector<FareyPath>> enumerate_paths(std::size_t max_degree);

}  // namespace farey
