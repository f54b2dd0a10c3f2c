// Coronas: paths whose full tower of phi-images consists of star paths. The
// tower ends at the empty path; its length is the height. Each layer is the
// label vector extracted from the star structure, and the stack of layers
// (the d.n.a.) determines the corona.
#pragma once

#include "farey/path.hpp"

#include <cstddef>
#include <vector>

namespace farey {

bool is_corona(const FareyPath& c);

class Corona {
 public:
  explicit Corona(FareyPath c);  // throws std::domain_error when not a corona

  static Corona phi() { return Corona(FareyPath::phi()); }

  const FareyPath& path() const { return tower_.front(); }
  // Phi^0 c, Phi^1 c, ..., down to the empty path.
  const std::vector<FareyPath>& tower() const { return tower_; }
  std::size_t height() const { return tower_.size() - 1; }
  std::size_t degree() const { return path().degree(); }

  friend bool operator==(const Corona& a, const Corona& b) {
    return a.path() == b.path();
  }

 private:
  std::vector<FareyPath> tower_;
};

struct Dna {
  // layers[0] belongs to the top of the tower (one edge), the last layer to
  // the corona itself; layer k has one entry per edge of tower()[k+1].
  std::vector<std::vector<Int>> layers;
};

Dna dna_encode(const Corona& c);
Corona dna_decode(const Dna& d);  // rejects layers whose lengths break the doubling law

// Straight-line corona of signed length m, degree |m| + 2.
Corona nu(const Int& m);

// n rounds of full mediant insertion starting from the empty path: all
// layers zero, degree 2^n.
Corona zero_dna_corona(std::size_t n);

// Maxima whose removal leaves a corona.
std::vector<Vertex> closed_points(const Corona& c);
// 1-based edge indices whose mediant insertion gives a corona.
std::vector<std::size_t> open_edges(const Corona& c);

// Defects against the counts 1 + #Phi and 2 + 2#Phi.
long long h0(const Corona& c);
long long h1(const Corona& c);
// #open - #closed, the eigenvalue of corona_number on [c].
long long corona_eigenvalue(const Corona& c);

FormalSum corona_create(const Corona& c);
FormalSum corona_annihilate(const Corona& c);
FormalSum corona_create(const FormalSum& s);      // every term must be a corona
FormalSum corona_annihilate(const FormalSum& s);  // every term must be a corona
FormalSum corona_number(const FormalSum& s);

// Cross-check of the structural neighbour rule for closed points against the
// direct removal test. The rule reads: a maximum is closed unless both
// neighbours are minima and one of two second-neighbour conditions holds
// (conditions referencing positions outside the path count as false).
// Discrepancies are reported, never reconciled.
struct ClosedPointReport {
  Vertex point;
  bool direct = false;
  bool neighbor_rule = false;
};
std::vector<ClosedPointReport> closed_point_reports(const Corona& c);

// All coronas grouped by degree with the single-insertion parent relation:
// parents[d][j] lists indices into levels[d-1] of the coronas that reach
// levels[d][j] by inserting one mediant.
struct CoronaGraph {
  std::vector<std::vector<Corona>> levels;
  std::vector<std::vector<std::vector<std::size_t>>> parents;
};
CoronaGraph enumerate_coronas(std::size_t max_degree);

}  // namespace farey
