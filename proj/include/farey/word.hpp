// Words in the free monoid SL2(N) on gp = [[1,1],[0,1]] and gm = [[1,0],[1,1]],
// written as alternating blocks g_d^{a_l} ... g_m^{a1} g_p^{a0}. Block i uses
// gp when i is even and gm when i is odd; a0 >= 0 and a_i >= 1 for i >= 1, so
// every matrix has exactly one exponent list. A vertex v corresponds to the
// word g with (1,1)g = v; the matrix rows are the bounds of v.
#pragma once

#include "farey/numeric.hpp"
#include "farey/vertex.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace farey {

class Sl2Word {
 public:
  static Sl2Word identity();
  static Sl2Word from_exponents(std::vector<Int> exps);
  static Sl2Word of_vertex(const Vertex& v);

  const std::vector<Int>& exponents() const { return exps_; }
  std::size_t ell() const { return exps_.size() - 1; }
  int delta() const { return ell() % 2 == 0 ? +1 : -1; }
  bool is_identity() const { return exps_.size() == 1 && exps_[0] == 0; }
  Int depth() const;

  // Rows of the matrix: lower = zero * g, upper = infinity * g.
  const Vertex& lower() const { return lower_; }
  const Vertex& upper() const { return upper_; }

  // (1,1) * g, the vertex this word belongs to.
  Vertex vertex() const { return mediant(lower_, upper_); }

  // Row-vector action w * g = w.x * lower + w.y * upper.
  Vertex apply(const Vertex& w) const;

  // Letterwise involutions: starred swaps gp <-> gm, transposed additionally
  // reverses the letters (matrix transpose).
  Sl2Word starred() const;
  Sl2Word transposed() const;

  friend Sl2Word composed(const Sl2Word& a, const Sl2Word& b);

  friend bool operator==(const Sl2Word& a, const Sl2Word& b) { return a.exps_ == b.exps_; }

 private:
  explicit Sl2Word(std::vector<Int> exps);

  std::vector<Int> exps_;
  Vertex lower_, upper_;
};

// Matrix product a*b; the letters of b end up rightmost (applied last).
Sl2Word composed(const Sl2Word& a, const Sl2Word& b);

std::pair<Vertex, Vertex> bounds(const Vertex& v);

// Continued fraction digits of y/x with the trailing term raised by one:
// [a0,...,al] evaluates as a0 + 1/(a1 + 1/(... + 1/(al + 1))). These are
// exactly the word exponents of v.
std::vector<Int> continued_fraction(const Vertex& v);
Rat cf_eval(const std::vector<Int>& exps);
Vertex vertex_of_cf(const std::vector<Int>& exps);

// Parent structure of an interior vertex. The mother is the bound the vertex
// leans away from (t_{-delta}), the father the other bound. At the root both
// parents degenerate to the two endpoints, flagged separately. m_index is the
// unique m >= 1 with father = mother^(1+m) when the father is interior.
struct Parents {
  Vertex mother;
  Vertex father;
  int delta = +1;
  bool root_both = false;
  bool father_is_endpoint = false;
  Int m_index = 0;
};

Parents parents(const Vertex& v);
Vertex mother_of(const Vertex& v);   // precondition: interior, not root
Vertex father_of(const Vertex& v);   // may be an endpoint; precondition: interior, not root

// The two offsprings {v + bound} (inverse image of mother_of).
std::pair<Vertex, Vertex> children(const Vertex& v);

enum class FinSide { Minus, Plus };

// n-th fin point v_side + n*v (n >= 1). Endpoints own one fin each:
// fin(zero, Plus, n) = (n, 1) and fin(infinity, Minus, n) = (1, n).
Vertex fin(const Vertex& v, FinSide side, const Int& n);

// Solves w = v_side + n*v; empty when w is not on a fin of v.
std::optional<std::pair<FinSide, Int>> fin_index(const Vertex& v, const Vertex& w);

enum class Order { Real, Tree, Pointwise, Fundamental };
enum class Cmp { Less, Equal, Greater, Incomparable };

// Real: total order of the rationals. Tree: ancestor order (a Less b when a
// is a strict mother-iterate of b). Pointwise: componentwise. Fundamental:
// componentwise on both bounds. Tree/Fundamental treat distinct endpoints as
// incomparable.
Cmp compare(const Vertex& a, const Vertex& b, Order order);

// Deepest common tree ancestor of two interior vertices.
Vertex meet(const Vertex& a, const Vertex& b);

// Bound-exchange involution: (x- + y-, x+ + y+). Reverses the word.
Vertex transpose_vertex(const Vertex& v);

// Mother/father continued-fraction shortcut formulas, reported against the
// structural definitions. The father shortcut has overlapping cases that can
// disagree with the structure (e.g. (5,2)); callers inspect, nothing asserts.
struct ParentCfReport {
  Vertex v;
  Vertex structural_mother;
  Vertex structural_father;
  Vertex cf_mother;
  bool mother_matches = false;
  // Applicable father candidates as (case label, vertex, matches).
  struct Candidate {
    const char* label;
    Vertex value;
    bool matches;
  };
  std::vector<Candidate> father_candidates;
};

ParentCfReport parent_cf_report(const Vertex& v);

}  // namespace farey
