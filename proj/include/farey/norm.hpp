// Norm-bounded sub-level sets of the Farey tree, their corona structure,
// Fibonacci-iterated norms, and the closed-form layer/count formulas for
// linear norms.
#pragma once

#include "farey/corona.hpp"
#include "farey/numeric.hpp"
#include "farey/path.hpp"
#include "farey/vertex.hpp"
#include "farey/word.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace farey {

enum class NormKind { Linear, PPower, Max, Matrix, Custom };

// A fundamentally monotone vertex norm: descending into the tree never
// decreases it.  Linear/PPower/Max are also pointwise monotone and
// homogeneous; Matrix is evaluated on the bound rows of a vertex; Custom
// wraps any caller-supplied monotone map (the builder trusts the promise,
// its node limit is the only safety net).
struct NormSpec {
  NormKind kind = NormKind::Linear;
  Rat alpha = 1, beta = 1;                 // Linear: |x,y| = alpha*x + beta*y
  int p = 1;                               // PPower: x^p + y^p vs R^p
  Rat a11 = 1, a12 = 1, a21 = 1, a22 = 1;  // Matrix: trace against bound rows
  std::function<Rat(const Vertex&)> custom;

  static NormSpec linear(const Rat& alpha, const Rat& beta);
  static NormSpec p_power(int p);
  static NormSpec max_norm();
  static NormSpec matrix(const Rat& a11, const Rat& a12, const Rat& a21, const Rat& a22);
  static NormSpec custom_monotone(std::function<Rat(const Vertex&)> fn);

  std::string str() const;
};

inline constexpr std::size_t kDefaultNodeLimit = 5'000'000;

// Exact |v|.  PPower with p >= 2 has an irrational value and throws
// std::domain_error; use norm_le for membership instead.
Rat norm_value(const NormSpec& norm, const Vertex& v);

// |v| <= R, decided with denominators multiplied out.
bool norm_le(const NormSpec& norm, const Vertex& v, const Rat& R);

// |v|_n = sup{ |a(n+2)v+ + a(n+1)v-|, |a(n+1)v+ + a(n+2)v-| } over the
// bounds of an interior v; n = 0 recovers |v|.  Needs a coordinate norm
// (Matrix/Custom are only defined on vertices, and PPower p >= 2 has no
// rational value), otherwise std::domain_error.
Rat iterated_norm_value(const NormSpec& norm, const Vertex& v, std::size_t n);

// |v|_n <= R for the coordinate norms (Linear, PPower any p, Max).
bool iterated_norm_le(const NormSpec& norm, const Vertex& v, std::size_t n, const Rat& R);

// Sub-level set {v interior : |v| <= R} as a real-ordered path, built by
// in-order walk of the tree with monotone pruning.  Throws
// std::length_error when more than node_limit vertices qualify (the
// non-finite detector for bad custom norms).
FareyPath build_c_leq_path(const NormSpec& norm, const Rat& R,
                           std::size_t node_limit = kDefaultNodeLimit);

// Same set with the corona tower attached (validates the star property of
// every level on construction).
Corona build_c_leq(const NormSpec& norm, const Rat& R,
                   std::size_t node_limit = kDefaultNodeLimit);

// Sub-level path of the n-iterated norm.
FareyPath build_iterated_c_leq_path(const NormSpec& norm, const Rat& R, std::size_t n,
                                    std::size_t node_limit = kDefaultNodeLimit);

// Collapsing n times commutes with passing to the iterated norm:
// phi^n(c(|.| <= R)) == c(|.|_n <= R).  n = 0 is trivially true.
bool phi_iterate_check(const NormSpec& norm, const Rat& R, std::size_t n,
                       std::size_t node_limit = kDefaultNodeLimit);
// Same check against a corona already built for (norm, R), so a sweep over n
// pays for the tower only once.
bool phi_iterate_check(const Corona& c, const NormSpec& norm, const Rat& R,
                       std::size_t n, std::size_t node_limit = kDefaultNodeLimit);

// For subadditive homogeneous norms:
// c(|.| <= R/a(n+2))  subset of  phi^n c(|.| <= R)  subset of  c(|.| <= 2R/a(n+3)).
bool sandwich_check(const NormSpec& norm, const Rat& R, std::size_t n,
                    std::size_t node_limit = kDefaultNodeLimit);
bool sandwich_check(const Corona& c, const NormSpec& norm, const Rat& R, std::size_t n,
                    std::size_t node_limit = kDefaultNodeLimit);

// Interior-of-a contained in interior-of-b (both real-ordered paths).
bool path_subset(const FareyPath& a, const FareyPath& b);

// Closed-form layer lambda^n of a linear-norm corona, one signed count per
// edge of the level-n path: fins grow above a surviving vertex (negative,
// counted from its upper bound) or below one (positive, from its lower
// bound); the single-floor and the double-floor displays are both evaluated
// whenever the entry is nonzero and their agreement is reported, never
// assumed.
struct ClosedFormLayer {
  std::vector<Int> lambda;
  bool alternate_form_agrees = true;
};

ClosedFormLayer theorem111_lambda(const Rat& alpha, const Rat& beta, const Rat& R,
                                  std::size_t n, const Corona& c);

// Closed-form degree of the (n-1)-collapsed linear-norm corona
// (degree = #interior + 1 throughout).
Int corollary112_count(const Rat& alpha, const Rat& beta, const Rat& R, std::size_t n,
                       const Corona& c);

// The slice of c(alpha,beta,R) strictly between 0g and infinity-g equals the
// corona of the transported norm (alpha,beta)g^t mapped through g.
// Precondition (std::invalid_argument): 0g and infinity-g lie in the corona
// or are endpoints.
bool subcorona_transform(const Rat& alpha, const Rat& beta, const Rat& R, const Sl2Word& g,
                         std::size_t node_limit = kDefaultNodeLimit);

}  // namespace farey
