// Vertices of the Farey graph: coprime pairs (x, y) of nonnegative integers.
// (x, y) stands for the rational y/x, so the endpoints are zero = (1, 0) and
// infinity = (0, 1); interior vertices have x, y >= 1.
#pragma once

#include "farey/numeric.hpp"

#include <iosfwd>
#include <string>
#include <utility>

namespace farey {

class Vertex {
 public:
  Vertex() : x_(1), y_(0) {}
  Vertex(Int x, Int y);

  static const Vertex& zero();
  static const Vertex& infinity();

  const Int& x() const { return x_; }
  const Int& y() const { return y_; }

  bool is_endpoint() const { return x_ == 0 || y_ == 0; }
  bool is_interior() const { return x_ > 0 && y_ > 0; }
  bool is_root() const { return x_ == 1 && y_ == 1; }

  // x + y, the weight used by the equidistribution potential.
  Int weight() const { return x_ + y_; }

  std::string str() const;

  friend bool operator==(const Vertex& a, const Vertex& b) {
    return a.x_ == b.x_ && a.y_ == b.y_;
  }
  friend bool operator!=(const Vertex& a, const Vertex& b) { return !(a == b); }

 private:
  Int x_, y_;
};

std::ostream& operator<<(std::ostream& os, const Vertex& v);

// Cross product x_a*y_b - y_a*x_b; consecutive Farey neighbors have det 1.
Int det(const Vertex& a, const Vertex& b);

// Componentwise sum; the Farey mediant of an edge.
Vertex mediant(const Vertex& a, const Vertex& b);

// Strict order of the underlying rationals y/x (infinity is largest).
bool real_less(const Vertex& a, const Vertex& b);

// Lexicographic (x, y) order; only used as a container key.
struct VertexLex {
  bool operator()(const Vertex& a, const Vertex& b) const {
    if (a.x() != b.x()) return a.x() < b.x();
    return a.y() < b.y();
  }
};

// Coordinate swap (x, y) -> (y, x); mirrors the graph around (1, 1).
Vertex star(const Vertex& v);

}  // namespace farey
