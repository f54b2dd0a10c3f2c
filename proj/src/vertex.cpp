#include "farey/vertex.hpp"

#include <boost/multiprecision/integer.hpp>

#include <ostream>
#include <stdexcept>

namespace farey {

Vertex::Vertex(Int x, Int y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_ < 0 || y_ < 0 || (x_ == 0 && y_ == 0)) {
    throw std::invalid_argument("vertex coordinates must be nonnegative and not both zero");
  }
  if (boost::multiprecision::gcd(x_, y_) != 1) {
    throw std::invalid_argument("vertex coordinates must be coprime: (" + x_.str() + "," +
                                y_.str() + ")");
  }
}

const Vertex& Vertex::zero() {
  static const Vertex v(1, 0);
  return v;
}

const Vertex& Vertex::infinity() {
  static const Vertex v(0, 1);
  return v;
}

std::string Vertex::str() const { return "(" + x_.str() + "," + y_.str() + ")"; }

std::ostream& operator<<(std::ostream& os, const Vertex& v) { return os << v.str(); }

Int det(const Vertex& a, const Vertex& b) { return a.x() * b.y() - a.y() * b.x(); }

Vertex mediant(const Vertex& a, const Vertex& b) { return Vertex(a.x() + b.x(), a.y() + b.y()); }

bool real_less(const Vertex& a, const Vertex& b) { return a.y() * b.x() < b.y() * a.x(); }

Vertex star(const Vertex& v) { return Vertex(v.y(), v.x()); }

}  // namespace farey
