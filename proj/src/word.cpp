#include "farey/word.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace farey {

namespace {

void check_canonical(const std::vector<Int>& exps) {
  if (exps.empty() || exps[0] < 0) {
    throw std::invalid_argument("not a canonical exponent list");
  }
  for (std::size_t i = 1; i < exps.size(); ++i) {
    if (exps[i] < 1) throw std::invalid_argument("not a canonical exponent list");
  }
}

// Accumulates blocks left of everything appended so far; same-generator
// neighbours merge, so the result is canonical by construction.
class BlockBuilder {
 public:
  BlockBuilder() : exps_{Int(0)} {}
  explicit BlockBuilder(std::vector<Int> init) : exps_(std::move(init)) {}

  void append(int sign, const Int& count) {
    const int top_sign = (exps_.size() - 1) % 2 == 0 ? +1 : -1;
    if (sign == top_sign) {
      exps_.back() += count;
    } else if (count > 0) {
      exps_.push_back(count);
    }
  }

  std::vector<Int> take() { return std::move(exps_); }

 private:
  std::vector<Int> exps_;
};

int block_sign(std::size_t i) { return i % 2 == 0 ? +1 : -1; }

}  // namespace

Sl2Word::Sl2Word(std::vector<Int> exps) : exps_(std::move(exps)) {
  Int lx = 1, ly = 0, ux = 0, uy = 1;
  for (std::size_t i = exps_.size(); i-- > 0;) {
    const Int& a = exps_[i];
    if (block_sign(i) > 0) {
      ly += a * lx;
      uy += a * ux;
    } else {
      lx += a * ly;
      ux += a * uy;
    }
  }
  lower_ = Vertex(lx, ly);
  upper_ = Vertex(ux, uy);
}

Sl2Word Sl2Word::identity() { return Sl2Word(std::vector<Int>{Int(0)}); }

Sl2Word Sl2Word::from_exponents(std::vector<Int> exps) {
  if (exps.empty()) return identity();
  check_canonical(exps);
  return Sl2Word(std::move(exps));
}

Sl2Word Sl2Word::of_vertex(const Vertex& v) {
  if (v.is_endpoint()) {
    throw std::domain_error("endpoint has no word: " + v.str());
  }
  std::vector<Int> exps;
  Int x = v.x(), y = v.y();
  int parity = 0;
  while (!(x == 1 && y == 1)) {
    Int q = 0;
    if (parity == 0) {
      if (y > x) {
        Int r = y % x;
        if (r == 0) {  // coprime forces x == 1
          q = y - 1;
          y = 1;
        } else {
          q = y / x;
          y = r;
        }
      }
    } else {
      if (x > y) {
        Int r = x % y;
        if (r == 0) {
          q = x - 1;
          x = 1;
        } else {
          q = x / y;
          x = r;
        }
      }
    }
    exps.push_back(q);
    parity ^= 1;
  }
  if (exps.empty()) exps.push_back(0);
  return Sl2Word(std::move(exps));
}

Int Sl2Word::depth() const {
  Int total = 0;
  for (const Int& a : exps_) total += a;
  return total;
}

Vertex Sl2Word::apply(const Vertex& w) const {
  return Vertex(w.x() * lower_.x() + w.y() * upper_.x(),
                w.x() * lower_.y() + w.y() * upper_.y());
}

Sl2Word Sl2Word::starred() const {
  BlockBuilder out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    out.append(-block_sign(i), exps_[i]);
  }
  return Sl2Word(out.take());
}

Sl2Word Sl2Word::transposed() const {
  BlockBuilder out;
  for (std::size_t i = exps_.size(); i-- > 0;) {
    out.append(-block_sign(i), exps_[i]);
  }
  return Sl2Word(out.take());
}

Sl2Word composed(const Sl2Word& a, const Sl2Word& b) {
  BlockBuilder out(b.exps_);
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    out.append(block_sign(i), a.exps_[i]);
  }
  return Sl2Word(out.take());
}

std::pair<Vertex, Vertex> bounds(const Vertex& v) {
  Sl2Word w = Sl2Word::of_vertex(v);
  return {w.lower(), w.upper()};
}

std::vector<Int> continued_fraction(const Vertex& v) {
  return Sl2Word::of_vertex(v).exponents();
}

Rat cf_eval(const std::vector<Int>& exps) {
  check_canonical(exps);
  Rat r = Rat(exps.back() + 1);
  for (std::size_t i = exps.size() - 1; i-- > 0;) {
    r = Rat(exps[i]) + 1 / r;
  }
  return r;
}

Vertex vertex_of_cf(const std::vector<Int>& exps) {
  return Sl2Word::from_exponents(exps).vertex();
}

Parents parents(const Vertex& v) {
  Sl2Word w = Sl2Word::of_vertex(v);
  Parents out;
  if (w.is_identity()) {
    out.mother = Vertex::zero();
    out.father = Vertex::infinity();
    out.delta = +1;
    out.root_both = true;
    out.father_is_endpoint = true;
    return out;
  }
  out.delta = w.delta();
  if (out.delta > 0) {
    out.mother = w.lower();
    out.father = w.upper();
  } else {
    out.mother = w.upper();
    out.father = w.lower();
  }
  out.father_is_endpoint = out.father.is_endpoint();
  if (!out.father_is_endpoint) out.m_index = w.exponents().back();
  return out;
}

Vertex mother_of(const Vertex& v) {
  Parents p = parents(v);
  if (p.root_both) throw std::domain_error("root has no single mother");
  return p.mother;
}

Vertex father_of(const Vertex& v) {
  Parents p = parents(v);
  if (p.root_both) throw std::domain_error("root has no single father");
  return p.father;
}

std::pair<Vertex, Vertex> children(const Vertex& v) {
  auto [lo, up] = bounds(v);
  return {mediant(lo, v), mediant(v, up)};
}

Vertex fin(const Vertex& v, FinSide side, const Int& n) {
  if (n < 1) throw std::domain_error("fin index must be >= 1");
  if (v.is_endpoint()) {
    if (v == Vertex::zero() && side == FinSide::Plus) return Vertex(n, 1);
    if (v == Vertex::infinity() && side == FinSide::Minus) return Vertex(1, n);
    throw std::domain_error("endpoint " + v.str() + " owns only one fin");
  }
  auto [lo, up] = bounds(v);
  const Vertex& base = side == FinSide::Minus ? lo : up;
  return Vertex(base.x() + n * v.x(), base.y() + n * v.y());
}

std::optional<std::pair<FinSide, Int>> fin_index(const Vertex& v, const Vertex& w) {
  if (v.is_endpoint()) {
    if (v == Vertex::zero() && w.y() == 1 && w.x() >= 1) {
      return std::make_pair(FinSide::Plus, w.x());
    }
    if (v == Vertex::infinity() && w.x() == 1 && w.y() >= 1) {
      return std::make_pair(FinSide::Minus, w.y());
    }
    return std::nullopt;
  }
  auto [lo, up] = bounds(v);
  for (FinSide side : {FinSide::Minus, FinSide::Plus}) {
    const Vertex& base = side == FinSide::Minus ? lo : up;
    Int dx = w.x() - base.x();
    if (dx < v.x() || dx % v.x() != 0) continue;
    Int n = dx / v.x();
    if (base.y() + n * v.y() == w.y()) return std::make_pair(side, n);
  }
  return std::nullopt;
}

namespace {

Cmp from_leq(bool le, bool ge) {
  if (le && ge) return Cmp::Equal;
  if (le) return Cmp::Less;
  if (ge) return Cmp::Greater;
  return Cmp::Incomparable;
}

bool pointwise_leq(const Vertex& a, const Vertex& b) {
  return a.x() <= b.x() && a.y() <= b.y();
}

// a is a tree ancestor-or-self of b: the exponent lists agree below a's top
// block and a's top exponent is no larger there.
bool tree_leq(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.size() > b.size()) return false;
  const std::size_t top = a.size() - 1;
  for (std::size_t i = 0; i < top; ++i) {
    if (a[i] != b[i]) return false;
  }
  return a[top] <= b[top];
}

}  // namespace

Cmp compare(const Vertex& a, const Vertex& b, Order order) {
  switch (order) {
    case Order::Real: {
      Int lhs = a.y() * b.x(), rhs = b.y() * a.x();
      if (lhs == rhs) return Cmp::Equal;
      return lhs < rhs ? Cmp::Less : Cmp::Greater;
    }
    case Order::Pointwise:
      return from_leq(pointwise_leq(a, b), pointwise_leq(b, a));
    case Order::Tree: {
      if (a.is_endpoint() || b.is_endpoint()) {
        return a == b ? Cmp::Equal : Cmp::Incomparable;
      }
      auto ea = continued_fraction(a), eb = continued_fraction(b);
      return from_leq(tree_leq(ea, eb), tree_leq(eb, ea));
    }
    case Order::Fundamental: {
      if (a.is_endpoint() || b.is_endpoint()) {
        return a == b ? Cmp::Equal : Cmp::Incomparable;
      }
      auto [alo, aup] = bounds(a);
      auto [blo, bup] = bounds(b);
      bool le = pointwise_leq(alo, blo) && pointwise_leq(aup, bup);
      bool ge = pointwise_leq(blo, alo) && pointwise_leq(bup, aup);
      return from_leq(le, ge);
    }
  }
  throw std::logic_error("unreachable");
}

Vertex meet(const Vertex& a, const Vertex& b) {
  auto ea = continued_fraction(a), eb = continued_fraction(b);
  const std::size_t n = std::min(ea.size(), eb.size());
  std::size_t j = 0;
  while (j < n && ea[j] == eb[j]) ++j;
  std::vector<Int> exps;
  if (j == n) {
    exps.assign(ea.begin(), ea.begin() + static_cast<std::ptrdiff_t>(n));
  } else {
    exps.assign(ea.begin(), ea.begin() + static_cast<std::ptrdiff_t>(j));
    exps.push_back(std::min(ea[j], eb[j]));
  }
  return vertex_of_cf(exps);
}

Vertex transpose_vertex(const Vertex& v) {
  auto [lo, up] = bounds(v);
  return Vertex(lo.x() + lo.y(), up.x() + up.y());
}

ParentCfReport parent_cf_report(const Vertex& v) {
  Sl2Word w = Sl2Word::of_vertex(v);
  if (w.is_identity()) throw std::domain_error("root has no parent shortcut");
  Parents p = parents(v);

  ParentCfReport rep;
  rep.v = v;
  rep.structural_mother = p.mother;
  rep.structural_father = p.father;

  const std::vector<Int>& e = w.exponents();
  const std::size_t l = w.ell();

  std::vector<Int> me(e);
  if (me.back() > 1 || l == 0) {
    me.back() -= 1;
  } else {
    me.pop_back();
  }
  rep.cf_mother = vertex_of_cf(me);
  rep.mother_matches = rep.cf_mother == p.mother;

  auto add = [&](const char* label, const Vertex& value) {
    rep.father_candidates.push_back({label, value, value == p.father});
  };
  if (l >= 1 && e.back() > 1) {
    add("a_l>1", vertex_of_cf({e.begin(), e.end() - 1}));
  }
  if (l >= 2 && e.back() == 1) {
    add("a_l=1", vertex_of_cf({e.begin(), e.end() - 2}));
  }
  if (l == 1) {
    add("l=1", Vertex(1, e[0]));
  }
  if (l == 0) {
    add("l=0", Vertex::infinity());
  }
  return rep;
}

}  // namespace farey
