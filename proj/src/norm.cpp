#include "farey/norm.hpp"

#include "farey/zeckendorf.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace farey {

namespace {

std::string rat_str(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  std::string out = n.str();
  if (d != 1) out += "/" + d.str();
  return out;
}

bool vertex_real_less(const Vertex& a, const Vertex& b) { return real_less(a, b); }

// Membership |v| <= R with every denominator multiplied out at construction,
// so the tree walk only multiplies and compares integers.
class SublevelTest {
 public:
  SublevelTest(const NormSpec& norm, const Rat& R) : norm_(&norm), radius_(R) {
    switch (norm.kind) {
      case NormKind::Linear: {
        Int ad = denominator(norm.alpha), an = numerator(norm.alpha);
        Int bd = denominator(norm.beta), bn = numerator(norm.beta);
        Int rd = denominator(R), rn = numerator(R);
        cx_ = an * bd * rd;
        cy_ = bn * ad * rd;
        bound_ = rn * ad * bd;
        break;
      }
      case NormKind::PPower: {
        scale_ = denominator(R);
        Int rn = numerator(R);
        bound_ = rn < 0 ? Int(-1) : boost::multiprecision::pow(rn, static_cast<unsigned>(norm.p));
        break;
      }
      case NormKind::Max: {
        scale_ = denominator(R);
        bound_ = numerator(R);
        break;
      }
      case NormKind::Matrix: {
        Int d11 = denominator(norm.a11), d12 = denominator(norm.a12);
        Int d21 = denominator(norm.a21), d22 = denominator(norm.a22);
        Int rd = denominator(R);
        Int common = d11 * d12 * d21 * d22 * rd;
        m11_ = numerator(norm.a11) * (common / d11);
        m12_ = numerator(norm.a12) * (common / d12);
        m21_ = numerator(norm.a21) * (common / d21);
        m22_ = numerator(norm.a22) * (common / d22);
        bound_ = numerator(R) * (common / rd);
        break;
      }
      case NormKind::Custom:
        if (!norm.custom) throw std::invalid_argument("custom norm without a callable");
        break;
    }
  }

  bool vertex_le(const Vertex& v, const Vertex& lo, const Vertex& up) const {
    switch (norm_->kind) {
      case NormKind::Matrix:
        return m11_ * lo.x() + m12_ * lo.y() + m21_ * up.x() + m22_ * up.y() <= bound_;
      case NormKind::Custom:
        return norm_->custom(v) <= radius_;
      default:
        return vector_le(v.x(), v.y());
    }
  }

  // Coordinate norms extend to arbitrary nonnegative integer vectors; the
  // iterated-norm arguments are generally not primitive.
  bool vector_le(const Int& wx, const Int& wy) const {
    switch (norm_->kind) {
      case NormKind::Linear:
        return cx_ * wx + cy_ * wy <= bound_;
      case NormKind::PPower: {
        unsigned p = static_cast<unsigned>(norm_->p);
        return boost::multiprecision::pow(wx * scale_, p) +
                   boost::multiprecision::pow(wy * scale_, p) <=
               bound_;
      }
      case NormKind::Max:
        return wx * scale_ <= bound_ && wy * scale_ <= bound_;
      default:
        throw std::domain_error("norm is only defined on vertices");
    }
  }

 private:
  const NormSpec* norm_;
  Rat radius_;
  Int cx_ = 0, cy_ = 0, bound_ = 0, scale_ = 1;
  Int m11_ = 0, m12_ = 0, m21_ = 0, m22_ = 0;
};

bool is_coordinate_norm(const NormSpec& norm) {
  return norm.kind == NormKind::Linear || norm.kind == NormKind::PPower ||
         norm.kind == NormKind::Max;
}

// In-order walk over the tree, pruning whole subtrees as soon as the mediant
// fails (fundamental monotonicity).  Emission order is the real order.
template <typename Member>
FareyPath build_path(Member&& member, std::size_t node_limit) {
  struct Frame {
    Vertex lo, up, v;
  };
  std::vector<Vertex> interior;
  std::vector<Frame> stack;
  auto descend = [&](Vertex lo, Vertex up) {
    for (;;) {
      Vertex v = mediant(lo, up);
      if (!member(v, lo, up)) break;
      if (interior.size() + stack.size() >= node_limit) {
        throw std::length_error("sub-level set exceeded the node limit");
      }
      stack.push_back(Frame{lo, up, v});
      up = v;
    }
  };
  descend(Vertex::zero(), Vertex::infinity());
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    interior.push_back(f.v);
    descend(f.v, f.up);
  }
  return FareyPath::trusted(std::move(interior));
}

// Linear value, defined on endpoints too: |0| = alpha, |infinity| = beta.
Rat linear_value(const Rat& alpha, const Rat& beta, const Vertex& v) {
  return alpha * Rat(v.x()) + beta * Rat(v.y());
}

// Direct real-order walk for a linear norm with denominators cleared to
// W(v) = A*x + B*y <= RS.  Consecutive members u < v < t obey t = j*v - u
// with j = floor((RS + W(u)) / W(v)): t is the unique neighbour of v on the
// far side of u, and the floor is the largest multiple keeping W(t) <= RS,
// which is exactly the edge condition W(v + t) > RS.  One small division per
// vertex, no tree descent.
FareyPath build_linear_path(const Rat& alpha, const Rat& beta, const Rat& R,
                            std::size_t node_limit) {
  const Int ad = denominator(alpha), bd = denominator(beta), rd = denominator(R);
  const Int A = numerator(alpha) * bd * rd;
  const Int B = numerator(beta) * ad * rd;
  const Int RS = numerator(R) * ad * bd;
  if (A + B > RS) return FareyPath::phi();
  std::vector<Vertex> interior;
  Int px = 1, py = 0, wp = A;  // predecessor, starting at zero
  Int vx = (RS - B) / A, vy = 1;
  Int wv = A * vx + B;
  while (!(vx == 0 && vy == 1)) {
    if (interior.size() >= node_limit) {
      throw std::length_error("sub-level set exceeded the node limit");
    }
    interior.emplace_back(vx, vy);
    const Int j = (RS + wp) / wv;
    Int tx = j * vx - px, ty = j * vy - py, wt = j * wv - wp;
    px = std::move(vx);
    py = std::move(vy);
    wp = std::move(wv);
    vx = std::move(tx);
    vy = std::move(ty);
    wv = std::move(wt);
  }
  return FareyPath::trusted(std::move(interior));
}

const FareyPath& tower_level(const Corona& c, std::size_t n) {
  static const FareyPath bare = FareyPath::phi();
  return n <= c.height() ? c.tower()[n] : bare;
}

}  // namespace

NormSpec NormSpec::linear(const Rat& alpha, const Rat& beta) {
  if (alpha <= 0 || beta <= 0) throw std::invalid_argument("linear norm needs alpha, beta > 0");
  NormSpec s;
  s.kind = NormKind::Linear;
  s.alpha = alpha;
  s.beta = beta;
  return s;
}

NormSpec NormSpec::p_power(int p) {
  if (p < 1) throw std::invalid_argument("p-power norm needs p >= 1");
  NormSpec s;
  s.kind = NormKind::PPower;
  s.p = p;
  return s;
}

NormSpec NormSpec::max_norm() {
  NormSpec s;
  s.kind = NormKind::Max;
  return s;
}

NormSpec NormSpec::matrix(const Rat& a11, const Rat& a12, const Rat& a21, const Rat& a22) {
  if (a11 <= 0 || a12 <= 0 || a21 <= 0 || a22 <= 0) {
    throw std::invalid_argument("matrix norm needs positive entries");
  }
  NormSpec s;
  s.kind = NormKind::Matrix;
  s.a11 = a11;
  s.a12 = a12;
  s.a21 = a21;
  s.a22 = a22;
  return s;
}

NormSpec NormSpec::custom_monotone(std::function<Rat(const Vertex&)> fn) {
  if (!fn) throw std::invalid_argument("custom norm without a callable");
  NormSpec s;
  s.kind = NormKind::Custom;
  s.custom = std::move(fn);
  return s;
}

std::string NormSpec::str() const {
  switch (kind) {
    case NormKind::Linear:
      return "linear(" + rat_str(alpha) + "," + rat_str(beta) + ")";
    case NormKind::PPower:
      return "p-power(" + std::to_string(p) + ")";
    case NormKind::Max:
      return "max";
    case NormKind::Matrix:
      return "matrix(" + rat_str(a11) + "," + rat_str(a12) + ";" + rat_str(a21) + "," +
             rat_str(a22) + ")";
    case NormKind::Custom:
      return "custom";
  }
  return "norm";
}

Rat norm_value(const NormSpec& norm, const Vertex& v) {
  switch (norm.kind) {
    case NormKind::Linear:
      return linear_value(norm.alpha, norm.beta, v);
    case NormKind::PPower:
      if (norm.p == 1) return Rat(v.x() + v.y());
      throw std::domain_error("p-power value is irrational for p >= 2; use norm_le");
    case NormKind::Max:
      return Rat(std::max(v.x(), v.y()));
    case NormKind::Matrix: {
      if (!v.is_interior()) throw std::invalid_argument("matrix norm needs an interior vertex");
      auto [lo, up] = bounds(v);
      return norm.a11 * Rat(lo.x()) + norm.a12 * Rat(lo.y()) + norm.a21 * Rat(up.x()) +
             norm.a22 * Rat(up.y());
    }
    case NormKind::Custom:
      return norm.custom(v);
  }
  throw std::logic_error("unreachable");
}

bool norm_le(const NormSpec& norm, const Vertex& v, const Rat& R) {
  SublevelTest test(norm, R);
  if (norm.kind == NormKind::Matrix) {
    if (!v.is_interior()) throw std::invalid_argument("matrix norm needs an interior vertex");
    auto [lo, up] = bounds(v);
    return test.vertex_le(v, lo, up);
  }
  return test.vertex_le(v, v, v);
}

Rat iterated_norm_value(const NormSpec& norm, const Vertex& v, std::size_t n) {
  if (!v.is_interior()) throw std::invalid_argument("iterated norm needs an interior vertex");
  if (!is_coordinate_norm(norm) || (norm.kind == NormKind::PPower && norm.p >= 2)) {
    throw std::domain_error("iterated value needs a rational-valued coordinate norm");
  }
  auto [lo, up] = bounds(v);
  const Int& a1 = fib(n + 1);
  const Int& a2 = fib(n + 2);
  auto vec_value = [&](const Int& wx, const Int& wy) -> Rat {
    switch (norm.kind) {
      case NormKind::Linear:
        return norm.alpha * Rat(wx) + norm.beta * Rat(wy);
      case NormKind::Max:
        return Rat(std::max(wx, wy));
      default:  // p-power with p == 1
        return Rat(wx + wy);
    }
  };
  Rat first = vec_value(a2 * up.x() + a1 * lo.x(), a2 * up.y() + a1 * lo.y());
  Rat second = vec_value(a1 * up.x() + a2 * lo.x(), a1 * up.y() + a2 * lo.y());
  return std::max(first, second);
}

bool iterated_norm_le(const NormSpec& norm, const Vertex& v, std::size_t n, const Rat& R) {
  if (!v.is_interior()) throw std::invalid_argument("iterated norm needs an interior vertex");
  if (!is_coordinate_norm(norm)) {
    throw std::domain_error("iterated membership needs a coordinate norm");
  }
  auto [lo, up] = bounds(v);
  SublevelTest test(norm, R);
  const Int& a1 = fib(n + 1);
  const Int& a2 = fib(n + 2);
  return test.vector_le(a2 * up.x() + a1 * lo.x(), a2 * up.y() + a1 * lo.y()) &&
         test.vector_le(a1 * up.x() + a2 * lo.x(), a1 * up.y() + a2 * lo.y());
}

FareyPath build_c_leq_path(const NormSpec& norm, const Rat& R, std::size_t node_limit) {
  if (norm.kind == NormKind::Linear) {
    return build_linear_path(norm.alpha, norm.beta, R, node_limit);
  }
  SublevelTest test(norm, R);
  return build_path(
      [&](const Vertex& v, const Vertex& lo, const Vertex& up) {
        return test.vertex_le(v, lo, up);
      },
      node_limit);
}

Corona build_c_leq(const NormSpec& norm, const Rat& R, std::size_t node_limit) {
  return Corona(build_c_leq_path(norm, R, node_limit));
}

FareyPath build_iterated_c_leq_path(const NormSpec& norm, const Rat& R, std::size_t n,
                                    std::size_t node_limit) {
  if (!is_coordinate_norm(norm)) {
    throw std::domain_error("iterated membership needs a coordinate norm");
  }
  SublevelTest test(norm, R);
  const Int& a1 = fib(n + 1);
  const Int& a2 = fib(n + 2);
  return build_path(
      [&](const Vertex&, const Vertex& lo, const Vertex& up) {
        return test.vector_le(a2 * up.x() + a1 * lo.x(), a2 * up.y() + a1 * lo.y()) &&
               test.vector_le(a1 * up.x() + a2 * lo.x(), a1 * up.y() + a2 * lo.y());
      },
      node_limit);
}

bool phi_iterate_check(const NormSpec& norm, const Rat& R, std::size_t n,
                       std::size_t node_limit) {
  if (n == 0) return true;
  return phi_iterate_check(build_c_leq(norm, R, node_limit), norm, R, n, node_limit);
}

bool phi_iterate_check(const Corona& c, const NormSpec& norm, const Rat& R,
                       std::size_t n, std::size_t node_limit) {
  if (n == 0) return true;
  return tower_level(c, n) == build_iterated_c_leq_path(norm, R, n, node_limit);
}

bool path_subset(const FareyPath& a, const FareyPath& b) {
  return std::includes(b.interior().begin(), b.interior().end(), a.interior().begin(),
                       a.interior().end(), vertex_real_less);
}

bool sandwich_check(const NormSpec& norm, const Rat& R, std::size_t n,
                    std::size_t node_limit) {
  return sandwich_check(build_c_leq(norm, R, node_limit), norm, R, n, node_limit);
}

bool sandwich_check(const Corona& c, const NormSpec& norm, const Rat& R, std::size_t n,
                    std::size_t node_limit) {
  const FareyPath& mid = tower_level(c, n);
  FareyPath inner = build_c_leq_path(norm, R / Rat(fib(n + 2)), node_limit);
  FareyPath outer = build_c_leq_path(norm, Rat(2) * R / Rat(fib(n + 3)), node_limit);
  return path_subset(inner, mid) && path_subset(mid, outer);
}

namespace {

// Weights with denominators cleared once: with D = ad*bd*rd the scaled weight
// W(v) = A*x + B*y equals D*|v| and RS = D*R, so every floor below is a plain
// integer division.
struct ScaledWeights {
  Int a, b, rs;
  std::vector<Int> w;  // w[i] = W(path.at(i)), endpoints included

  ScaledWeights(const Rat& alpha, const Rat& beta, const Rat& R, const FareyPath& p) {
    const Int ad = denominator(alpha), bd = denominator(beta), rd = denominator(R);
    a = numerator(alpha) * bd * rd;
    b = numerator(beta) * ad * rd;
    rs = numerator(R) * ad * bd;
    w.resize(p.degree() + 1);
    w.front() = a;
    w.back() = b;
    const std::vector<Vertex>& in = p.interior();
    for (std::size_t i = 0; i < in.size(); ++i) w[i + 1] = in[i].x() * a + in[i].y() * b;
  }
};

Int div_clamped(const Int& num, const Int& den) {  // den > 0
  return num <= 0 ? Int(0) : Int(num / den);
}

Int div_floor(const Int& num, const Int& den) {  // den > 0
  Int q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

// Marks which at-indices of p survive into the next level; survivors are a
// subsequence of the interior, and the endpoints always qualify.
std::vector<char> survival_flags(const FareyPath& p, const std::vector<Vertex>& survivors) {
  std::vector<char> keep(p.degree() + 1, 0);
  keep.front() = keep.back() = 1;
  const std::vector<Vertex>& in = p.interior();
  std::size_t sp = 0;
  for (std::size_t i = 0; i < in.size() && sp < survivors.size(); ++i) {
    if (in[i] == survivors[sp]) {
      keep[i + 1] = 1;
      ++sp;
    }
  }
  return keep;
}

}  // namespace

ClosedFormLayer theorem111_lambda(const Rat& alpha, const Rat& beta, const Rat& R,
                                  std::size_t n, const Corona& c) {
  if (n < 1 || n > c.height()) throw std::invalid_argument("layer index out of range");
  const FareyPath& pn = tower_level(c, n);
  const std::size_t deg = pn.degree();
  const ScaledWeights sw(alpha, beta, R, pn);
  const std::vector<char> keep = survival_flags(pn, tower_level(c, n + 1).interior());
  const Int a_n = fib(n), a_n1 = fib(n + 1), a_n2 = fib(n + 2);

  ClosedFormLayer out;
  out.lambda.reserve(deg);
  for (std::size_t i = 0; i < deg; ++i) {
    const Int& wu = sw.w[i];
    const Int& ww = sw.w[i + 1];
    Int neg = 0, pos = 0;
    if (keep[i]) neg = div_clamped(sw.rs - a_n1 * ww - a_n * wu, a_n1 * wu);
    if (keep[i + 1]) pos = div_clamped(sw.rs - a_n1 * wu - a_n * ww, a_n1 * ww);
    assert(neg == 0 || pos == 0);  // fins fill a gap from one side only
    out.lambda.push_back(pos - neg);

    // The k0-free double-floor display; it is claimed only where the entry
    // is nonzero, so compare it exactly there. The run owner's far bound is
    // the opposite endpoint's weight when the owner is itself an endpoint.
    if (neg > 0 || pos > 0) {
      const std::size_t idx = neg > 0 ? i : i + 1;
      const Int& wv = sw.w[idx];
      Int wb;
      if (idx == 0) {
        wb = sw.b;
      } else if (idx == deg) {
        wb = sw.a;
      } else {
        auto bp = bounds_in_path(pn, idx);
        const Vertex& bv = neg > 0 ? bp.second : bp.first;
        wb = bv.x() * sw.a + bv.y() * sw.b;
      }
      Int two = div_floor(sw.rs - a_n1 * wb - a_n * wv, a_n1 * wv) -
                div_floor(sw.rs - a_n2 * wb - a_n1 * wv, a_n2 * wv) - 1;
      if (two != (neg > 0 ? neg : pos)) out.alternate_form_agrees = false;
    }
  }
  return out;
}

Int corollary112_count(const Rat& alpha, const Rat& beta, const Rat& R, std::size_t n,
                       const Corona& c) {
  if (n < 1) throw std::invalid_argument("count level must be >= 1");
  if (n > c.height()) return 1;  // both levels are already the bare edge
  const FareyPath& pn = tower_level(c, n);
  const std::size_t deg = pn.degree();
  const ScaledWeights sw(alpha, beta, R, pn);
  const std::vector<Vertex>& survivors = tower_level(c, n + 1).interior();
  const std::vector<Vertex>& pint = pn.interior();
  const Int a_n = fib(n), a_n1 = fib(n + 1);

  Int count = 2 * Int(deg);
  std::size_t sp = 0;
  for (std::size_t i = 0; i < pint.size() && sp < survivors.size(); ++i) {
    if (pint[i] != survivors[sp]) continue;
    ++sp;
    const Int& wv = sw.w[i + 1];
    count += div_clamped(sw.rs - a_n1 * sw.w[i + 2] - a_n * wv, a_n1 * wv);
    count += div_clamped(sw.rs - a_n1 * sw.w[i] - a_n * wv, a_n1 * wv);
  }
  // Endpoint terms; at the bare edge w[1]/w[degree-1] land on the opposite
  // endpoints, giving the degenerate beta/alpha readings directly.
  count += div_clamped(sw.rs - a_n1 * sw.w[1] - a_n * sw.a, a_n1 * sw.a);
  count += div_clamped(sw.rs - a_n1 * sw.w[deg - 1] - a_n * sw.b, a_n1 * sw.b);
  return count;
}

bool subcorona_transform(const Rat& alpha, const Rat& beta, const Rat& R, const Sl2Word& g,
                         std::size_t node_limit) {
  const Vertex& zg = g.lower();
  const Vertex& ig = g.upper();
  for (const Vertex* t : {&zg, &ig}) {
    if (t->is_interior() && linear_value(alpha, beta, *t) > R) {
      throw std::invalid_argument("transported endpoints must lie in the corona");
    }
  }
  FareyPath whole = build_c_leq_path(NormSpec::linear(alpha, beta), R, node_limit);
  std::vector<Vertex> slice;
  for (const Vertex& v : whole.interior()) {
    if (real_less(zg, v) && real_less(v, ig)) slice.push_back(v);
  }
  Rat ta = linear_value(alpha, beta, zg);
  Rat tb = linear_value(alpha, beta, ig);
  FareyPath transported = build_c_leq_path(NormSpec::linear(ta, tb), R, node_limit);
  std::vector<Vertex> mapped;
  mapped.reserve(transported.interior().size());
  for (const Vertex& w : transported.interior()) mapped.push_back(g.apply(w));
  return slice == mapped;
}

}  // namespace farey
