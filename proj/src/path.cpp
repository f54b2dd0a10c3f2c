#include "farey/path.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace farey {

namespace {

// Largest n with nbr - n*v nonnegative: along a path, the fin index of a
// neighbour on v's fin (0 when the neighbour is the bound itself).
Int fin_steps(const Vertex& nbr, const Vertex& v) {
  return std::min(nbr.x() / v.x(), nbr.y() / v.y());
}

}  // namespace

FareyPath FareyPath::from_interior(std::vector<Vertex> interior) {
  for (const Vertex& v : interior) {
    if (v.is_endpoint()) {
      throw std::invalid_argument("endpoint in path interior: " + v.str());
    }
  }
  std::sort(interior.begin(), interior.end(), real_less);
  for (std::size_t i = 1; i < interior.size(); ++i) {
    if (interior[i - 1] == interior[i]) {
      throw std::invalid_argument("duplicate vertex: " + interior[i].str());
    }
  }
  std::set<Vertex, VertexLex> present(interior.begin(), interior.end());
  for (const Vertex& v : interior) {
    if (v.is_root()) continue;
    Vertex m = mother_of(v);
    if (present.count(m) == 0) {
      throw std::invalid_argument("not tree-closed: missing mother " + m.str() +
                                  " of " + v.str());
    }
  }
  Vertex prev = Vertex::zero();
  for (std::size_t i = 0; i <= interior.size(); ++i) {
    Vertex cur = i < interior.size() ? interior[i] : Vertex::infinity();
    if (det(prev, cur) != 1) {
      throw std::invalid_argument("consecutive vertices " + prev.str() + ", " +
                                  cur.str() + " are not neighbours");
    }
    prev = cur;
  }
  FareyPath c;
  c.interior_ = std::move(interior);
  return c;
}

FareyPath FareyPath::trusted(std::vector<Vertex> sorted_interior) {
  FareyPath c;
  c.interior_ = std::move(sorted_interior);
  return c;
}

Vertex FareyPath::at(std::size_t i) const {
  if (i == 0) return Vertex::zero();
  if (i == degree()) return Vertex::infinity();
  if (i > degree()) throw std::out_of_range("path index out of range");
  return interior_[i - 1];
}

std::string FareyPath::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < interior_.size(); ++i) {
    if (i) s += ",";
    s += interior_[i].str();
  }
  return s + "}";
}

bool PathLess::operator()(const FareyPath& a, const FareyPath& b) const {
  return std::lexicographical_compare(a.interior().begin(), a.interior().end(),
                                      b.interior().begin(), b.interior().end(),
                                      VertexLex{});
}

FriezData friez(const FareyPath& c) {
  const auto& in = c.interior();
  const std::size_t m = c.degree();
  FriezData out;
  out.n_minus.reserve(in.size());
  out.n_plus.reserve(in.size());
  out.f.assign(m + 1, Int(0));

  // Machine-word lane: with every coordinate below 2^31 all the divisions,
  // midpoint sums and f entries fit in 64 bits, which is the common case for
  // norm-bounded builds where this runs once per tower level.
  constexpr long long kSmall = 1LL << 31;
  bool small = true;
  for (const Vertex& v : in) {
    if (v.x() >= kSmall || v.y() >= kSmall) {
      small = false;
      break;
    }
  }
  if (small) {
    long long px = 1, py = 0;  // zero
    long long vx = 0, vy = 0;
    long long f0 = 0, fm = 0;
    for (std::size_t i = 0; i < in.size(); ++i) {
      if (i == 0) {
        vx = in[0].x().convert_to<long long>();
        vy = in[0].y().convert_to<long long>();
      }
      long long nx = 0, ny = 1;  // infinity
      if (i + 1 < in.size()) {
        nx = in[i + 1].x().convert_to<long long>();
        ny = in[i + 1].y().convert_to<long long>();
      }
      const long long nm = std::min(px / vx, py / vy);
      const long long np = std::min(nx / vx, ny / vy);
      if ((nm == 0) != (np == 0) && (2 * vx != px + nx || 2 * vy != py + ny)) {
        out.fin_midpoints = false;
      }
      out.f[i + 1] = 1 + nm + np;
      out.n_minus.push_back(Int(nm));
      out.n_plus.push_back(Int(np));
      if (vy == 1) ++f0;
      if (vx == 1) ++fm;
      px = vx;
      py = vy;
      vx = nx;
      vy = ny;
    }
    out.f[0] = f0;
    out.f[m] = fm;
    return out;
  }

  for (std::size_t i = 0; i < in.size(); ++i) {
    const Vertex& prev = i == 0 ? Vertex::zero() : in[i - 1];
    const Vertex& next = i + 1 == in.size() ? Vertex::infinity() : in[i + 1];
    Int nm = fin_steps(prev, in[i]);
    Int np = fin_steps(next, in[i]);
    if ((nm == 0) != (np == 0) &&
        (2 * in[i].x() != prev.x() + next.x() || 2 * in[i].y() != prev.y() + next.y())) {
      out.fin_midpoints = false;
    }
    out.f[i + 1] = 1 + nm + np;
    out.n_minus.push_back(std::move(nm));
    out.n_plus.push_back(std::move(np));
    if (in[i].y() == 1) out.f[0] += 1;
    if (in[i].x() == 1) out.f[m] += 1;
  }
  return out;
}

std::vector<Vertex> maxima(const FareyPath& c) {
  FriezData fd = friez(c);
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < c.interior().size(); ++i) {
    if (fd.n_minus[i] == 0 && fd.n_plus[i] == 0) out.push_back(c.interior()[i]);
  }
  return out;
}

std::vector<Vertex> minima(const FareyPath& c) {
  FareyPath phi = phi_path(c);
  std::vector<Vertex> out{Vertex::zero()};
  for (const Vertex& v : phi.interior()) out.push_back(v);
  out.push_back(Vertex::infinity());
  return out;
}

FareyPath phi_path(const FareyPath& c) { return phi_path(c, friez(c)); }

FareyPath phi_path(const FareyPath& c, const FriezData& fd) {
  std::vector<Vertex> keep;
  for (std::size_t i = 0; i < c.interior().size(); ++i) {
    if (fd.n_minus[i] > 0 && fd.n_plus[i] > 0) keep.push_back(c.interior()[i]);
  }
  return FareyPath::trusted(std::move(keep));
}

std::pair<Vertex, Vertex> bounds_in_path(const FareyPath& c, std::size_t i) {
  if (i == 0 || i >= c.degree()) throw std::out_of_range("not an interior index");
  Vertex v = c.at(i);
  Vertex prev = c.at(i - 1), next = c.at(i + 1);
  Int nm = fin_steps(prev, v), np = fin_steps(next, v);
  return {Vertex(prev.x() - nm * v.x(), prev.y() - nm * v.y()),
          Vertex(next.x() - np * v.x(), next.y() - np * v.y())};
}

bool is_star(const FareyPath& c) { return friez(c).fin_midpoints; }

bool is_star(const FareyPath&, const FriezData& fd) { return fd.fin_midpoints; }

FareyPath nu_path(const Int& m) {
  Int a = abs(m);
  std::vector<Vertex> in;
  if (m >= 0) {
    for (Int k = 1; k <= a + 1; ++k) in.emplace_back(1, k);
  } else {
    for (Int k = a + 1; k >= 1; --k) in.emplace_back(k, 1);
  }
  return FareyPath::trusted(std::move(in));
}

FareyPath operad_compose(const FareyPath& c, const std::vector<FareyPath>& blocks) {
  if (blocks.size() != c.degree()) {
    throw std::invalid_argument("block count mismatch: expected one block per edge");
  }
  std::vector<Vertex> out;
  for (std::size_t i = 1; i <= c.degree(); ++i) {
    Vertex lo = c.at(i - 1), hi = c.at(i);
    for (const Vertex& w : blocks[i - 1].interior()) {
      out.emplace_back(w.x() * lo.x() + w.y() * hi.x(),
                       w.x() * lo.y() + w.y() * hi.y());
    }
    if (i < c.degree()) out.push_back(hi);
  }
  return FareyPath::trusted(std::move(out));
}

FareyPath expand(const FareyPath& c, const std::vector<Int>& nu) {
  if (nu.size() != c.degree()) {
    throw std::invalid_argument("expansion vector needs one entry per edge");
  }
  std::vector<Vertex> out;
  for (std::size_t i = 1; i <= c.degree(); ++i) {
    Vertex lo = c.at(i - 1), hi = c.at(i);
    const Int& n = nu[i - 1];
    if (n >= 0) {
      for (Int k = 1; k <= n + 1; ++k) {
        out.emplace_back(lo.x() + k * hi.x(), lo.y() + k * hi.y());
      }
    } else {
      for (Int k = -n + 1; k >= 1; --k) {
        out.emplace_back(hi.x() + k * lo.x(), hi.y() + k * lo.y());
      }
    }
    if (i < c.degree()) out.push_back(hi);
  }
  return FareyPath::trusted(std::move(out));
}

std::vector<GapDetail> extract_lambda_detailed(const FareyPath& c) {
  return extract_lambda_detailed(c, friez(c));
}

std::vector<GapDetail> extract_lambda_detailed(const FareyPath& c, const FriezData& fd) {
  if (!is_star(c, fd)) throw std::domain_error("not a star path: " + c.str());
  const std::size_t m = c.degree();

  std::vector<std::size_t> minpos{0};
  for (std::size_t i = 0; i < c.interior().size(); ++i) {
    if (fd.n_minus[i] > 0 && fd.n_plus[i] > 0) minpos.push_back(i + 1);
  }
  minpos.push_back(m);

  std::vector<GapDetail> gaps;
  for (std::size_t j = 1; j < minpos.size(); ++j) {
    const std::size_t u = minpos[j - 1], w = minpos[j];
    const std::size_t g = w - u - 1;
    GapDetail gd;
    gd.edge = j;
    if (g == 0) throw std::domain_error("adjacent minima in a star path");
    if (g == 1) {
      gaps.push_back(gd);
      continue;
    }
    std::size_t leaf = 0;
    int leaves = 0;
    for (std::size_t q = u + 1; q < w; ++q) {
      if (fd.n_minus[q - 1] == 0 && fd.n_plus[q - 1] == 0) {
        leaf = q;
        ++leaves;
      }
    }
    if (leaves != 1) throw std::domain_error("gap without a single leaf");
    const Int len(g - 1);
    if (leaf == u + 1) {
      gd.lambda = -len;
      gd.owner = c.at(u);
      gd.other = c.at(w);
      gd.side = FinSide::Plus;
    } else if (leaf + 1 == w) {
      gd.lambda = len;
      gd.owner = c.at(w);
      gd.other = c.at(u);
      gd.side = FinSide::Minus;
    } else {
      throw std::domain_error("leaf not adjacent to a minimum");
    }
    auto fi = fin_index(gd.owner, gd.other);
    gd.k0 = (fi && fi->first == gd.side) ? fi->second : Int(0);
    gd.k1 = gd.k0 + len + 1;
    gaps.push_back(gd);
  }
  return gaps;
}

std::pair<FareyPath, std::vector<Int>> extract_lambda(const FareyPath& c) {
  FriezData fd = friez(c);
  std::vector<GapDetail> gaps = extract_lambda_detailed(c, fd);
  std::vector<Int> lambda;
  lambda.reserve(gaps.size());
  for (const GapDetail& gd : gaps) lambda.push_back(gd.lambda);
  return {phi_path(c, fd), std::move(lambda)};
}

FormalSum FormalSum::single(const FareyPath& c, long long coeff) {
  FormalSum s;
  s.add(c, coeff);
  return s;
}

void FormalSum::add(const FareyPath& c, long long coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(c, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

FormalSum& FormalSum::operator+=(const FormalSum& rhs) {
  for (const auto& [c, k] : rhs.terms_) add(c, k);
  return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& rhs) {
  for (const auto& [c, k] : rhs.terms_) add(c, -k);
  return *this;
}

FormalSum create(const FareyPath& c) {
  FormalSum out;
  for (std::size_t i = 1; i <= c.degree(); ++i) {
    std::vector<Vertex> in = c.interior();
    in.insert(in.begin() + static_cast<std::ptrdiff_t>(i - 1), mediant(c.at(i - 1), c.at(i)));
    out.add(FareyPath::trusted(std::move(in)), 1);
  }
  return out;
}

FormalSum annihilate(const FareyPath& c) {
  FormalSum out;
  FriezData fd = friez(c);
  for (std::size_t i = 0; i < c.interior().size(); ++i) {
    if (fd.n_minus[i] == 0 && fd.n_plus[i] == 0) {
      std::vector<Vertex> in = c.interior();
      in.erase(in.begin() + static_cast<std::ptrdiff_t>(i));
      out.add(FareyPath::trusted(std::move(in)), 1);
    }
  }
  return out;
}

FormalSum create(const FormalSum& s) {
  FormalSum out;
  for (const auto& [c, k] : s.terms()) {
    FormalSum part = create(c);
    for (const auto& [c2, k2] : part.terms()) out.add(c2, k * k2);
  }
  return out;
}

FormalSum annihilate(const FormalSum& s) {
  FormalSum out;
  for (const auto& [c, k] : s.terms()) {
    FormalSum part = annihilate(c);
    for (const auto& [c2, k2] : part.terms()) out.add(c2, k * k2);
  }
  return out;
}

FormalSum number(const FormalSum& s) {
  FormalSum out = annihilate(create(s));
  out -= create(annihilate(s));
  return out;
}

std::vector<std::vector<FareyPath>> enumerate_paths(std::size_t max_degree) {
  if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
  std::vector<std::vector<FareyPath>> levels{{FareyPath::phi()}};
  while (levels.size() < max_degree) {
    std::set<FareyPath, PathLess> next;
    for (const FareyPath& c : levels.back()) {
      FormalSum up = create(c);
      for (const auto& [bigger, k] : up.terms()) next.insert(bigger);
    }
    levels.emplace_back(next.begin(), next.end());
  }
  return levels;
}

}  // namespace farey
