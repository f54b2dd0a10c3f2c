#include "farey/corona.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace farey {

namespace {

std::vector<FareyPath> build_tower(FareyPath c) {
  std::vector<FareyPath> tower{std::move(c)};
  while (tower.back().degree() > 1) {
    FriezData fd = friez(tower.back());
    if (!is_star(tower.back(), fd)) {
      throw std::domain_error("not a corona: " + tower.back().str() +
                              " is not a star path");
    }
    tower.push_back(phi_path(tower.back(), fd));
  }
  return tower;
}

FareyPath remove_interior(const FareyPath& c, std::size_t idx) {
  std::vector<Vertex> in = c.interior();
  in.erase(in.begin() + static_cast<std::ptrdiff_t>(idx));
  return FareyPath::trusted(std::move(in));
}

FareyPath insert_mediant(const FareyPath& c, std::size_t edge) {
  std::vector<Vertex> in = c.interior();
  in.insert(in.begin() + static_cast<std::ptrdiff_t>(edge - 1),
            mediant(c.at(edge - 1), c.at(edge)));
  return FareyPath::trusted(std::move(in));
}

}  // namespace

bool is_corona(const FareyPath& c) {
  FareyPath cur = c;
  while (cur.degree() > 1) {
    FriezData fd = friez(cur);
    if (!is_star(cur, fd)) return false;
    cur = phi_path(cur, fd);
  }
  return true;
}

Corona::Corona(FareyPath c) : tower_(build_tower(std::move(c))) {}

Dna dna_encode(const Corona& c) {
  Dna d;
  const auto& tower = c.tower();
  for (std::size_t n = c.height(); n >= 1; --n) {
    std::vector<GapDetail> gaps = extract_lambda_detailed(tower[n - 1], friez(tower[n - 1]));
    std::vector<Int> lambda;
    lambda.reserve(gaps.size());
    for (const GapDetail& gd : gaps) lambda.push_back(gd.lambda);
    d.layers.push_back(std::move(lambda));
  }
  return d;
}

Corona dna_decode(const Dna& d) {
  FareyPath c = FareyPath::phi();
  for (const auto& layer : d.layers) {
    if (layer.size() != c.degree()) {
      throw std::invalid_argument("layer of length " + std::to_string(layer.size()) +
                                  " does not fit a path of degree " +
                                  std::to_string(c.degree()));
    }
    c = expand(c, layer);
  }
  return Corona(std::move(c));
}

Corona nu(const Int& m) { return Corona(nu_path(m)); }

Corona zero_dna_corona(std::size_t n) {
  FareyPath c = FareyPath::phi();
  for (std::size_t round = 0; round < n; ++round) {
    c = expand(c, std::vector<Int>(c.degree(), Int(0)));
  }
  return Corona(std::move(c));
}

std::vector<Vertex> closed_points(const Corona& c) {
  FriezData fd = friez(c.path());
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < c.path().interior().size(); ++i) {
    if (fd.n_minus[i] != 0 || fd.n_plus[i] != 0) continue;
    if (is_corona(remove_interior(c.path(), i))) out.push_back(c.path().interior()[i]);
  }
  return out;
}

std::vector<std::size_t> open_edges(const Corona& c) {
  std::vector<std::size_t> out;
  for (std::size_t edge = 1; edge <= c.degree(); ++edge) {
    if (is_corona(insert_mediant(c.path(), edge))) out.push_back(edge);
  }
  return out;
}

long long h0(const Corona& c) {
  const long long n_phi = static_cast<long long>(phi_path(c.path()).interior().size());
  return 1 + n_phi - static_cast<long long>(closed_points(c).size());
}

long long h1(const Corona& c) {
  const long long n_phi = static_cast<long long>(phi_path(c.path()).interior().size());
  return 2 + 2 * n_phi - static_cast<long long>(open_edges(c).size());
}

long long corona_eigenvalue(const Corona& c) {
  return static_cast<long long>(open_edges(c).size()) -
         static_cast<long long>(closed_points(c).size());
}

FormalSum corona_create(const Corona& c) {
  FormalSum out;
  for (std::size_t edge : open_edges(c)) {
    out.add(insert_mediant(c.path(), edge), 1);
  }
  return out;
}

FormalSum corona_annihilate(const Corona& c) {
  FormalSum out;
  FriezData fd = friez(c.path());
  for (std::size_t i = 0; i < c.path().interior().size(); ++i) {
    if (fd.n_minus[i] != 0 || fd.n_plus[i] != 0) continue;
    FareyPath smaller = remove_interior(c.path(), i);
    if (is_corona(smaller)) out.add(smaller, 1);
  }
  return out;
}

FormalSum corona_create(const FormalSum& s) {
  FormalSum out;
  for (const auto& [c, k] : s.terms()) {
    FormalSum part = corona_create(Corona(c));
    for (const auto& [c2, k2] : part.terms()) out.add(c2, k * k2);
  }
  return out;
}

FormalSum corona_annihilate(const FormalSum& s) {
  FormalSum out;
  for (const auto& [c, k] : s.terms()) {
    FormalSum part = corona_annihilate(Corona(c));
    for (const auto& [c2, k2] : part.terms()) out.add(c2, k * k2);
  }
  return out;
}

FormalSum corona_number(const FormalSum& s) {
  FormalSum out = corona_annihilate(corona_create(s));
  out -= corona_create(corona_annihilate(s));
  return out;
}

std::vector<ClosedPointReport> closed_point_reports(const Corona& c) {
  const FareyPath& path = c.path();
  const std::size_t m = path.degree();
  FriezData fd = friez(path);

  auto is_min_pos = [&](std::size_t pos) {
    if (pos == 0 || pos == m) return true;
    return fd.n_minus[pos - 1] > 0 && fd.n_plus[pos - 1] > 0;
  };
  auto strictly_below = [](const Vertex& a, const Vertex& b) {
    return compare(a, b, Order::Tree) == Cmp::Less;
  };
  auto is_midpoint = [](const Vertex& mid, const Vertex& a, const Vertex& b) {
    return 2 * mid.x() == a.x() + b.x() && 2 * mid.y() == a.y() + b.y();
  };

  std::vector<ClosedPointReport> out;
  for (std::size_t i = 0; i < path.interior().size(); ++i) {
    if (fd.n_minus[i] != 0 || fd.n_plus[i] != 0) continue;
    const std::size_t j = i + 1;
    ClosedPointReport rep;
    rep.point = path.interior()[i];
    rep.direct = is_corona(remove_interior(path, i));

    bool exception = false;
    if (is_min_pos(j - 1) && is_min_pos(j + 1)) {
      if (j >= 2) {
        Vertex prev2 = path.at(j - 2), prev = path.at(j - 1), next = path.at(j + 1);
        if (strictly_below(next, prev) && strictly_below(prev, prev2) &&
            !is_midpoint(prev, next, prev2)) {
          exception = true;
        }
      }
      if (!exception && j + 2 <= m) {
        Vertex prev = path.at(j - 1), next = path.at(j + 1), next2 = path.at(j + 2);
        if (strictly_below(prev, next) && strictly_below(next, next2) &&
            !is_midpoint(next, next2, prev)) {
          exception = true;
        }
      }
    }
    rep.neighbor_rule = !exception;
    out.push_back(rep);
  }
  return out;
}

CoronaGraph enumerate_coronas(std::size_t max_degree) {
  if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
  CoronaGraph g;
  g.levels.push_back({Corona::phi()});
  g.parents.push_back({{}});
  while (g.levels.size() < max_degree) {
    std::map<FareyPath, std::vector<std::size_t>, PathLess> next;
    const auto& level = g.levels.back();
    for (std::size_t j = 0; j < level.size(); ++j) {
      for (std::size_t edge : open_edges(level[j])) {
        next[insert_mediant(level[j].path(), edge)].push_back(j);
      }
    }
    std::vector<Corona> coronas;
    std::vector<std::vector<std::size_t>> parents;
    coronas.reserve(next.size());
    parents.reserve(next.size());
    for (auto& [path, from] : next) {
      coronas.emplace_back(path);
      parents.push_back(std::move(from));
    }
    g.levels.push_back(std::move(coronas));
    g.parents.push_back(std::move(parents));
  }
  return g;
}

}  // namespace farey
