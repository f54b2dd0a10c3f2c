#include "farey/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace farey {

namespace {

Json int_json(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

std::string double_str(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

Json vertex_json(const Vertex& v) { return Json::array({v.x().str(), v.y().str()}); }

Vertex vertex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("a vertex is a two-element array");
  }
  return Vertex(int_from_json(j[0]), int_from_json(j[1]));
}

Json path_json(const FareyPath& c) {
  Json interior = Json::array();
  for (const Vertex& v : c.interior()) interior.push_back(vertex_json(v));
  return Json{{"interior", std::move(interior)}};
}

FareyPath path_from_json(const Json& j) {
  std::vector<Vertex> in;
  for (const Json& v : j.at("interior")) in.push_back(vertex_from_json(v));
  return FareyPath::from_interior(std::move(in));
}

Json dna_json(const Dna& d) {
  Json layers = Json::array();
  for (const auto& layer : d.layers) {
    Json row = Json::array();
    for (const Int& entry : layer) row.push_back(int_json(entry));
    layers.push_back(std::move(row));
  }
  return Json{{"layers", std::move(layers)}};
}

Dna dna_from_json(const Json& j) {
  Dna d;
  for (const Json& row : j.at("layers")) {
    std::vector<Int> layer;
    for (const Json& entry : row) layer.push_back(int_from_json(entry));
    d.layers.push_back(std::move(layer));
  }
  return d;
}

Json formal_sum_json(const FormalSum& s) {
  Json out = Json::array();
  for (const auto& [path, coeff] : s.terms()) {
    out.push_back(Json{{"path", path_json(path)}, {"coefficient", coeff}});
  }
  return out;
}

Json norm_params_json(const NormSpec& norm, const Rat& r) {
  return Json{{"norm", norm.str()}, {"r", rat_string(r)}};
}

Json build_report_json(const NormSpec& norm, const Rat& r, const Corona& c) {
  Json report{{"params", norm_params_json(norm, r)},
              {"degree", c.degree()},
              {"height", c.height()}};
  report["interior"] = path_json(c.path())["interior"];
  report["dna"] = dna_json(dna_encode(c));
  return report;
}

Json layer_report_json(const Rat& alpha, const Rat& beta, const Rat& r, const Corona& c) {
  const Dna d = dna_encode(c);
  bool match = true;
  for (std::size_t n = 1; n <= c.height(); ++n) {
    const ClosedFormLayer cf = theorem111_lambda(alpha, beta, r, n, c);
    if (cf.lambda != d.layers[c.height() - n] || !cf.alternate_form_agrees) match = false;
  }
  Json layers = Json::array();
  for (const auto& layer : d.layers) {
    Json row = Json::array();
    for (const Int& entry : layer) row.push_back(int_json(entry));
    layers.push_back(std::move(row));
  }
  return Json{{"params", Json{{"alpha", rat_string(alpha)},
                              {"beta", rat_string(beta)},
                              {"r", rat_string(r)}}},
              {"degree", c.degree()},
              {"lambda_layers", std::move(layers)},
              {"closed_form_match", match}};
}

std::string trend_csv(const std::vector<TrendRow>& rows, int digits) {
  std::string out =
      "r,delta1_num,delta1_den,delta2_num,delta2_den,delta1,delta2,"
      "delta1_scaled,delta2_scaled\n";
  for (const TrendRow& row : rows) {
    const double d1 = row.delta1.convert_to<double>();
    const double d2 = row.delta2.convert_to<double>();
    const double r = static_cast<double>(row.r);
    out += std::to_string(row.r);
    out += ',' + numerator(row.delta1).str() + ',' + denominator(row.delta1).str();
    out += ',' + numerator(row.delta2).str() + ',' + denominator(row.delta2).str();
    out += ',' + decimal_string(row.delta1, digits) + ',' + decimal_string(row.delta2, digits);
    out += ',' + double_str(d1 / (std::sqrt(r) * std::log(r)));
    out += ',' + double_str(d2 * r / std::log(r));
    out += '\n';
  }
  return out;
}

std::string sn_csv(std::size_t n_max, int digits) {
  std::string out = "n,s_num,s_den,s\n";
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Rat s = s_n(n);
    out += std::to_string(n) + ',' + numerator(s).str() + ',' + denominator(s).str() +
           ',' + decimal_string(s, digits) + '\n';
  }
  return out;
}

std::string totient_csv(long long r_max) {
  const std::vector<long long> sums = totient_prefix_sums(r_max);
  std::string out = "r,totient_sum,interior,identity\n";
  long long interior = 0;
  for (long long r = 1; r <= r_max; ++r) {
    for (long long x = 1; x < r; ++x) {
      if (std::gcd(x, r - x) == 1) ++interior;
    }
    out += std::to_string(r) + ',' + std::to_string(sums[r]) + ',' +
           std::to_string(interior) + ',' +
           (sums[r] == 1 + interior ? "true" : "false") + '\n';
  }
  return out;
}

}  // namespace farey
