#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "farey/corona.hpp"
#include "farey/json_io.hpp"
#include "farey/norm.hpp"

#include <string>
#include <vector>

using namespace farey;

namespace {

Vertex v(long long x, long long y) { return Vertex(Int(x), Int(y)); }

}  // namespace

TEST_CASE("vertex codec round trips and keeps wide integers as strings") {
  const Vertex small = v(3, 5);
  Json j = vertex_json(small);
  CHECK(j.is_array());
  CHECK(j[0] == "3");
  CHECK(j[1] == "5");
  CHECK(vertex_from_json(j) == small);

  // Coordinates near 2^200 survive the string path untouched.
  const Int big = (Int(1) << 200) + 1;
  const Vertex wide(big, Int(1));
  CHECK(vertex_from_json(vertex_json(wide)) == wide);

  // Plain JSON numbers are accepted on input.
  CHECK(vertex_from_json(Json::array({2, 7})) == v(2, 7));

  CHECK_THROWS_AS(vertex_from_json(Json::array({"1"})), std::invalid_argument);
  CHECK_THROWS_AS(vertex_from_json(Json::array({Json::object(), 1})),
                  std::invalid_argument);
}

TEST_CASE("path codec round trips through the interior list") {
  const FareyPath c = build_c_leq_path(NormSpec::linear(1, 1), Rat(6));
  const FareyPath back = path_from_json(path_json(c));
  CHECK(back == c);
  CHECK(path_json(c)["interior"].size() == c.degree() - 1);

  CHECK(path_from_json(Json{{"interior", Json::array()}}) == FareyPath::phi());
  // from_interior re-validates: a non-path vertex set is rejected.
  Json bad{{"interior", Json::array({Json::array({"1", "3"})})}};
  CHECK_THROWS(path_from_json(bad));
}

TEST_CASE("dna codec round trips including mixed number and string entries") {
  const Corona c(build_c_leq_path(NormSpec::linear(1, 1), Rat(9)));
  const Dna d = dna_encode(c);
  const Dna back = dna_from_json(dna_json(d));
  REQUIRE(back.layers.size() == d.layers.size());
  for (std::size_t k = 0; k < d.layers.size(); ++k) CHECK(back.layers[k] == d.layers[k]);
  CHECK(dna_decode(back) == c);

  Dna widelayers;
  widelayers.layers = {{Int(0)}, {-(Int(1) << 90), Int(1) << 90}};
  Json j = dna_json(widelayers);
  CHECK(j["layers"][1][0].is_string());
  Dna wideback = dna_from_json(j);
  CHECK(wideback.layers == widelayers.layers);

  // Small entries serialize as plain integers.
  CHECK(dna_json(d)["layers"].back()[0].is_number_integer());
}

TEST_CASE("build report carries the fixed field order and frozen anchor") {
  const NormSpec norm = NormSpec::linear(1, 1);
  const Corona c(build_c_leq_path(norm, Rat(4)));
  const Json report = build_report_json(norm, Rat(4), c);

  std::vector<std::string> keys;
  for (auto it = report.begin(); it != report.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"params", "degree", "height", "interior", "dna"});

  CHECK(report["degree"] == 6);
  CHECK(report["height"] == 2);
  CHECK(report["interior"].size() == 5);
  CHECK(report["interior"][0] == Json::array({"3", "1"}));
  CHECK(report["interior"][2] == Json::array({"1", "1"}));
  CHECK(report["dna"]["layers"] == Json::parse("[[0],[-1,1]]"));
  CHECK(report["params"]["r"] == "4");

  // Identical inputs give byte-identical text.
  CHECK(report.dump() == build_report_json(norm, Rat(4), c).dump());
}

TEST_CASE("layer report flags agreement between codec and closed form") {
  for (long long r : {3, 7, 19, 44}) {
    const Corona c(build_c_leq_path(NormSpec::linear(1, 2), Rat(r)));
    const Json rep = layer_report_json(Rat(1), Rat(2), Rat(r), c);
    CHECK(rep["closed_form_match"] == true);
    CHECK(rep["degree"] == c.degree());
    CHECK(rep["lambda_layers"].size() == c.height());
    CHECK(rep["params"] == Json{{"alpha", "1"}, {"beta", "2"}, {"r", std::to_string(r)}});
  }
  // A mismatched weight pair must not report a match.
  const Corona c(build_c_leq_path(NormSpec::linear(1, 1), Rat(30)));
  CHECK(layer_report_json(Rat(2), Rat(3), Rat(30), c)["closed_form_match"] == false);
}

TEST_CASE("formal sum serializes one term per path with its coefficient") {
  const Corona c(build_c_leq_path(NormSpec::linear(1, 1), Rat(3)));
  const FormalSum sum = corona_create(c);
  const Json j = formal_sum_json(sum);
  CHECK(j.size() == sum.terms().size());
  long long total = 0;
  for (const Json& term : j) {
    CHECK(term.contains("path"));
    total += term["coefficient"].get<long long>();
  }
  long long direct = 0;
  for (const auto& [path, coeff] : sum.terms()) direct += coeff;
  CHECK(total == direct);
}

TEST_CASE("csv tables carry the documented headers and exact columns") {
  const std::string sn = sn_csv(3, 6);
  CHECK(sn.substr(0, sn.find('\n')) == "n,s_num,s_den,s");
  CHECK(sn.find("1,0,1,0.000000\n") != std::string::npos);
  CHECK(sn.find("2,1,72,0.013888\n") != std::string::npos);
  CHECK(sn.find("3,167,3600,0.046388\n") != std::string::npos);

  const std::string tot = totient_csv(10);
  CHECK(tot.substr(0, tot.find('\n')) == "r,totient_sum,interior,identity");
  CHECK(tot.find("10,32,31,true\n") != std::string::npos);
  // Every row of the identity column reads true.
  CHECK(tot.find("false") == std::string::npos);

  const std::vector<TrendRow> rows = trend_rows(10, 20, 10);
  const std::string trend = trend_csv(rows, 6);
  CHECK(trend.substr(0, trend.find('\n')) ==
        "r,delta1_num,delta1_den,delta2_num,delta2_den,delta1,delta2,"
        "delta1_scaled,delta2_scaled");
  CHECK(std::count(trend.begin(), trend.end(), '\n') == 3);
  CHECK(trend == trend_csv(trend_rows(10, 20, 10), 6));
  const std::string first = trend.substr(trend.find('\n') + 1);
  CHECK(first.substr(0, 3) == "10,");
}
