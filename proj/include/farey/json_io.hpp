// JSON and CSV codecs for the library types. Integers wider than a machine
// word travel as decimal strings; rationals as "p/q"; field order is fixed so
// identical inputs render byte-identically.
#pragma once

#include "farey/corona.hpp"
#include "farey/equidist.hpp"
#include "farey/norm.hpp"
#include "farey/path.hpp"

#include <string>
#include <vector>

#include "json.hpp"

namespace farey {

using Json = nlohmann::ordered_json;

Json vertex_json(const Vertex& v);             // ["x","y"], decimal strings
Vertex vertex_from_json(const Json& j);

Json path_json(const FareyPath& c);            // {"interior":[["x","y"],...]}
FareyPath path_from_json(const Json& j);

Json dna_json(const Dna& d);                   // {"layers":[[...],...]}, top first
Dna dna_from_json(const Json& j);              // accepts numbers or decimal strings

Json formal_sum_json(const FormalSum& s);      // [{"path":...,"coefficient":...}]

// Norm parameters as rendered by NormSpec::str plus the radius.
Json norm_params_json(const NormSpec& norm, const Rat& r);

// Full build output: parameters, degree, height, interior, d.n.a.
Json build_report_json(const NormSpec& norm, const Rat& r, const Corona& c);

// One grid point of the closed-form layer comparison.
Json layer_report_json(const Rat& alpha, const Rat& beta, const Rat& r, const Corona& c);

// Trend table; decimal columns carry `digits` fractional digits, the two
// scale-factor columns are rendering-only doubles.
std::string trend_csv(const std::vector<TrendRow>& rows, int digits);

// n, numerator, denominator, decimal for the square statistic of c(n).
std::string sn_csv(std::size_t n_max, int digits);

// r, totient prefix sum, interior count, identity flag.
std::string totient_csv(long long r_max);

}  // namespace farey
