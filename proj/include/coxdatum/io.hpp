#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "coxdatum/classical.hpp"
#include "coxdatum/cone.hpp"
#include "coxdatum/roots.hpp"

namespace coxdatum {

using json = nlohmann::ordered_json;

/// Reads the datum schema; the result is not validated yet.
CoxeterDatum parse_datum(std::string_view text);
CoxeterDatum parse_datum(const json& doc);
CoxeterDatum load_datum(const std::string& path);

/// Overrides the float epsilon of a parsed datum (exact data are returned as is).
CoxeterDatum with_epsilon(const CoxeterDatum& d, double epsilon);

json to_json(const Scalar& x);
json to_json(const Vec& v);
Scalar scalar_from_json(const json& j, const Field& field);
Vec vec_from_json(const json& j, const Field& field);

json to_json(const CoxeterDatum& d);
json coxeter_to_json(const CoxeterMatrix& m);

json word_to_json(const CoxeterDatum& d, const GroupWord& w);
GroupWord word_from_json(const CoxeterDatum& d, const json& j);

json to_json(const CoxeterDatum& d, const ValidationReport& report);

json to_json(const CoxeterDatum& d, const Root& root);
Root root_from_json(const CoxeterDatum& d, const json& j);
json to_json(const CoxeterDatum& d, const RootTable& table);
RootTable table_from_json(const CoxeterDatum& d, const json& j);
std::string table_to_csv(const CoxeterDatum& d, const RootTable& table);

json to_json(const CoxeterDatum& d, const RootTable& table, const std::vector<ScalarChain>& chains);

json to_json(const CoxeterDatum& d, const ComparisonReport& report, const RootTable& table);
std::string report_to_csv(const CoxeterDatum& d, const ComparisonReport& report, const RootTable& table);

json to_json(const CoxeterDatum& d, const ConeVerdict& verdict);
ConeVerdict verdict_from_json(const CoxeterDatum& d, const json& j);
json to_json(const CoxeterDatum& d, const Refutation& refutation);
json to_json(const CoxeterDatum& d, const Rank2DualCones& cones);

/// "p/q" in exact mode, shortest decimal otherwise.
std::string csv_scalar(const Scalar& x);
std::string csv_vector(const Vec& v);

}  // namespace coxdatum
