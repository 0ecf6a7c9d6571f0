#pragma once

// JSON and CSV encodings of every result type. Big integers travel as decimal strings.

#include <string>
#include <vector>

#include <json.hpp>

#include "vmvt/congruence.hpp"
#include "vmvt/exponents.hpp"
#include "vmvt/iteration.hpp"
#include "vmvt/mvt_count.hpp"
#include "vmvt/waring.hpp"

namespace vmvt::io {

using nlohmann::json;

json to_json(const BigInt& v);
BigInt big_from_json(const json& j);

json to_json(const Rational& r);  // {"num": "...", "den": "..."}
Rational rational_from_json(const json& j);

/// {op, params, value: {num, den}, provenance}
json value_record(const std::string& op, const json& params, const Rational& value,
                  const std::string& provenance);

/// {op, params, count, elapsed_ms}; elapsed_ms is omitted when `timing` is false.
json to_json(const CountRecord& rec, bool timing = true);
CountRecord count_record_from_json(const json& j);

json to_json(const EtaBound& eta);
json to_json(const S1Result& res);
std::string gtilde_csv(const std::vector<S1Result>& rows);

json to_json(const CongruenceInstance& inst);
json to_json(const EquivalenceClassCensus& census, bool witnesses);
json to_json(const MaxClassCensus& census);
json to_json(const HenselResult& res);
json to_json(const PolyIdentity& id);

json summary_json(const IterationTrace& trace);
std::string trace_csv(const IterationTrace& trace);
json to_json(const ThetaDelta& td);
json to_json(const LambdaCap& cap);

json to_json(const RepCount& rep);
json to_json(const SingularSeriesValue& v);
std::string compare_csv(const std::vector<ComparisonRow>& rows);

}  // namespace vmvt::io
