#include "tverberg/report_io.hpp"

#include "tverberg/config_io.hpp"

namespace tverberg {

using nlohmann::json;

json bigint_to_json(const BigInt& value) {
  if (value.fits_slong_p()) return json(value.get_si());
  return json(value.get_str());
}

json report_to_json(const IndexReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    json point = json::array();
    for (const auto& x : e.witness.point) point.push_back(format_rational(x));
    entries.push_back({{"partition", format_partition(e.partition)}, {"sign", e.sign}, {"witness_point", point}});
  }
  json doc;
  doc["config"] = config_to_json(report.config);
  doc["bound"] = bigint_to_json(report.bound);
  doc["candidates"] = report.candidates;
  doc["count"] = report.count;
  doc["signed_sum"] = report.signed_sum;
  doc["theorem1_pass"] = report.theorem1_pass;
  doc["theorem2_pass"] = report.theorem2_pass;
  doc["degenerate"] = report.degenerate;
  doc["failures"] = report.failures;
  doc["entries"] = std::move(entries);
  return doc;
}

}  // namespace tverberg
