#pragma once

#include <json.hpp>

#include "tverberg/index.hpp"

namespace tverberg {

/// {"config", "bound", "candidates", "count", "signed_sum", "theorem1_pass",
///  "theorem2_pass", "degenerate", "failures",
///  "entries": [{"partition", "sign", "witness_point"}]}
nlohmann::json report_to_json(const IndexReport& report);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::json bigint_to_json(const BigInt& value);

}  // namespace tverberg
