#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gyro/finite_group.hpp"
#include "gyro/loop.hpp"
#include "gyro/op_table.hpp"
#include "gyro/verify.hpp"

namespace gyro {

/// {"kind": "right_loop" | "group", "order": n, "identity": i,
///  "elements": [cycle strings], "table": [[row of indices], ...]}
struct TableDocument {
  std::string kind;
  OpTable table;
  std::vector<std::string> elements;
};

TableDocument group_document(const FiniteGroup& g);
TableDocument loop_document(const FiniteGroup& g, const RightLoopTable& loop);

nlohmann::json to_json(const TableDocument& doc);
/// Throws ParseError on schema violations.
TableDocument table_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GyroReport& report);
GyroReport report_from_json(const nlohmann::json& j);

}  // namespace gyro
