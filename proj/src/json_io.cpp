#include "gyro/json_io.hpp"

#include "gyro/errors.hpp"

namespace gyro {

namespace {

std::vector<std::string> labels(const FiniteGroup& g) {
  std::vector<std::string> out;
  for (const auto& p : g.elements())
    out.push_back(p.to_cycle_string());
  return out;
}

}  // namespace

TableDocument group_document(const FiniteGroup& g) { return {"group", g.table(), labels(g)}; }

TableDocument loop_document(const FiniteGroup& g, const RightLoopTable& loop) {
  return {"right_loop", loop.table(), labels(g)};
}

nlohmann::json to_json(const TableDocument& doc) {
  const auto n = static_cast<Index>(doc.table.order());
  auto rows = nlohmann::json::array();
  for (Index x = 0; x < n; ++x) {
    auto row = doc.table.row(x);
    rows.push_back(std::vector<Index>(row.begin(), row.end()));
  }
  nlohmann::json j;
  j["kind"] = doc.kind;
  j["order"] = n;
  j["identity"] = doc.table.identity();
  j["elements"] = doc.elements;
  j["table"] = std::move(rows);
  return j;
}

TableDocument table_from_json(const nlohmann::json& j) {
  try {
    TableDocument doc;
    doc.kind = j.at("kind").get<std::string>();
    if (doc.kind != "right_loop" && doc.kind != "group")
      throw ParseError("unknown table kind \"" + doc.kind + "\"");
    const auto n = j.at("order").get<std::size_t>();
    const auto identity = j.at("identity").get<Index>();
    doc.elements = j.at("elements").get<std::vector<std::string>>();
    const auto& rows = j.at("table");
    if (n == 0 || doc.elements.size() != n || !rows.is_array() || rows.size() != n)
      throw ParseError("table dimensions do not match \"order\"");
    std::vector<Index> cells;
    cells.reserve(n * n);
    for (const auto& row : rows) {
      auto values = row.get<std::vector<Index>>();
      if (values.size() != n)
        throw ParseError("table row has the wrong length");
      cells.insert(cells.end(), values.begin(), values.end());
    }
    doc.table = OpTable(n, identity, std::move(cells));
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed table JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid table: ") + e.what());
  }
}

nlohmann::json to_json(const GyroReport& r) {
  nlohmann::json witnesses = nlohmann::json::object();
  for (const auto& [name, w] : r.witnesses)
    witnesses[name] = {{"elements", w.elements}, {"detail", w.detail}};
  return {
      {"right_gyrogroup", r.is_right_gyrogroup()},
      {"right_identity", r.right_identity},
      {"right_inverses", r.right_inverses},
      {"gyrations_exist_unique", r.gyrations_exist_unique},
      {"gyrations_automorphisms", r.gyrations_automorphisms},
      {"gyration_of_inverse_trivial", r.gyration_of_inverse_trivial},
      {"associative", r.associative},
      {"gyration_group_order", r.gyration_group_order},
      {"gyration_group_abelian", r.gyration_group_abelian},
      {"witnesses", std::move(witnesses)},
  };
}

GyroReport report_from_json(const nlohmann::json& j) {
  try {
    GyroReport r;
    r.right_identity = j.at("right_identity").get<bool>();
    r.right_inverses = j.at("right_inverses").get<bool>();
    r.gyrations_exist_unique = j.at("gyrations_exist_unique").get<bool>();
    r.gyrations_automorphisms = j.at("gyrations_automorphisms").get<bool>();
    r.gyration_of_inverse_trivial = j.at("gyration_of_inverse_trivial").get<bool>();
    r.associative = j.at("associative").get<bool>();
    r.gyration_group_order = j.at("gyration_group_order").get<std::size_t>();
    r.gyration_group_abelian = j.at("gyration_group_abelian").get<bool>();
    for (const auto& [name, w] : j.at("witnesses").items())
      r.witnesses[name] = {w.at("elements").get<std::vector<Index>>(), w.at("detail").get<std::string>()};
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report JSON: ") + e.what());
  }
}

}  // namespace gyro
