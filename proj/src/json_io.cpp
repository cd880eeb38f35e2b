#include "qcrystal/json_io.hpp"

namespace qcrystal {

using nlohmann::json;

json to_json(const Word& w) {
  return json{{"letters", w.letters()}, {"rank", w.rank()}};
}

json to_json(const Weight& wt) { return json{{"coords", wt.coords}}; }

json to_json(const StrictPartition& p) { return json{{"parts", p.parts()}}; }

json to_json(const ShiftedShape& s) {
  return json{{"outer", s.outer().parts()}, {"inner", s.inner().parts()}};
}

json to_json(const StandardShiftedTableau& t) {
  json entries = json::array();
  for (int value = 1; value <= static_cast<int>(t.size()); ++value) {
    auto [row, col] = t.cell_of(value);
    entries.push_back(json::array({row, col, value}));
  }
  json out = to_json(t.shape());
  out["entries"] = std::move(entries);
  return out;
}

json to_json(const Ssdt& t) {
  json rows = json::array();
  for (const Word& row : t.rows()) rows.push_back(row.letters());
  return json{{"shape", t.shape().parts()}, {"rows", std::move(rows)}, {"rank", t.rank()}};
}

}  // namespace qcrystal
