#pragma once

#include <json.hpp>

#include "qcrystal/core.hpp"
#include "qcrystal/tableaux.hpp"

namespace qcrystal {

nlohmann::json to_json(const Word& w);
nlohmann::json to_json(const Weight& wt);
nlohmann::json to_json(const StrictPartition& p);
nlohmann::json to_json(const ShiftedShape& s);
nlohmann::json to_json(const StandardShiftedTableau& t);
nlohmann::json to_json(const Ssdt& t);

}  // namespace qcrystal
