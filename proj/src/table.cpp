#include "walklab/table.hpp"

#include <sstream>

#include "json.hpp"

namespace walklab {

std::string LawTable::to_csv(int precision) const {
  std::ostringstream os;
  os << "index,exact,decimal\n";
  for (const Row& row : rows)
    os << row.index << "," << row.exact.to_string() << ","
       << row.exact.to_decimal(precision) << "\n";
  return os.str();
}

std::string LawTable::to_json(int precision) const {
  nlohmann::json j;
  j["label"] = label;
  j["rows"] = nlohmann::json::array();
  for (const Row& row : rows) {
    // decimal emitted as a JSON number parsed from the exact rendering so
    // the two formats agree digit for digit
    j["rows"].push_back({{"index", row.index},
                         {"exact", row.exact.to_string()},
                         {"decimal", std::stod(row.exact.to_decimal(precision))}});
  }
  return j.dump(2);
}

Ratio LawTable::sum() const {
  Ratio s(0);
  for (const Row& row : rows) s += row.exact;
  return s;
}

}  // namespace walklab
