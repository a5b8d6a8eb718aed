#pragma once

#include <string>
#include <vector>

#include "walklab/numerics.hpp"

namespace walklab {

// Labeled (index -> exact value) table; the output shape of every
// distribution or table reproduction. Decimal rendering happens at
// serialization time, once, at the configured precision.
struct LawTable {
  struct Row {
    long index;
    Ratio exact;
  };

  std::string label;
  std::vector<Row> rows;

  // CSV with header "index,exact,decimal".
  std::string to_csv(int precision) const;
  // {"label":..., "rows":[{"index":..., "exact":"a/b", "decimal":...}]}
  std::string to_json(int precision) const;

  Ratio sum() const;
};

}  // namespace walklab
