#pragma once

#include <string>
#include <vector>

#include "zetalab/precision.hpp"

namespace zetalab {

/// A place where the implemented, oracle-verified formula departs from the
/// published display of the same identity.
struct ErrataEntry {
  std::string id;
  std::string subject;
  std::string published;
  std::string implemented;
  /// Evidence computed at call time (exact differences, residuals).
  std::string check;
};

std::vector<ErrataEntry> errata_table(const PrecisionContext& ctx);

}  // namespace zetalab
