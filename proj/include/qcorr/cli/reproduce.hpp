#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qcorr::cli {

/// One line of the worked-example reproduction table.
struct ReproRow {
  std::string id;
  std::string reference;  ///< which worked example or claim the row checks
  bool passed = false;
  bool asserted = true;   ///< false for rows that only report a number
  std::string detail;
};

struct ReproduceOptions {
  /// Replaces the tolerance of every row that compares against a tolerance.
  std::optional<double> tol;
  /// Run only rows whose id is listed (all rows when empty).
  std::vector<std::string> only;
};

/// Row ids with their references, in execution order.
std::vector<ReproRow> list_reproduction_rows();

std::vector<ReproRow> run_reproduction(const ReproduceOptions& options = {});

}  // namespace qcorr::cli
