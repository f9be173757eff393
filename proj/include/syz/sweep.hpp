#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "syz/constructions.hpp"
#include "syz/criterion.hpp"

namespace syz {

struct SweepOptions {
  int N_min = 1;
  int N_max = 4;
  int d_min = 2;
  int d_max = 6;
  unsigned jobs = 1;
};

enum class RowStatus { Certified, NoFamilyExists, Failed };

struct SweepRow {
  int N = 0;
  int d = 0;
  std::int64_t n = 0;
  RowStatus status = RowStatus::Failed;
  std::string route;
  std::optional<Verdict> verdict;
  std::optional<std::int64_t> worst_margin;
  std::string message;
  double wall_ms = 0.0;
};

struct SweepReport {
  SweepOptions options;
  std::vector<SweepRow> rows;  // (N, d, n) ascending

  std::vector<SweepRow> failures() const;
};

std::string_view to_string(RowStatus s);

/// Dispatch and certify one (N, d, n). Never throws for construction errors; they
/// land in the row status.
SweepRow run_cell(int N, int d, std::int64_t n);

/// Every admissible n for every (N, d) in the grid. Cells run on `jobs` worker
/// threads and are merged back into canonical order.
SweepReport run_sweep(const SweepOptions& options);

}  // namespace syz
