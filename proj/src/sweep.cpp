#include "syz/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>
#include <tuple>

#include "syz/errors.hpp"

namespace syz {

std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Certified: return "certified";
    case RowStatus::NoFamilyExists: return "NoFamilyExists";
    case RowStatus::Failed: return "failed";
  }
  return "?";
}

std::vector<SweepRow> SweepReport::failures() const {
  std::vector<SweepRow> out;
  for (const auto& row : rows) {
    if (row.status == RowStatus::Failed) out.push_back(row);
  }
  return out;
}

SweepRow run_cell(int N, int d, std::int64_t n) {
  SweepRow row;
  row.N = N;
  row.d = d;
  row.n = n;
  const auto start = std::chrono::steady_clock::now();
  try {
    auto built = dispatch(N, d, n);
    row.route = built.route.describe();
    const auto cert = check_family(built.family);
    row.verdict = cert.verdict;
    row.worst_margin = cert.min_margin();
    const auto expected = expected_verdict(N, d, n);
    if (cert.verdict != expected) {
      row.status = RowStatus::Failed;
      row.message = "expected " + std::string(to_string(expected));
    } else if (N == 1 && is_semistable_p1(built.family) != cert.verdict) {
      row.status = RowStatus::Failed;
      row.message = "splitting type disagrees with the criterion";
    } else if (static_cast<std::int64_t>(built.family.size()) != n || !is_m_primary(built.family)) {
      row.status = RowStatus::Failed;
      row.message = "family has wrong size or is not m-primary";
    } else {
      row.status = RowStatus::Certified;
    }
  } catch (const NoFamilyExists& e) {
    row.status = N == 1 ? RowStatus::NoFamilyExists : RowStatus::Failed;
    row.message = e.what();
  } catch (const Error& e) {
    row.status = RowStatus::Failed;
    row.message = e.what();
  }
  row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

SweepReport run_sweep(const SweepOptions& options) {
  std::vector<std::tuple<int, int, std::int64_t>> cells;
  for (int N = options.N_min; N <= options.N_max; ++N) {
    for (int d = options.d_min; d <= options.d_max; ++d) {
      const auto [lo, hi] = admissible_n(N, d);
      for (auto n = lo; n <= hi; ++n) cells.emplace_back(N, d, n);
    }
  }

  SweepReport report;
  report.options = options;
  report.rows.resize(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < cells.size(); c = next++) {
      const auto [N, d, n] = cells[c];
      report.rows[c] = run_cell(N, d, n);
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  return report;
}

}  // namespace syz
