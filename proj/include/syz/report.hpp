#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "syz/constructions.hpp"
#include "syz/criterion.hpp"
#include "syz/inequalities.hpp"
#include "syz/sweep.hpp"

namespace syz {

using Json = nlohmann::ordered_json;

std::string to_decimal(const Rational& value);

Json to_json(const Monomial& m);
Json to_json(const GcdWitness& w);

/// {verdict, N, d, n, worst, witness_count, ...}; `route` is added when given.
Json certificate_json(const StabilityCertificate& cert, const std::optional<std::string>& route = std::nullopt,
                      bool include_witnesses = false);

/// {function, grid, min, argmin, violations, ...}
Json sweep_summary_json(const SweepSummary& summary);

Json sweep_report_json(const SweepReport& report, bool include_timing = true);

/// Human-readable renderings for the CLI.
std::string certificate_text(const StabilityCertificate& cert, const std::optional<std::string>& route);
std::string sweep_summary_text(const SweepSummary& summary);
std::string sweep_report_text(const SweepReport& report);

}  // namespace syz
