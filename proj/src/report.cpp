#include "syz/report.hpp"

#include <iomanip>
#include <sstream>

namespace syz {

std::string to_decimal(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Json to_json(const Monomial& m) {
  Json out = Json::array();
  for (int e : m.exponents()) out.push_back(e);
  return out;
}

Json to_json(const GcdWitness& w) {
  return Json{{"g", to_json(w.g)}, {"d_J", w.gcd_degree}, {"k", w.k}, {"margin", w.margin}};
}

Json certificate_json(const StabilityCertificate& cert, const std::optional<std::string>& route,
                      bool include_witnesses) {
  Json out;
  out["verdict"] = std::string(to_string(cert.verdict));
  out["n"] = cert.n;
  out["d"] = cert.d;
  out["N"] = cert.N;
  out["worst"] = cert.worst ? to_json(*cert.worst) : Json(nullptr);
  out["witness_count"] = cert.witnesses.size();
  out["primary"] = cert.primary_check;
  out["rank_one"] = cert.rank_one;
  out["method"] = cert.method;
  out["criterion_scope"] = "sufficient";
  if (route) out["route"] = *route;
  if (include_witnesses) {
    Json ws = Json::array();
    for (const auto& w : cert.witnesses) ws.push_back(to_json(w));
    out["witnesses"] = std::move(ws);
  }
  return out;
}

Json sweep_summary_json(const SweepSummary& s) {
  Json out;
  out["function"] = std::string(to_string(s.function));
  out["grid"] = Json{{"N", {s.grid.N_min, s.grid.N_max}}, {"d", {s.grid.d_min, s.grid.d_max}}};
  if (s.function == InequalityFunction::P) {
    out["grid"]["samples"] = s.grid.samples;
    out["grid"]["seed"] = s.grid.seed;
  }
  out["requirement"] = std::string(to_string(s.requirement));
  out["points"] = s.points;
  out["min"] = s.min ? Json(to_decimal(*s.min)) : Json(nullptr);
  out["argmin"] = s.argmin;
  out["violations"] = s.violations;
  return out;
}

Json sweep_report_json(const SweepReport& report, bool include_timing) {
  auto row_json = [&](const SweepRow& row) {
    Json r;
    r["N"] = row.N;
    r["d"] = row.d;
    r["n"] = row.n;
    r["status"] = std::string(to_string(row.status));
    r["route"] = row.route;
    r["verdict"] = row.verdict ? Json(std::string(to_string(*row.verdict))) : Json(nullptr);
    r["worst_margin"] = row.worst_margin ? Json(*row.worst_margin) : Json(nullptr);
    if (!row.message.empty()) r["message"] = row.message;
    if (include_timing) r["wall_ms"] = row.wall_ms;
    return r;
  };
  const auto& o = report.options;
  Json out;
  out["grid"] = Json{{"N", {o.N_min, o.N_max}}, {"d", {o.d_min, o.d_max}}};
  Json rows = Json::array();
  for (const auto& row : report.rows) rows.push_back(row_json(row));
  Json failures = Json::array();
  for (const auto& row : report.failures()) failures.push_back(row_json(row));
  out["rows"] = std::move(rows);
  out["failures"] = std::move(failures);
  return out;
}

std::string certificate_text(const StabilityCertificate& cert, const std::optional<std::string>& route) {
  std::ostringstream os;
  os << "verdict:   " << to_string(cert.verdict) << '\n';
  os << "N d n:     " << cert.N << ' ' << cert.d << ' ' << cert.n << '\n';
  if (route) os << "route:     " << *route << '\n';
  os << "method:    " << cert.method << (cert.rank_one ? " (rank one)" : "") << '\n';
  os << "witnesses: " << cert.witnesses.size() << '\n';
  if (cert.worst) {
    os << "worst:     g=" << cert.worst->g << " d_J=" << cert.worst->gcd_degree << " k=" << cert.worst->k
       << " margin=" << cert.worst->margin << '\n';
  } else {
    os << "worst:     none (no gcd of positive degree is shared)\n";
  }
  return os.str();
}

std::string sweep_summary_text(const SweepSummary& s) {
  std::ostringstream os;
  os << to_string(s.function) << ": " << s.points << " points, requirement " << to_string(s.requirement)
     << ", violations " << s.violations;
  if (s.min) {
    os << ", min " << to_decimal(*s.min) << " at (";
    for (std::size_t i = 0; i < s.argmin.size(); ++i) os << (i ? "," : "") << s.argmin[i];
    os << ')';
  }
  os << '\n';
  return os.str();
}

std::string sweep_report_text(const SweepReport& report) {
  std::ostringstream os;
  os << std::left << std::setw(3) << "N" << std::setw(4) << "d" << std::setw(6) << "n" << std::setw(16)
     << "status" << std::setw(21) << "verdict" << std::setw(8) << "margin" << "route\n";
  for (const auto& row : report.rows) {
    os << std::setw(3) << row.N << std::setw(4) << row.d << std::setw(6) << row.n << std::setw(16)
       << to_string(row.status) << std::setw(21) << (row.verdict ? to_string(*row.verdict) : "-") << std::setw(8)
       << (row.worst_margin ? std::to_string(*row.worst_margin) : "-")
       << (row.route.empty() ? row.message : row.route) << '\n';
  }
  const auto failures = report.failures();
  os << report.rows.size() << " rows, " << failures.size() << " failures\n";
  for (const auto& f : failures) {
    os << "FAILED (" << f.N << ',' << f.d << ',' << f.n << "): " << f.message << '\n';
  }
  return os.str();
}

}  // namespace syz
