#include <cmath>
#include <cstdio>
#include <ostream>

#include "petz/harness.hpp"

namespace petz::harness {
namespace {

nlohmann::json json_number(double x) {
  if (std::isnan(x)) return nullptr;
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return {};
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(const SweepReport& report, std::ostream& out) {
  out << "trial,dim,alpha,seed,lhs,rhs,margin,inequality-id,T,s,epsilon-kernel\n";
  for (const SweepRow& r : report.rows) {
    out << r.trial << ',' << r.dim << ',' << format_number(r.alpha) << ',' << r.seed << ',' << format_number(r.lhs)
        << ',' << format_number(r.rhs) << ',' << format_number(r.margin) << ',' << r.inequality << ','
        << format_number(r.trace_distance) << ',' << format_number(r.s) << ',' << format_number(r.epsilon_kernel)
        << '\n';
  }
}

nlohmann::json rows_json(const SweepReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const SweepRow& r : report.rows) {
    rows.push_back({
        {"trial", r.trial},
        {"dim", r.dim},
        {"alpha", json_number(r.alpha)},
        {"seed", r.seed},
        {"lhs", json_number(r.lhs)},
        {"rhs", json_number(r.rhs)},
        {"margin", json_number(r.margin)},
        {"inequality", r.inequality},
        {"T", json_number(r.trace_distance)},
        {"s", json_number(r.s)},
        {"epsilon_kernel", json_number(r.epsilon_kernel)},
    });
  }
  return rows;
}

nlohmann::json summary_json(const SweepReport& report) {
  nlohmann::json per = nlohmann::json::array();
  for (const InequalitySummary& s : report.summary) {
    per.push_back({
        {"id", s.id},
        {"rows", s.rows},
        {"failures", s.failures},
        {"min_margin", json_number(s.min_margin)},
        {"max_abs_residual", json_number(s.max_abs_residual)},
    });
  }
  nlohmann::json alphas = nlohmann::json::array();
  for (double a : report.config.alphas) alphas.push_back(json_number(a));
  return {
      {"check", report.check},
      {"seed", report.config.seed},
      {"trials", report.config.trials},
      {"dims", report.config.dims},
      {"alphas", alphas},
      {"tolerance", report.config.tolerance},
      {"rows", report.rows.size()},
      {"failure_count", report.failure_count},
      {"passed", report.passed()},
      {"runtime_seconds", report.runtime_seconds},
      {"kernels", report.kernels},
      {"inequalities", per},
  };
}

}  // namespace petz::harness
