#pragma once

// Verification sweeps: seeded random trials evaluated against every inequality
// and identity, collected in trial order into a report that can be written as
// CSV or JSON.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace petz::harness {

enum class Check { Theorem, Holevo, Inverted, Classical, Exchange, NsIdentity, Lemma1, Lemma2 };

std::optional<Check> parse_check(std::string_view name);
std::string_view check_name(Check check);
std::vector<std::string_view> check_names();

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SweepConfig {
  std::vector<std::size_t> dims{2, 3, 4};
  std::vector<double> alphas{0.3, 0.5, 0.9, 1.0, 1.5, 2.0, 3.0};
  std::size_t trials = 1000;
  std::uint64_t seed = 7;
  double tolerance = 1e-9;
  unsigned jobs = 1;

  /// Throws ConfigError: trials >= 1, dims >= 2, alphas > 0, tolerance >= 0, jobs >= 1.
  void validate() const;
};

/// One CSV row. Identity checks (ns-identity, *-moment, *-tanh2, saturation)
/// report margin = -|lhs - rhs| (0 when both sides are +inf).
struct SweepRow {
  std::size_t trial = 0;
  std::size_t dim = 0;
  double alpha = 0.0;  // NaN for alpha-free checks
  std::uint64_t seed = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  std::string inequality;
  double trace_distance = 0.0;  // NaN when not computed
  double s = 0.0;               // NaN when not computed
  double epsilon_kernel = 0.0;  // NaN when not computed
};

struct InequalitySummary {
  std::string id;
  std::size_t rows = 0;
  std::size_t failures = 0;
  double min_margin = 0.0;
  /// max |lhs - rhs| over rows where both are finite
  double max_abs_residual = 0.0;
};

struct SweepReport {
  std::string check;
  SweepConfig config;
  std::vector<SweepRow> rows;
  std::vector<InequalitySummary> summary;
  std::size_t failure_count = 0;
  double runtime_seconds = 0.0;
  std::string kernels;

  bool passed() const { return failure_count == 0; }
  const InequalitySummary* find(std::string_view id) const;
};

SweepReport run_sweep(Check check, const SweepConfig& config);

/// Two-level saturating family on an epsilon x alpha grid (phi = 1).
SweepReport run_saturation(std::span<const double> epsilons, std::span<const double> alphas, std::uint64_t seed,
                           double tolerance);

/// Margin convention for identities.
double identity_margin(double lhs, double rhs);

/// Fixed columns: trial,dim,alpha,seed,lhs,rhs,margin,inequality-id,T,s,epsilon-kernel
void write_csv(const SweepReport& report, std::ostream& out);
nlohmann::json rows_json(const SweepReport& report);
nlohmann::json summary_json(const SweepReport& report);

/// %.17g, "inf"/"-inf" for infinities, empty for NaN.
std::string format_number(double x);

}  // namespace petz::harness
