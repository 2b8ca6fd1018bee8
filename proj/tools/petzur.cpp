// petzur: evaluate the bound function, run verification sweeps and saturation
// scans, and dump Nussbaum-Szkola embeddings.
//
// Exit codes: 0 success, 1 a sweep recorded failures, 2 usage/input/domain errors.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "petz/bounds.hpp"
#include "petz/divergences.hpp"
#include "petz/errors.hpp"
#include "petz/harness.hpp"
#include "petz/kernels.hpp"
#include "petz/matrix_json.hpp"
#include "petz/nussbaum_szkola.hpp"

namespace {

constexpr int kExitFailures = 1;
constexpr int kExitError = 2;

std::string fmt15(double x) {
  if (x == 0.0) return "0";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%#.15g", x);
  return buf;
}

void select_kernels(const std::string& name) {
  using petz::kernels::Backend;
  if (name.empty() || name == "auto") return;
  if (name == "scalar") {
    petz::kernels::select_backend(Backend::Scalar);
  } else if (name == "avx2") {
    petz::kernels::select_backend(Backend::Avx2);
  } else {
    throw petz::harness::ConfigError("unknown kernel backend: " + name);
  }
}

void write_report(const petz::harness::SweepReport& report, const std::string& out, const std::string& format) {
  using namespace petz::harness;
  const nlohmann::json summary = summary_json(report);
  if (out.empty() || out == "-") {
    if (format == "json") {
      std::cout << nlohmann::json{{"summary", summary}, {"rows", rows_json(report)}}.dump(2) << '\n';
    } else {
      write_csv(report, std::cout);
    }
    std::cerr << summary.dump(2) << '\n';
    return;
  }
  std::ofstream file(out);
  if (!file) throw std::runtime_error("cannot open output file: " + out);
  if (format == "json") {
    file << rows_json(report).dump(2) << '\n';
  } else {
    write_csv(report, file);
  }
  if (!file) throw std::runtime_error("write failed: " + out);

  const std::string sidecar = out + ".summary.json";
  std::ofstream side(sidecar);
  if (!side) throw std::runtime_error("cannot open output file: " + sidecar);
  side << summary.dump(2) << '\n';
}

void print_brief(const petz::harness::SweepReport& report) {
  std::cerr << report.check << ": " << report.rows.size() << " rows, " << report.failure_count << " failures, "
            << report.runtime_seconds << " s [" << report.kernels << "]\n";
  for (const auto& s : report.summary) {
    std::cerr << "  " << s.id << ": min margin " << petz::harness::format_number(s.min_margin) << ", max |lhs-rhs| "
              << petz::harness::format_number(s.max_abs_residual) << ", failures " << s.failures << '\n';
  }
}

petz::DensityMatrix load_state(const std::string& path) {
  try {
    return petz::validate_density(petz::read_matrix_file(path));
  } catch (const petz::ValidationError& e) {
    throw petz::MatrixFormatError(path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric Petz-Renyi bounds and verification sweeps"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file with option defaults");

  // bound
  auto* bound = app.add_subcommand("bound", "Evaluate B(alpha, x), its inverse, f(alpha, D) or the Pinsker bound");
  double alpha = 1.0;
  std::optional<double> x, inverse, f_of, pinsker;
  bound->add_option("--alpha", alpha, "Order alpha > 0")->required();
  auto* opt_x = bound->add_option("--x", x, "Evaluate B(alpha, x), x in [0, 1)");
  auto* opt_inv = bound->add_option("--inverse", inverse, "Evaluate B^-1(alpha, y)");
  auto* opt_f = bound->add_option("--f", f_of, "Evaluate f(alpha, D) = 1/B^-1(alpha, D)^2 - 1");
  auto* opt_p = bound->add_option("--pinsker", pinsker, "Evaluate 2 min(alpha, 1) T^2");
  opt_x->excludes(opt_inv, opt_f, opt_p);
  opt_inv->excludes(opt_f, opt_p);
  opt_f->excludes(opt_p);

  // verify
  auto* verify = app.add_subcommand("verify", "Run a seeded verification sweep");
  petz::harness::SweepConfig cfg;
  std::string which = "theorem";
  std::string out, format = "csv", kernels = "auto";
  std::vector<std::string> names;
  for (auto n : petz::harness::check_names()) names.emplace_back(n);
  verify->add_option("which,--which", which, "Check to run")->check(CLI::IsMember(names));
  verify->add_option("--dims", cfg.dims, "Hilbert-space / sample-space dimensions")->delimiter(',');
  verify->add_option("--alphas", cfg.alphas, "Order grid")->delimiter(',');
  verify->add_option("--trials", cfg.trials, "Number of random trials");
  verify->add_option("--seed", cfg.seed, "Master seed")->envname("PRL_SEED");
  verify->add_option("--tol", cfg.tolerance, "Failure tolerance on margins");
  verify->add_option("--jobs", cfg.jobs, "Worker threads");
  verify->add_option("--out", out, "Output path (stdout when omitted)");
  verify->add_option("--format", format, "Row format")->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("--kernels", kernels, "Kernel backend")->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  // saturation
  auto* saturation = app.add_subcommand("saturation", "Scan the two-level saturating family");
  std::vector<double> epsilons{0.1, 0.5, 1.0, 2.0, 3.0, 4.0};
  std::vector<double> sat_alphas(std::begin(petz::kDefaultAlphas), std::end(petz::kDefaultAlphas));
  std::uint64_t sat_seed = 7;
  double sat_tol = 1e-8;
  std::string sat_out, sat_format = "csv";
  saturation->add_option("--epsilons", epsilons, "Population log-ratio grid")->delimiter(',');
  saturation->add_option("--alphas", sat_alphas, "Order grid")->delimiter(',');
  saturation->add_option("--seed", sat_seed, "Recorded seed")->envname("PRL_SEED");
  saturation->add_option("--tol", sat_tol, "Maximum allowed |gap|");
  saturation->add_option("--out", sat_out, "Output path (stdout when omitted)");
  saturation->add_option("--format", sat_format, "Row format")->check(CLI::IsMember({"csv", "json"}));

  // dump-ns
  auto* dump = app.add_subcommand("dump-ns", "Write the Nussbaum-Szkola embedding of (rho, sigma[, theta])");
  std::string rho_path, sigma_path, theta_path, dump_out;
  dump->add_option("--rho", rho_path, "rho matrix JSON")->required();
  dump->add_option("--sigma", sigma_path, "sigma matrix JSON")->required();
  dump->add_option("--theta", theta_path, "Observable matrix JSON");
  dump->add_option("--out", dump_out, "Output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*bound) {
      if (!(alpha > 0.0) || !std::isfinite(alpha)) throw petz::DomainError("alpha must be positive");
      if (x) {
        std::cout << fmt15(petz::bound_B(alpha, *x)) << '\n';
      } else if (inverse) {
        const petz::InverseResult r = petz::bound_B_inverse(alpha, *inverse);
        std::cout << fmt15(r.x) << '\n';
        if (r.saturated) std::cerr << "warning: value exceeds the bound range; argument pinned\n";
      } else if (f_of) {
        std::cout << fmt15(petz::uncertainty_f(alpha, *f_of)) << '\n';
      } else if (pinsker) {
        std::cout << fmt15(petz::pinsker_rhs(alpha, *pinsker)) << '\n';
      } else {
        throw petz::harness::ConfigError("bound needs one of --x, --inverse, --f, --pinsker");
      }
      return 0;
    }

    if (*verify) {
      select_kernels(kernels);
      const auto check = petz::harness::parse_check(which);
      const petz::harness::SweepReport report = petz::harness::run_sweep(*check, cfg);
      write_report(report, out, format);
      print_brief(report);
      return report.passed() ? 0 : kExitFailures;
    }

    if (*saturation) {
      const petz::harness::SweepReport report = petz::harness::run_saturation(epsilons, sat_alphas, sat_seed, sat_tol);
      write_report(report, sat_out, sat_format);
      print_brief(report);
      return report.passed() ? 0 : kExitFailures;
    }

    if (*dump) {
      const petz::DensityMatrix rho = load_state(rho_path);
      const petz::DensityMatrix sigma = load_state(sigma_path);
      std::optional<petz::Observable> theta;
      if (!theta_path.empty()) {
        try {
          theta.emplace(petz::read_matrix_file(theta_path));
        } catch (const petz::ValidationError& e) {
          throw petz::MatrixFormatError(theta_path + ": " + e.what());
        }
      }
      const petz::NsEmbedding ns = petz::ns_embed(rho, sigma, theta);
      nlohmann::json doc;
      doc["dim"] = ns.dim;
      doc["layout"] = {{"order", "row-major"},
                       {"index", "i * dim + j"},
                       {"i", "rho eigenvector, descending eigenvalue"},
                       {"j", "sigma eigenvector, descending eigenvalue"}};
      doc["P"] = std::vector<double>(ns.p.weights().begin(), ns.p.weights().end());
      doc["Q"] = std::vector<double>(ns.q.weights().begin(), ns.q.weights().end());
      doc["rho_eigenvalues"] = ns.rho_eigenvalues;
      doc["sigma_eigenvalues"] = ns.sigma_eigenvalues;
      if (!ns.theta.empty()) {
        std::vector<double> re, im;
        for (const auto& z : ns.theta) {
          re.push_back(z.real());
          im.push_back(z.imag());
        }
        doc["Theta"] = {{"re", re}, {"im", im}};
      }
      if (dump_out.empty() || dump_out == "-") {
        std::cout << doc.dump(2) << '\n';
      } else {
        std::ofstream file(dump_out);
        if (!file) throw std::runtime_error("cannot open output file: " + dump_out);
        file << doc.dump(2) << '\n';
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
