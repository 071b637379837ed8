#include "hsh/cli.hpp"

#include "hsh/harmonics.hpp"
#include "hsh/numerics.hpp"
#include "hsh/poschl_teller.hpp"
#include "hsh/serialization.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

namespace hsh::cli {

namespace {

constexpr double kEnumerationBudget = 1e5;

/// Thrown for bad user input; mapped to kUsageError.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OutputOptions {
  std::string format = "csv";
  std::string path;
};

struct EvalOptions {
  std::string index;
  std::vector<std::string> points;
  bool normalized = false;
  std::string basis = "complex";
  OutputOptions output;
};

struct VerifyOptions {
  int dimension = 0;
  int lmax = 0;
  std::vector<int> orders;
  double step = 1e-3;
  int stencil = 5;
  VerificationTolerances tolerances;
  int max_dimension = 5;
  int max_lmax = 6;
  bool force = false;
  OutputOptions output{.format = "json", .path = ""};
};

struct TableOptions {
  int dimension = 0;
  int lmin = 0;
  int lmax = 0;
  OutputOptions output;
};

struct SpectrumOptions {
  bool symmetric = false;
  bool general = false;
  double mu = 0.0;
  std::optional<double> kappa;
  double c = 1.0;
  int nmax = 0;
  int samples = 0;
  std::string samples_path;
  OutputOptions output;
};

/// Writes to the configured file, or to the fallback stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot open output file " + path);
      stream_ = &file_;
    } else {
      stream_ = &fallback;
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--output", o.path, "Write to this file instead of stdout");
}

double parse_number(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + text + "'");
  }
  if (used != text.size()) throw UsageError("not a number: '" + text + "'");
  return value;
}

std::vector<double> parse_point(const std::string& text) {
  std::vector<double> theta;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) theta.push_back(parse_number(item));
  if (theta.empty()) throw UsageError("empty point");
  return theta;
}

std::string join_chain(const MultiIndex& idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.chain().size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(idx.chain()[i]);
  }
  return out;
}

unsigned worker_count(std::size_t jobs) {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HSH_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) threads = std::min<unsigned>(threads, static_cast<unsigned>(cap));
  }
  return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs, 1)));
}

int cmd_eval(const EvalOptions& o, std::ostream& out) {
  const MultiIndex idx = parse_multi_index(o.index);
  const Basis basis = o.basis == "real" ? Basis::real : Basis::complex;

  std::vector<AngularPoint> points;
  for (const std::string& text : o.points) {
    std::vector<double> theta = parse_point(text);
    if (static_cast<int>(theta.size()) != idx.dimension()) {
      throw UsageError("point '" + text + "' has " + std::to_string(theta.size()) +
                       " angles, index needs " + std::to_string(idx.dimension()));
    }
    points.emplace_back(std::move(theta));
  }

  Sink sink(o.output.path, out);
  std::ostream& os = sink.stream();
  if (o.output.format == "json") {
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (const AngularPoint& p : points) {
      const auto y = o.normalized ? evaluate_normalized(idx, p, basis) : evaluate(idx, p, basis);
      values.push_back({{"theta", std::vector<double>(p.theta().begin(), p.theta().end())},
                        {"re", y.real()},
                        {"im", y.imag()}});
    }
    os << nlohmann::ordered_json{{"index", to_json(idx)}, {"values", values}}.dump() << '\n';
    return kOk;
  }

  for (int k = 1; k <= idx.dimension(); ++k) os << "theta" << k << ',';
  os << "re,im\n";
  for (const AngularPoint& p : points) {
    const auto y = o.normalized ? evaluate_normalized(idx, p, basis) : evaluate(idx, p, basis);
    for (double t : p.theta()) os << format_csv_number(t) << ',';
    os << format_csv_number(y.real()) << ',' << format_csv_number(y.imag()) << '\n';
  }
  return kOk;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  if (o.dimension < 1) throw UsageError("--N must be >= 1");
  if (o.lmax < 0) throw UsageError("--lmax must be >= 0");
  if (!o.orders.empty() && static_cast<int>(o.orders.size()) != o.dimension) {
    throw UsageError("--orders needs exactly N entries");
  }
  const StencilConfig cfg{o.step, o.stencil == 3 ? StencilOrder::second : StencilOrder::fourth};
  try {
    validate(cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  if (!o.force) {
    const double estimate = o.dimension * std::pow(o.lmax + 1.0, o.dimension);
    if (o.dimension > o.max_dimension || o.lmax > o.max_lmax || estimate > kEnumerationBudget) {
      err << "verify: N = " << o.dimension << ", lmax = " << o.lmax
          << " exceeds the resource limits (max N " << o.max_dimension << ", max lmax "
          << o.max_lmax << ", N(lmax+1)^N <= 1e5); pass --force to override\n";
      return kResourceLimit;
    }
  }

  std::vector<MultiIndex> indices;
  for (int l = 0; l <= o.lmax; ++l) {
    for (MultiIndex& idx : enumerate_indices(o.dimension, l)) indices.push_back(std::move(idx));
  }
  const QuadratureGrid grid = o.orders.empty() ? QuadratureGrid::for_degree(o.dimension, o.lmax)
                                               : QuadratureGrid(o.dimension, o.orders);

  std::vector<std::optional<VerificationReport>> reports(indices.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < indices.size(); i = next++) {
      reports[i] = residual_report(indices[i], grid, cfg, o.tolerances);
    }
  };
  const unsigned threads = worker_count(indices.size());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& thread : pool) thread.join();

  // Slots follow enumeration order (l_N, then chain, then branch), independent of scheduling.
  Sink sink(o.output.path, out);
  std::ostream& os = sink.stream();
  bool all_passed = true;
  if (o.output.format == "csv") {
    os << "N,l,branch,lambda,eigen_residual_max,norm_relerr,ortho_max,passed\n";
  }
  for (const auto& report : reports) {
    all_passed = all_passed && report->passed;
    if (o.output.format == "json") {
      os << to_json(*report).dump() << '\n';
    } else {
      os << report->index.dimension() << ',' << join_chain(report->index) << ','
         << (report->index.branch() == Branch::plus ? '+' : '-') << ','
         << format_csv_number(report->lambda) << ','
         << format_csv_number(report->eigen_residual_max) << ','
         << format_csv_number(report->norm_relerr) << ','
         << format_csv_number(report->ortho_max) << ','
         << (report->passed ? "true" : "false") << '\n';
    }
  }
  return all_passed ? kOk : kVerificationFailed;
}

int cmd_table(const TableOptions& o, std::ostream& out) {
  if (o.dimension < 1) throw UsageError("--N must be >= 1");
  if (o.lmin < 0 || o.lmax < o.lmin) throw UsageError("need 0 <= --lmin <= --lmax");
  Sink sink(o.output.path, out);
  std::ostream& os = sink.stream();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (o.output.format == "csv") os << "N,l_N,lambda,count\n";
  for (int l = o.lmin; l <= o.lmax; ++l) {
    const std::vector<int> top_chain(static_cast<std::size_t>(o.dimension), l);
    const double lambda = eigenvalue(MultiIndex(top_chain));
    const std::size_t count = enumerate_indices(o.dimension, l).size();
    if (o.output.format == "csv") {
      os << o.dimension << ',' << l << ',' << format_csv_number(lambda) << ',' << count << '\n';
    } else {
      rows.push_back({{"N", o.dimension}, {"l_N", l}, {"lambda", lambda}, {"count", count}});
    }
  }
  if (o.output.format == "json") os << rows.dump() << '\n';
  return kOk;
}

int cmd_pt_spectrum(const SpectrumOptions& o, std::ostream& out) {
  if (o.symmetric && o.general) throw UsageError("choose one of --symmetric and --general");
  if (o.nmax < 0) throw UsageError("--nmax must be >= 0");
  if (o.samples < 0) throw UsageError("--samples must be >= 0");
  if (o.samples > 0 && o.samples_path.empty()) {
    throw UsageError("--samples needs --samples-output");
  }
  const bool general = o.general;
  if (general && !o.kappa) throw UsageError("--general needs --kappa");

  std::vector<PTEigenpair> pairs;
  double domain_end = 0.0;
  try {
    if (general) {
      const GeneralPTWell well{o.c, o.mu, *o.kappa};
      validate(well);
      domain_end = well.domain_end();
      for (int n = 0; n <= o.nmax; ++n) pairs.push_back(general_pt_eigenpair(well, n));
    } else {
      validate(SymmetricPTWell{o.mu});
      domain_end = std::acos(-1.0);
      for (int n = 0; n <= o.nmax; ++n) pairs.push_back(symmetric_pt_eigenpair(o.mu, n));
    }
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }

  Sink sink(o.output.path, out);
  std::ostream& os = sink.stream();
  if (o.output.format == "csv") {
    os << "n,energy\n";
    for (const auto& pair : pairs) os << pair.level << ',' << format_csv_number(pair.energy) << '\n';
  } else {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& pair : pairs) rows.push_back({{"n", pair.level}, {"energy", pair.energy}});
    os << rows.dump() << '\n';
  }

  if (o.samples > 0) {
    Sink samples(o.samples_path, out);
    std::ostream& ss = samples.stream();
    ss << "n,x,psi\n";
    for (const auto& pair : pairs) {
      for (int j = 1; j <= o.samples; ++j) {
        const double x = domain_end * j / (o.samples + 1);
        ss << pair.level << ',' << format_csv_number(x) << ','
           << format_csv_number(pair.wavefunction(x)) << '\n';
      }
    }
  }
  return kOk;
}

}  // namespace

std::string format_csv_number(double value) {
  if (value == 0.0) return "0.0";
  std::string text = fmt::format("{:.12g}", value);
  if (text.find_first_of(".eEn") == std::string::npos) text += ".0";
  return text;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"N-dimensional spherical harmonics: evaluation, tables, spectra, verification",
               "hsh"};
  app.require_subcommand(1);

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a harmonic at angular points");
  eval_cmd->add_option("--index", eval.index, "Multi-index JSON")->required();
  eval_cmd->add_option("--point", eval.points, "Comma-separated angles theta_1..theta_N")
      ->required();
  eval_cmd->add_flag("--normalized", eval.normalized, "Divide by sqrt of the norm integral");
  eval_cmd->add_option("--basis", eval.basis, "Azimuthal basis")
      ->check(CLI::IsMember({"complex", "real"}))
      ->capture_default_str();
  add_output_options(eval_cmd, eval.output);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Verify every harmonic up to a degree");
  // "--h" is the step option here, so help is long-form only.
  verify_cmd->set_help_flag("--help", "Print this help message and exit");
  verify_cmd->add_option("--N", verify.dimension, "Sphere dimension")->required();
  verify_cmd->add_option("--lmax", verify.lmax, "Largest l_N")->required();
  verify_cmd->add_option("--orders", verify.orders, "Per-axis quadrature orders")
      ->delimiter(',');
  verify_cmd->add_option("--h", verify.step, "Finite-difference step")->capture_default_str();
  verify_cmd->add_option("--stencil", verify.stencil, "Stencil points (3 or 5)")
      ->check(CLI::IsMember({3, 5}))
      ->capture_default_str();
  verify_cmd->add_option("--eigen-tol", verify.tolerances.eigen)->capture_default_str();
  verify_cmd->add_option("--ortho-tol", verify.tolerances.ortho)->capture_default_str();
  verify_cmd->add_option("--norm-tol", verify.tolerances.norm)->capture_default_str();
  verify_cmd->add_option("--max-N", verify.max_dimension)->capture_default_str();
  verify_cmd->add_option("--max-lmax", verify.max_lmax)->capture_default_str();
  verify_cmd->add_flag("--force", verify.force, "Ignore resource limits");
  verify_cmd->add_option("--format", verify.output.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  verify_cmd->add_option("--output", verify.output.path, "Write to this file instead of stdout");

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "Eigenvalues and degeneracies");
  table_cmd->add_option("--N", table.dimension, "Sphere dimension")->required();
  table_cmd->add_option("--lmax", table.lmax, "Largest l_N")->required();
  table_cmd->add_option("--lmin", table.lmin, "Smallest l_N")->capture_default_str();
  add_output_options(table_cmd, table.output);

  SpectrumOptions spectrum;
  auto* pt_cmd = app.add_subcommand("pt-spectrum", "Poschl-Teller bound-state energies");
  pt_cmd->add_flag("--symmetric", spectrum.symmetric, "Symmetric well (default)");
  pt_cmd->add_flag("--general", spectrum.general, "General well");
  pt_cmd->add_option("--mu", spectrum.mu, "mu > 1")->required();
  pt_cmd->add_option("--kappa", spectrum.kappa, "kappa > 1 (general well)");
  pt_cmd->add_option("--c", spectrum.c, "Scale c > 0 (general well)")->capture_default_str();
  pt_cmd->add_option("--nmax", spectrum.nmax, "Largest level")->required();
  pt_cmd->add_option("--samples", spectrum.samples, "Wavefunction samples per level");
  pt_cmd->add_option("--samples-output", spectrum.samples_path, "CSV file for the samples");
  add_output_options(pt_cmd, spectrum.output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "hsh: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(eval, out);
    if (verify_cmd->parsed()) return cmd_verify(verify, out, err);
    if (table_cmd->parsed()) return cmd_table(table, out);
    if (pt_cmd->parsed()) return cmd_pt_spectrum(spectrum, out);
  } catch (const UsageError& e) {
    err << "hsh: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvalidMultiIndex& e) {
    err << "hsh: invalid index: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "hsh: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "hsh: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace hsh::cli
