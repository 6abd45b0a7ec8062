#include "riesz/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "riesz/csv.hpp"
#include "riesz/errors.hpp"
#include "riesz/summation.hpp"
#include "riesz/verify.hpp"
#include "riesz/zeros.hpp"

namespace riesz::cli {

namespace {

// Accepts decimal numbers and the tokens "pi", "pi^2", "2pi".
double parse_real(const std::string& text) {
  if (text == "pi") return kPi;
  if (text == "pi^2" || text == "pi2") return kPi * kPi;
  if (text == "2pi") return 2.0 * kPi;
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw InvalidArgument("cannot parse '" + text + "' as a real number");
  }
  return v;
}

std::vector<double> parse_reals(const std::vector<std::string>& items) {
  std::vector<double> out;
  for (const auto& s : items) out.push_back(parse_real(s));
  return out;
}

struct Globals {
  std::string out_path;
  bool pretty = false;
  unsigned threads = 0;
};

struct ZeroSource {
  std::string file;
  std::size_t count = 50;
};

std::vector<ZeroRecord> obtain_zeros(const ZeroSource& src) {
  std::string path = src.file;
  if (path.empty()) {
    if (const char* env = std::getenv("RIESZ_ZEROS_PATH"); env && *env) path = env;
  }
  if (path.empty()) return acquire_zeros(src.count);
  std::vector<ZeroRecord> records = load_zeros(path);
  if (records.size() < src.count) {
    throw InvalidArgument("zero table " + path + " holds " + std::to_string(records.size()) + " zeros; " +
                          std::to_string(src.count) + " requested");
  }
  records.resize(src.count);
  return records;
}

class Emitter {
 public:
  Emitter(const Globals& g, std::ostream& out) : globals_(g), out_(out) {}

  void table(const csv::Table& t) {
    if (!buffer_.str().empty() && globals_.pretty) buffer_ << '\n';
    if (globals_.pretty) {
      csv::write_pretty(buffer_, t);
    } else {
      csv::write_csv(buffer_, t);
    }
  }

  void raw(const std::string& text) { buffer_ << text; }

  void flush() {
    if (globals_.out_path.empty()) {
      out_ << buffer_.str();
      out_.flush();
      return;
    }
    std::ofstream file(globals_.out_path, std::ios::binary);
    if (!file) throw InvalidArgument("cannot open output file " + globals_.out_path);
    file << buffer_.str();
  }

 private:
  const Globals& globals_;
  std::ostream& out_;
  std::ostringstream buffer_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Moebius-exponential series toolkit: identity residuals, zero tables, Mellin and exponent checks"};
  app.name("riesz");
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--out", globals.out_path, "Write output to this file instead of standard output");
  app.add_flag("--pretty", globals.pretty, "Aligned human-readable tables instead of CSV");
  app.add_option("--threads", globals.threads, "Worker threads (results do not depend on it)")
      ->check(CLI::Range(1u, 1024u));

  // zeros
  auto* zeros = app.add_subcommand("zeros", "Zero tables on the critical line");
  zeros->require_subcommand(1);
  auto* zscan = zeros->add_subcommand("scan", "Locate and refine zeros in (t-min, t-max)");
  double scan_t_min = 5.0;
  double scan_t_max = 0.0;
  double scan_step = 0.05;
  zscan->add_option("--t-min", scan_t_min, "Lower end of the scan (>= 5)")->capture_default_str();
  zscan->add_option("--t-max", scan_t_max, "Upper end of the scan (<= 300)")->required();
  zscan->add_option("--step", scan_step, "Scan step (<= 0.5)")->capture_default_str();
  auto* zcheck = zeros->add_subcommand("check", "Re-refine and validate a zero table");
  std::string check_file;
  zcheck->add_option("--file", check_file, "Zero table path")->required();

  // pk
  auto* pk = app.add_subcommand("pk", "Evaluate P_k(x)");
  std::string pk_k;
  std::string pk_x;
  std::string pk_route = "both";
  std::size_t pk_terms = 1'000'000;
  pk->add_option("--k", pk_k, "Order k >= 1")->required();
  pk->add_option("--x", pk_x, "Argument x > 0")->required();
  pk->add_option("--route", pk_route, "direct, power or both")
      ->check(CLI::IsMember({"direct", "power", "both"}))
      ->capture_default_str();
  pk->add_option("--n-terms", pk_terms, "Direct-series length")->capture_default_str();

  // identity
  auto* identity = app.add_subcommand("identity", "Residual of the explicit formula for P_k(x)");
  std::vector<std::string> id_k;
  std::vector<std::string> id_x;
  EvalParams id_params;
  ZeroSource id_zeros;
  identity->add_option("--k", id_k, "Order(s) k >= 1, comma separated")->required()->delimiter(',');
  identity->add_option("--x", id_x, "Argument(s) x > 0, comma separated")->required()->delimiter(',');
  identity->add_option("--n-terms", id_params.n_terms, "Main-term length")->capture_default_str();
  identity->add_option("--direct-terms", id_params.direct_terms, "Direct-series length (x > 30)")
      ->capture_default_str();
  identity->add_option("--num-zeros", id_zeros.count, "Number of zeros in the zero sum")->capture_default_str();
  identity->add_option("--zeros-file", id_zeros.file, "Zero table (default: $RIESZ_ZEROS_PATH, else computed)");
  identity->add_option("--a0", id_params.a0, "Bracketing constant A0")->capture_default_str();
  identity->add_option("--tol", id_params.tol, "Residual tolerance")->capture_default_str();

  // hl1916
  auto* hl = app.add_subcommand("hl1916", "k = 1 specialization in exponential form and the Ramanujan gap");
  std::string hl_x;
  std::size_t hl_terms = 100'000;
  ZeroSource hl_zeros;
  double hl_tol = 1e-6;
  hl->add_option("--x", hl_x, "Argument x > 0")->required();
  hl->add_option("--n-terms", hl_terms, "Main-term length")->capture_default_str();
  hl->add_option("--num-zeros", hl_zeros.count, "Number of zeros")->capture_default_str();
  hl->add_option("--zeros-file", hl_zeros.file, "Zero table");
  hl->add_option("--tol", hl_tol, "Residual tolerance")->capture_default_str();

  // mellin
  auto* mellin = app.add_subcommand("mellin", "Mellin transform of P_k against Gamma(-s)/zeta(2s+k)");
  std::string m_k;
  double m_re = 0.0;
  double m_im = 0.0;
  double m_xmax = 1e3;
  double m_tol = 1e-5;
  std::size_t m_terms = 20'000;
  ZeroSource m_zeros;
  mellin->add_option("--k", m_k, "Order k >= 1")->required();
  mellin->add_option("--s-re", m_re, "Re s")->required();
  mellin->add_option("--s-im", m_im, "Im s")->capture_default_str();
  mellin->add_option("--x-max", m_xmax, "Quadrature cut-off (>= 1e3)")->capture_default_str();
  mellin->add_option("--tol", m_tol, "Relative-error tolerance")->capture_default_str();
  mellin->add_option("--n-terms", m_terms, "Direct-series length beyond x = 30")->capture_default_str();
  mellin->add_option("--num-zeros", m_zeros.count, "Zeros used by the tail model")->capture_default_str();
  mellin->add_option("--zeros-file", m_zeros.file, "Zero table");

  // exponent
  auto* exponent = app.add_subcommand("exponent", "Log-log slope of |P_k(x)|");
  std::string e_k;
  double e_xmin = 0.0;
  double e_xmax = 0.0;
  std::size_t e_points = 16;
  std::size_t e_terms = 1'000'000;
  double e_slope_tol = 0.15;
  exponent->add_option("--k", e_k, "Order k >= 1")->required();
  exponent->add_option("--x-min", e_xmin, "Grid start")->required();
  exponent->add_option("--x-max", e_xmax, "Grid end")->required();
  exponent->add_option("--points", e_points, "Grid size (>= 8)")->required();
  exponent->add_option("--n-terms", e_terms, "Direct-series length")->capture_default_str();
  exponent->add_option("--slope-tol", e_slope_tol, "Accepted |slope - (1/4 - k/2)|")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (globals.threads > 0) set_thread_count(globals.threads);
    Emitter emit(globals, out);
    int status = kExitPass;

    if (*zscan) {
      const ScanResult scan = locate_zeros(scan_t_min, scan_t_max, scan_step);
      for (const ScanWarning& w : scan.warnings) err << "warning: " << w.message << '\n';
      std::vector<ZeroRecord> records(scan.ordinates.size());
      parallel_for_blocks(records.size(), [&](std::size_t i) { records[i] = refine_zero(scan.ordinates[i]); });
      if (globals.pretty) {
        emit.table(csv::zero_table(records));
      } else {
        std::string text = "# imaginary parts of zeta zeros on the critical line\n";
        for (const ZeroRecord& r : records) text += csv::number(r.gamma) + '\n';
        emit.raw(text);
      }
    } else if (*zcheck) {
      const std::vector<ZeroRecord> records = load_zeros(check_file);
      emit.table(csv::zero_table(records));
    } else if (*pk) {
      const double k = parse_real(pk_k);
      const double x = parse_real(pk_x);
      std::vector<std::pair<std::string, TermBreakdown>> rows;
      if (pk_route != "power") {
        const auto table = shared_mobius(pk_terms);
        rows.emplace_back("direct", pk_direct(k, x, pk_terms, *table));
      }
      if (pk_route != "direct") rows.emplace_back("power", pk_power_series(k, x));
      emit.table(csv::pk_table(rows, k, x));
    } else if (*identity) {
      const std::vector<double> ks = parse_reals(id_k);
      const std::vector<double> xs = parse_reals(id_x);
      id_params.num_zeros = id_zeros.count;
      const std::vector<ZeroRecord> records = obtain_zeros(id_zeros);
      const std::vector<BracketGroup> groups = bracket_zeros(records, id_params.a0);
      std::vector<ResidualReport> reports;
      for (const double k : ks) {
        for (const double x : xs) {
          EvalParams p = id_params;
          p.k = k;
          p.x = x;
          reports.push_back(identity_residual(p, records, groups));
          if (!reports.back().pass) status = kExitFail;
        }
      }
      emit.table(csv::residual_table(reports));
    } else if (*hl) {
      const double x = parse_real(hl_x);
      const std::vector<ZeroRecord> records = obtain_zeros(hl_zeros);
      const HardyLittlewoodReport report = hardy_littlewood_check(x, hl_terms, records, hl_tol);
      std::optional<RamanujanReport> ram;
      if (x >= 0.5 && x <= 20.0) ram = ramanujan_falsification(x, hl_terms, records);
      emit.table(csv::hardy_littlewood_table(report, ram ? &*ram : nullptr));
      if (!report.pass || !report.matches_identity || !report.symmetric_pass) status = kExitFail;
    } else if (*mellin) {
      const double k = parse_real(m_k);
      const std::vector<ZeroRecord> records = obtain_zeros(m_zeros);
      const MellinReport report = mellin_check(k, Complex(m_re, m_im), m_xmax, records, m_terms);
      emit.table(csv::mellin_table({report}));
      if (!(report.rel_error <= m_tol)) status = kExitFail;
    } else if (*exponent) {
      const double k = parse_real(e_k);
      const ExponentFit fit = exponent_fit(k, e_xmin, e_xmax, e_points, e_terms);
      emit.table(csv::exponent_summary_table(fit));
      if (globals.pretty) emit.table(csv::exponent_grid_table(fit));
      if (!(std::abs(fit.slope - fit.predicted_slope) <= e_slope_tol)) status = kExitFail;
    }
    emit.flush();
    return status;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace riesz::cli
