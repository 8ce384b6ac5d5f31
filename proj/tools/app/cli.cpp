#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "csv_io.hpp"
#include "frontier/abc.hpp"
#include "frontier/error.hpp"
#include "frontier/evt.hpp"
#include "frontier/limits.hpp"
#include "frontier/parallel.hpp"
#include "frontier/random.hpp"
#include "frontier/simlab.hpp"
#include "frontier/subsampling.hpp"
#include "frontier/tuning.hpp"
#include "manifest.hpp"
#include "report.hpp"
#include "svg.hpp"

namespace frontier::app {
namespace {

namespace fs = std::filesystem;

struct Options {
  std::string input;
  std::vector<std::string> x;
  std::string x_grid;
  std::vector<std::string> methods{"sub"};
  std::string preset = "S1";
  std::vector<int> L;
  std::size_t reps = 500;
  std::uint64_t seed = 1;
  std::size_t subsamples = kDefaultSubsamples;
  std::size_t chain_total = kDefaultChainTotal;
  std::size_t burn_in = kDefaultBurnIn;
  std::size_t mc_draws = kDefaultDensityDraws;
  double alpha = 0.05;
  bool log_y = false;
  std::string out_dir = ".";
  unsigned workers = 1;
  std::size_t outputs = 1;
  int h1 = 10;
  double support_width = 20.0;
  // simulate
  int dgp = 1;
  std::size_t n = 5000;
  bool rejection = false;
  // density / limits
  std::string grid;
  double xi = -0.5;
  std::vector<std::string> u;
  std::string u_grid;
  std::size_t draws = 10000;
  // ev-index
  double tau = 0.0;
  // plot
  std::string report;
  std::string svg_out;
  std::string title = "Frontier estimates";
  // replay
  std::string manifest;
  bool verify = false;
};

[[noreturn]] void input_error(const std::string& message) { fail(ErrorKind::InvalidArgument, message); }

double to_number(const std::string& text, const std::string& what) {
  double v;
  if (!parse_double(text, v)) input_error(what + ": '" + text + "' is not a finite number");
  return v;
}

// "a,b,c" or "lo:hi:count" (count >= 2, evenly spaced, endpoints included).
std::vector<double> parse_grid(const std::string& spec, const std::string& what) {
  std::vector<double> values;
  if (spec.find(':') != std::string::npos) {
    const auto parts = split_fields(spec, ':');
    if (parts.size() != 3) input_error(what + " range must look like lo:hi:count");
    const double lo = to_number(parts[0], what), hi = to_number(parts[1], what);
    const double count = to_number(parts[2], what);
    if (!(count >= 2) || count != std::floor(count) || !(hi > lo)) input_error(what + " range needs hi > lo and count >= 2");
    const auto c = static_cast<std::size_t>(count);
    for (std::size_t i = 0; i < c; ++i) values.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(c - 1));
    values.back() = hi;
  } else {
    for (const auto& part : split_fields(spec, ',')) values.push_back(to_number(part, what));
  }
  if (values.empty()) input_error(what + " is empty");
  return values;
}

std::vector<double> parse_point(const std::string& text, const std::string& what) {
  std::vector<double> p;
  for (const auto& part : split_fields(text, ';')) p.push_back(to_number(part, what));
  return p;
}

std::vector<std::vector<double>> query_points(const Options& o, std::size_t dim) {
  std::vector<std::vector<double>> points;
  for (const auto& x : o.x) points.push_back(parse_point(x, "--x"));
  if (!o.x_grid.empty()) {
    if (dim != 1) input_error("--x-grid needs single-input data; use repeated --x \"a;b\" for several inputs");
    for (double v : parse_grid(o.x_grid, "--x-grid")) points.push_back({v});
  }
  if (points.empty()) input_error("no query points; pass --x or --x-grid");
  for (const auto& p : points)
    if (p.size() != dim)
      input_error("query point has " + std::to_string(p.size()) + " coordinates, data has " + std::to_string(dim) + " inputs");
  return points;
}

HGrid grid_from_options(const Options& o, std::size_t default_L) {
  if (!o.grid.empty()) {
    std::vector<int> h;
    for (double v : parse_grid(o.grid, "--grid")) {
      if (v != std::floor(v)) input_error("--grid entries must be integers");
      h.push_back(static_cast<int>(v));
    }
    if (h.size() < 3) input_error("--grid needs h0, hm0 and at least one target index");
    HGrid g{h[0], h[1], {h.begin() + 2, h.end()}};
    g.validate();
    return g;
  }
  const std::size_t L = o.L.empty() ? default_L : static_cast<std::size_t>(o.L.front());
  return preset_hgrid(parse_preset(o.preset), L);
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) input_error("cannot create output directory '" + dir + "': " + ec.message());
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) input_error("cannot write '" + path.string() + "'");
  out << text;
}

// Stored arguments use absolute file paths so the manifest replays from any
// working directory.
std::vector<std::string> portable_args(std::vector<std::string> args) {
  static const char* kPathFlags[] = {"--input", "--report", "--out"};
  for (std::size_t i = 0; i < args.size(); ++i) {
    for (const char* flag : kPathFlags) {
      const std::string f = flag;
      if (args[i] == f && i + 1 < args.size()) {
        args[i + 1] = fs::absolute(args[i + 1]).lexically_normal().string();
      } else if (args[i].rfind(f + "=", 0) == 0) {
        args[i] = f + "=" + fs::absolute(args[i].substr(f.size() + 1)).lexically_normal().string();
      }
    }
  }
  return args;
}

class Run {
 public:
  Run(std::string command, const std::vector<std::string>& args, const Options& o) : o_(o) {
    m_.command = std::move(command);
    m_.args = portable_args(args);
    m_.seed = o.seed;
    m_.version = software_version();
    m_.started_at = utc_timestamp();
    start_ = std::chrono::steady_clock::now();
    ensure_dir(o.out_dir);
  }

  RunManifest& manifest() { return m_; }

  void emit(const std::string& name, const std::string& content) {
    write_text(fs::path(o_.out_dir) / name, content);
    m_.outputs.push_back(name);
  }

  void finish() {
    m_.finished_at = utc_timestamp();
    m_.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    write_manifest((fs::path(o_.out_dir) / kManifestFile).string(), m_);
  }

 private:
  const Options& o_;
  RunManifest m_;
  std::chrono::steady_clock::time_point start_;
};

std::string skip_reason(const FrontierError& e) { return e.what(); }

int cmd_estimate(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  const InputTable table = read_input_csv(o.input, o.outputs, o.log_y);
  const Sample& sample = table.sample;
  const auto points = query_points(o, sample.dim());
  const Preset preset = parse_preset(o.preset);
  for (const auto& m : o.methods)
    if (m != "sub" && m != "abc") input_error("--method must be sub or abc, got '" + m + "'");
  if (!o.L.empty() && o.L.front() != 2 && o.L.front() != 3) input_error("--L must be 2 or 3");

  Run run("estimate", args, o);
  auto& m = run.manifest();
  m.config = {{"input", fs::absolute(o.input).lexically_normal().string()},
              {"columns", table.header},
              {"outputs", o.outputs},
              {"n", sample.size()},
              {"methods", o.methods},
              {"preset", std::string(to_string(preset))},
              {"L", o.L.empty() ? nlohmann::json("auto") : nlohmann::json(o.L.front())},
              {"h1", o.h1},
              {"subsamples", o.subsamples},
              {"chain_total", o.chain_total},
              {"burn_in", o.burn_in},
              {"mc_draws", o.mc_draws},
              {"support_width", o.support_width},
              {"alpha", o.alpha},
              {"log_y", o.log_y},
              {"workers", o.workers}};
  if (o.log_y) m.notes.push_back("outputs were log-transformed; estimates are on the log scale");

  const std::size_t per_point = o.methods.size();
  std::vector<ReportRow> rows(points.size() * per_point);
  parallel_for(points.size(), o.workers, [&](std::size_t i) {
    const auto& x0 = points[i];
    std::optional<EffectiveSample> es;
    double xi_hat = std::nan("");
    std::string setup_error;
    try {
      es.emplace(effective_sample(sample, x0));
      xi_hat = pickands_xi(*es, default_tail_fraction(es->n_eff())).xi_hat;
    } catch (const FrontierError& e) {
      setup_error = skip_reason(e);
    }
    for (std::size_t mi = 0; mi < per_point; ++mi) {
      ReportRow& row = rows[i * per_point + mi];
      row.x = x0;
      row.level = 1.0 - o.alpha;
      row.method = o.methods[mi];
      row.n_eff = es ? static_cast<double>(es->n_eff()) : 0.0;
      row.p_hat = es ? es->p_hat() : 0.0;
      row.xi_hat = xi_hat;
      row.point = row.lower = row.upper = std::nan("");
      if (!setup_error.empty()) {
        row.status = "SKIPPED";
        row.reason = setup_error;
        continue;
      }
      const std::uint64_t seed = derive_seed(o.seed, {stream_tag("point"), i, mi});
      try {
        const bool is_abc = o.methods[mi] == "abc";
        std::optional<std::size_t> L;
        if (!is_abc) L = 2;
        else if (!o.L.empty()) L = static_cast<std::size_t>(o.L.front());
        TuningConfig tuning = make_tuning(preset, sample.size(), es->p_hat(), L, o.h1);
        tuning.subsamples = o.subsamples;
        tuning.chain_total = o.chain_total;
        tuning.burn_in = o.burn_in;
        IntervalEstimate est;
        if (is_abc) {
          AbcConfig cfg = AbcConfig::from_tuning(tuning, o.alpha, seed);
          cfg.density_mc_draws = o.mc_draws;
          cfg.support_width = o.support_width;
          est = run_abc(sample, x0, cfg, xi_hat);
        } else {
          est = run_subsampling(sample, x0, SubsamplingConfig::from_tuning(tuning, o.alpha, seed), xi_hat);
        }
        row.point = est.point;
        row.lower = est.lower;
        row.upper = est.upper;
        row.method = est.method;
        row.diagnostics = est.diagnostics;
        row.diagnostics["h0"] = tuning.grid.h0;
        row.diagnostics["hm0"] = tuning.grid.hm0;
        for (std::size_t l = 0; l < tuning.grid.size(); ++l)
          row.diagnostics["h" + std::to_string(l + 1)] = tuning.grid.targets[l];
        if (!(xi_hat < 0.0)) row.reason = "xi_hat is not negative; limit theory assumes xi < 0";
      } catch (const FrontierError& e) {
        row.status = "SKIPPED";
        row.reason = skip_reason(e);
      }
    }
  });

  std::ostringstream csv;
  write_report_csv(csv, rows, kManifestFile);
  run.emit("report.csv", csv.str());
  run.emit("report.json", report_json(rows, kManifestFile).dump(2) + "\n");
  run.finish();

  std::size_t ok = 0;
  out << std::left << std::setw(14) << "x" << std::setw(10) << "method" << std::setw(14) << "point"
      << "interval / status\n";
  for (const auto& r : rows) {
    std::string x;
    for (std::size_t k = 0; k < r.x.size(); ++k) x += (k ? ";" : "") + format_double(r.x[k]);
    out << std::setw(14) << x << std::setw(10) << r.method;
    if (r.status == "OK") {
      ++ok;
      std::ostringstream point;
      point << std::setprecision(6) << r.point;
      out << std::setw(14) << point.str() << std::setprecision(6) << '[' << r.lower << ", " << r.upper << "]\n";
    } else {
      out << std::setw(14) << "-" << "SKIPPED: " << r.reason << '\n';
    }
  }
  out << "wrote " << (fs::path(o.out_dir) / "report.csv").string() << '\n';
  if (ok == 0) fail(ErrorKind::InvalidArgument, "no valid grid points; every query point was skipped");
  return kExitOk;
}

int cmd_simulate(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  if (o.dgp != 1 && o.dgp != 2) input_error("--dgp must be 1 or 2");
  StudySpec spec;
  spec.dgp = DgpSpec{o.dgp == 1 ? DgpId::Dgp1 : DgpId::Dgp2, o.n, o.rejection};
  spec.x_values = parse_grid(o.x_grid.empty() ? "3.3" : o.x_grid, "--x-grid");
  spec.replications = o.reps;
  spec.seed = o.seed;
  spec.workers = o.workers;
  const Preset preset = parse_preset(o.preset);
  const std::vector<int> Ls = o.L.empty() ? std::vector<int>{2} : o.L;
  for (const auto& name : o.methods) {
    MethodSpec ms;
    ms.preset = preset;
    ms.subsamples = o.subsamples;
    ms.chain_total = o.chain_total;
    ms.burn_in = o.burn_in;
    ms.mc_draws = o.mc_draws;
    ms.alpha = o.alpha;
    if (name == "sub") {
      ms.method = Method::Sub;
      spec.methods.push_back(ms);
    } else if (name == "abc") {
      ms.method = Method::Abc;
      for (int L : Ls) {
        if (L != 2 && L != 3) input_error("--L must be 2 or 3");
        ms.L = static_cast<std::size_t>(L);
        spec.methods.push_back(ms);
      }
    } else {
      input_error("--method must be sub or abc, got '" + name + "'");
    }
  }

  Run run("simulate", args, o);
  auto& m = run.manifest();
  m.config = {{"dgp", o.dgp},         {"n", o.n},
              {"rejection", o.rejection}, {"x_values", spec.x_values},
              {"methods", o.methods}, {"L", Ls},
              {"preset", std::string(to_string(preset))}, {"replications", o.reps},
              {"subsamples", o.subsamples}, {"chain_total", o.chain_total},
              {"burn_in", o.burn_in}, {"mc_draws", o.mc_draws},
              {"alpha", o.alpha},     {"workers", o.workers}};

  const StudyReport report = run_study(spec);
  nlohmann::json runtimes = nlohmann::json::array();
  for (const auto& r : report.rows) runtimes.push_back({{"method", r.method}, {"x", r.x}, {"seconds", r.runtime_seconds}});
  m.config["row_runtime_seconds"] = runtimes;

  std::ostringstream csv;
  write_study_csv(csv, report, kManifestFile);
  run.emit("study.csv", csv.str());
  run.emit("study.json", study_json(report, kManifestFile).dump(2) + "\n");
  run.finish();

  out << std::left << std::setw(14) << "method" << std::setw(8) << "x" << std::setw(10) << "coverage"
      << std::setw(10) << "length" << std::setw(11) << "bias" << "failures\n";
  for (const auto& r : report.rows) {
    out << std::setw(14) << r.method << std::setw(8) << r.x << std::setw(10) << std::setprecision(4) << r.coverage
        << std::setw(10) << r.avg_length << std::setw(11) << r.bias << r.failures << '\n';
  }
  report.check();
  return kExitOk;
}

int cmd_density(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  const HGrid grid = grid_from_options(o, 1);
  const std::size_t L = grid.size();
  std::vector<std::vector<double>> us;
  for (const auto& u : o.u) us.push_back(parse_point(u, "--u"));
  if (!o.u_grid.empty()) {
    if (L != 1) input_error("--u-grid needs a single target index; use repeated --u \"a;b\" otherwise");
    for (double v : parse_grid(o.u_grid, "--u-grid")) us.push_back({v});
  }
  if (us.empty()) input_error("no evaluation points; pass --u or --u-grid");
  for (const auto& u : us)
    if (u.size() != L) input_error("each --u point needs " + std::to_string(L) + " coordinates");

  Run run("density", args, o);
  run.manifest().config = {{"h0", grid.h0}, {"hm0", grid.hm0}, {"targets", grid.targets}, {"xi", o.xi},
                           {"mc_draws", o.mc_draws}, {"points", us.size()}};
  const DensityPool pool = density_pool(grid, o.xi, o.mc_draws, o.seed);
  std::ostringstream csv;
  csv << "# manifest: " << kManifestFile << '\n';
  for (std::size_t l = 0; l < L; ++l) csv << 'u' << l + 1 << ',';
  csv << "value,mc_se,log_value\n";
  for (const auto& u : us) {
    const DensityValue v = pool.evaluate(u);
    for (double c : u) csv << format_double(c) << ',';
    csv << format_double(v.value) << ',' << format_double(v.mc_se) << ',' << format_double(v.log_value) << '\n';
  }
  run.emit("density.csv", csv.str());
  run.finish();
  out << "evaluated " << us.size() << " point(s); wrote " << (fs::path(o.out_dir) / "density.csv").string() << '\n';
  return kExitOk;
}

int cmd_limits(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  const HGrid grid = grid_from_options(o, 2);
  if (o.draws < 1) input_error("--draws must be positive");
  Run run("limits", args, o);
  run.manifest().config = {{"h0", grid.h0}, {"hm0", grid.hm0}, {"targets", grid.targets}, {"xi", o.xi},
                           {"draws", o.draws}, {"workers", o.workers}};
  const auto draws = simulate_limit(grid, o.xi, o.draws, o.seed, o.workers);
  std::ostringstream csv;
  csv << "# manifest: " << kManifestFile << "\ndraw";
  for (std::size_t l = 0; l < grid.size(); ++l) csv << ",z" << l + 1;
  csv << '\n';
  for (std::size_t d = 0; d < draws.size(); ++d) {
    csv << d;
    for (double z : draws[d].z_tilde) csv << ',' << format_double(z);
    csv << '\n';
  }
  run.emit("limits.csv", csv.str());
  run.finish();
  out << "simulated " << draws.size() << " draws; wrote " << (fs::path(o.out_dir) / "limits.csv").string() << '\n';
  return kExitOk;
}

int cmd_ev_index(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  const InputTable table = read_input_csv(o.input, o.outputs, o.log_y);
  const auto points = query_points(o, table.sample.dim());
  Run run("ev-index", args, o);
  run.manifest().config = {{"input", fs::absolute(o.input).lexically_normal().string()},
                           {"tau", o.tau > 0 ? nlohmann::json(o.tau) : nlohmann::json("auto")},
                           {"log_y", o.log_y}};
  std::ostringstream csv;
  csv << "# manifest: " << kManifestFile << "\nx,n_eff,p_hat,tau,xi_hat,frontier_compatible,status,reason\n";
  std::size_t ok = 0;
  for (const auto& x0 : points) {
    std::string x;
    for (std::size_t k = 0; k < x0.size(); ++k) x += (k ? ";" : "") + format_double(x0[k]);
    try {
      const auto es = effective_sample(table.sample, x0);
      const double tau = o.tau > 0 ? o.tau : default_tail_fraction(es.n_eff());
      const auto est = pickands_xi(es, tau);
      csv << x << ',' << es.n_eff() << ',' << format_double(es.p_hat()) << ',' << format_double(tau) << ','
          << format_double(est.xi_hat) << ',' << (est.frontier_compatible() ? "true" : "false") << ",OK,\n";
      out << x << ": xi_hat = " << format_double(est.xi_hat) << (est.frontier_compatible() ? "" : " (not negative)")
          << '\n';
      ++ok;
    } catch (const FrontierError& e) {
      std::string reason = e.what();
      std::replace(reason.begin(), reason.end(), ',', ';');
      csv << x << ",,,,,,SKIPPED," << reason << '\n';
      out << x << ": SKIPPED: " << reason << '\n';
    }
  }
  run.emit("ev_index.csv", csv.str());
  run.finish();
  if (ok == 0) fail(ErrorKind::InvalidArgument, "no valid grid points; every query point was skipped");
  return kExitOk;
}

int cmd_plot(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  const InputTable table = read_input_csv(o.input, o.outputs, o.log_y);
  std::ifstream in(o.report, std::ios::binary);
  if (!in) input_error("cannot open report '" + o.report + "'");
  const auto rows = read_report_csv(in);
  Run run("plot", args, o);
  run.manifest().config = {{"input", fs::absolute(o.input).lexically_normal().string()},
                           {"report", fs::absolute(o.report).lexically_normal().string()},
                           {"title", o.title}};
  std::string svg = render_frontier_svg(table.sample, rows, o.title);
  svg.insert(svg.find('\n') + 1, std::string("<!-- manifest: ") + kManifestFile + " -->\n");
  const std::string name = o.svg_out.empty() ? "frontier.svg" : o.svg_out;
  run.emit(name, svg);
  run.finish();
  out << "wrote " << (fs::path(o.out_dir) / name).string() << '\n';
  return kExitOk;
}

bool same_bytes(const fs::path& a, const fs::path& b) {
  std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
  if (!fa || !fb) return false;
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  return sa.str() == sb.str();
}

int cmd_replay(const Options& o, std::ostream& out, std::ostream& err) {
  const RunManifest m = read_manifest(o.manifest);
  const fs::path original_dir = fs::path(o.manifest).parent_path();
  const std::string target = o.out_dir == "." ? (original_dir / "replay").string() : o.out_dir;
  std::vector<std::string> args;
  for (std::size_t i = 0; i < m.args.size(); ++i) {
    if (m.args[i] == "--out-dir") {
      ++i;
      continue;
    }
    if (m.args[i].rfind("--out-dir=", 0) == 0) continue;
    args.push_back(m.args[i]);
  }
  args.push_back("--out-dir");
  args.push_back(target);
  const int code = run_cli(args, out, err);
  if (code != kExitOk || !o.verify) return code;
  bool all_same = true;
  for (const auto& name : m.outputs) {
    const bool same = same_bytes(original_dir / name, fs::path(target) / name);
    out << name << ": " << (same ? "identical" : "DIFFERS") << '\n';
    all_same = all_same && same;
  }
  return all_same ? kExitOk : kExitNumerical;
}

void add_engine_options(CLI::App* c, Options& o) {
  c->add_option("--preset", o.preset, "Index preset: S1, S2 or auto")->capture_default_str();
  c->add_option("--L", o.L, "Number of target quantiles for ABC (2 or 3); comma list for simulate")->delimiter(',');
  c->add_option("--h1", o.h1, "Smallest index for --preset auto")->capture_default_str();
  c->add_option("--subsamples", o.subsamples, "Subsamples S for the subsampling engine")->capture_default_str();
  c->add_option("--chain-total", o.chain_total, "MCMC chain length")->capture_default_str();
  c->add_option("--burn-in", o.burn_in, "MCMC burn-in")->capture_default_str();
  c->add_option("--mc-draws", o.mc_draws, "Monte Carlo draws for the limit density")->capture_default_str();
  c->add_option("--support-width", o.support_width, "ABC prior width above the sample maximum, in units of 1/alpha_hat")
      ->capture_default_str();
  c->add_option("--alpha", o.alpha, "1 - confidence level")->capture_default_str();
  c->add_option("--method", o.methods, "sub, abc or sub,abc")->delimiter(',')->capture_default_str();
}

void add_common(CLI::App* c, Options& o) {
  c->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  c->add_option("--out-dir", o.out_dir, "Directory for output files")->capture_default_str();
  c->add_option("--workers", o.workers, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
}

void add_input(CLI::App* c, Options& o) {
  c->add_option("--input", o.input, "CSV with header: input columns, then output column(s)")->required();
  c->add_option("--outputs", o.outputs, "Number of trailing output columns (reduced by max)")->capture_default_str();
  c->add_flag("--log-y", o.log_y, "Take logs of the outputs before estimation");
}

void add_query(CLI::App* c, Options& o) {
  c->add_option("--x", o.x, "Query point; several inputs separated by ';' (repeatable)");
  c->add_option("--x-grid", o.x_grid, "Query grid: a,b,c or lo:hi:count");
}

void add_grid(CLI::App* c, Options& o) {
  c->add_option("--grid", o.grid, "Index grid h0,hm0,h1[,h2,...]");
  c->add_option("--preset", o.preset, "Index preset when --grid is absent")->capture_default_str();
  c->add_option("--L", o.L, "Number of target indices taken from the preset");
  c->add_option("--xi", o.xi, "EV index (negative)")->capture_default_str();
}

int exit_code_for(const FrontierError& e) { return is_input_error(e.kind()) ? kExitInput : kExitNumerical; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Frontier estimation and inference from extreme quantiles", "frontier"};
  app.require_subcommand(1);
  app.set_version_flag("--version", software_version());

  auto* estimate = app.add_subcommand("estimate", "Frontier point estimates and confidence intervals from data");
  add_input(estimate, o);
  add_query(estimate, o);
  add_engine_options(estimate, o);
  add_common(estimate, o);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo study on a design with known frontier");
  simulate->add_option("--dgp", o.dgp, "Design 1 or 2")->capture_default_str();
  simulate->add_option("--n", o.n, "Sample size")->capture_default_str();
  simulate->add_flag("--rejection", o.rejection, "Design 2 by accept-reject sampling");
  simulate->add_option("--x-grid", o.x_grid, "Query grid: a,b,c or lo:hi:count (default 3.3)");
  simulate->add_option("--reps", o.reps, "Replications")->capture_default_str();
  add_engine_options(simulate, o);
  add_common(simulate, o);

  auto* density = app.add_subcommand("density", "Evaluate the joint limit density of the normalized quantiles");
  add_grid(density, o);
  density->add_option("--u", o.u, "Evaluation point u1;u2;... (repeatable)");
  density->add_option("--u-grid", o.u_grid, "Evaluation grid for one target: a,b,c or lo:hi:count");
  density->add_option("--mc-draws", o.mc_draws, "Monte Carlo draws")->capture_default_str();
  add_common(density, o);

  auto* limits = app.add_subcommand("limits", "Draw from the limit law of the normalized quantiles");
  add_grid(limits, o);
  limits->add_option("--draws", o.draws, "Number of draws")->capture_default_str();
  add_common(limits, o);

  auto* ev = app.add_subcommand("ev-index", "Pickands estimate of the EV index at query points");
  add_input(ev, o);
  add_query(ev, o);
  ev->add_option("--tau", o.tau, "Tail fraction in (0, 0.25); default 0.1, or 0.08 from 3500 effective points");
  add_common(ev, o);

  auto* plot = app.add_subcommand("plot", "SVG of the data with frontier estimates and bands");
  add_input(plot, o);
  plot->add_option("--report", o.report, "report.csv written by estimate")->required();
  plot->add_option("--out", o.svg_out, "SVG file name inside --out-dir (default frontier.svg)");
  plot->add_option("--title", o.title, "Figure title")->capture_default_str();
  add_common(plot, o);

  auto* replay = app.add_subcommand("replay", "Re-run a command from its manifest.json");
  replay->add_option("manifest", o.manifest, "Path to manifest.json")->required();
  replay->add_option("--out-dir", o.out_dir, "Output directory (default: <manifest dir>/replay)");
  replay->add_flag("--verify", o.verify, "Compare the new outputs byte for byte with the recorded ones");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*estimate) return cmd_estimate(o, args, out);
    if (*simulate) return cmd_simulate(o, args, out);
    if (*density) return cmd_density(o, args, out);
    if (*limits) return cmd_limits(o, args, out);
    if (*ev) return cmd_ev_index(o, args, out);
    if (*plot) return cmd_plot(o, args, out);
    if (*replay) return cmd_replay(o, out, err);
  } catch (const FrontierError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitInput;
}

}  // namespace frontier::app
