#include "chordiv/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "chordiv/bregman.hpp"
#include "chordiv/clustering.hpp"
#include "chordiv/divergence_registry.hpp"
#include "chordiv/error.hpp"
#include "chordiv/generators.hpp"
#include "chordiv/sweep.hpp"
#include "chordiv/verify.hpp"
#include "format.hpp"
#include "svg.hpp"

namespace chordiv::cli {

namespace {

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUsage:
    case ErrorCode::kParse:
    case ErrorCode::kUnknownDivergence:
    case ErrorCode::kUnsupportedGenerator:
      return kUsageError;
    case ErrorCode::kIo:
      return kIoError;
    default:
      return kMathError;
  }
}

bool parse_finite(std::string_view s, double& out) {
  const char* end = s.data() + s.size();
  // from_chars rejects a leading '+'
  const char* begin = (!s.empty() && s.front() == '+') ? s.data() + 1 : s.data();
  const auto res = std::from_chars(begin, end, out);
  return res.ec == std::errc() && res.ptr == end && std::isfinite(out);
}

const CLI::Validator kFinite(
    [](std::string& s) -> std::string {
      double v;
      return parse_finite(s, v) ? std::string() : "'" + s + "' is not a finite number";
    },
    "REAL");

std::vector<double> parse_coords(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    const auto field = std::string_view(text).substr(start, comma - start);
    double v;
    if (!parse_finite(field, v)) {
      raise(ErrorCode::kUsage, flag + ": '" + std::string(field) + "' is not a finite number");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

struct DivFlags {
  std::string id;
  double values[5] = {};
  CLI::Option* opts[5] = {};

  void attach(CLI::App* cmd, const std::string& default_id) {
    id = default_id;
    cmd->add_option("--div", id, "divergence identifier")->capture_default_str();
    static constexpr const char* kNames[5] = {"--alpha", "--beta", "--gamma", "--delta",
                                              "--epsilon"};
    for (int i = 0; i < 5; ++i) opts[i] = cmd->add_option(kNames[i], values[i])->check(kFinite);
  }

  DivergenceSpec spec() const {
    DivergenceSpec s{id, {}};
    std::optional<double>* slots[5] = {&s.params.alpha, &s.params.beta, &s.params.gamma,
                                       &s.params.delta, &s.params.epsilon};
    for (int i = 0; i < 5; ++i) {
      if (opts[i]->count()) *slots[i] = values[i];
    }
    return s;
  }
};

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) raise(ErrorCode::kIo, "cannot open '" + path.string() + "' for writing");
  f << content;
  f.close();
  if (!f) raise(ErrorCode::kIo, "failed writing '" + path.string() + "'");
}

std::vector<ParamPoint> read_points(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::kIo, "cannot read '" + path + "'");
  std::vector<ParamPoint> pts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> c;
    try {
      c = parse_coords(line, "line");
    } catch (const Error&) {
      raise(ErrorCode::kParse, path + ":" + std::to_string(lineno) + ": malformed point '" +
                                   line + "'");
    }
    if (!pts.empty() && c.size() != pts.front().dim()) {
      raise(ErrorCode::kParse, path + ":" + std::to_string(lineno) + ": expected " +
                                   std::to_string(pts.front().dim()) + " coordinates, got " +
                                   std::to_string(c.size()));
    }
    pts.emplace_back(std::move(c));
  }
  if (pts.empty()) raise(ErrorCode::kParse, path + ": no points");
  return pts;
}

struct EvalArgs {
  std::string generator, x, y;
  DivFlags div;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const auto x = parse_coords(a.x, "--x");
  const auto y = parse_coords(a.y, "--y");
  const auto f = make_builtin(a.generator, x.size());
  const auto d = resolve_divergence(a.div.spec(), f);
  out << fmt12(d(ParamPoint(x), ParamPoint(y))) << '\n';
  return kOk;
}

struct SweepArgs {
  std::string generator, x, y, out, svg;
  int grid = 0;
  unsigned threads = 0;
  DivFlags div;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const ParamPoint x(parse_coords(a.x, "--x"));
  const ParamPoint y(parse_coords(a.y, "--y"));
  const auto f = make_builtin(a.generator, x.dim());
  const auto grid = SweepGrid::uniform(a.grid);
  const auto rows = sweep(f, x, y, grid, a.div.spec(), a.threads);

  std::string csv = "alpha,beta,value\n";
  for (const auto& r : rows) {
    csv += roundtrip(r.alpha) + ',' + roundtrip(r.beta) + ',' + fmt12(r.value) + '\n';
  }
  if (f.has_gradient()) csv += "# bregman=" + fmt12(bregman(f, x, y)) + '\n';
  write_file(a.out, csv);
  if (!a.svg.empty()) {
    write_file(a.svg, sweep_heatmap_svg(grid, rows, a.div.id + " on " + a.generator));
  }
  out << "wrote " << rows.size() << " rows to " << a.out << '\n';
  return kOk;
}

struct ClusterArgs {
  std::string input, generator, out_dir = ".";
  std::size_t k = 2;
  std::uint64_t seed = 0;
  int max_iters = 100;
  DivFlags div;
};

int cmd_cluster(const ClusterArgs& a, std::ostream& out) {
  const auto pts = read_points(a.input);
  const auto f = make_builtin(a.generator, pts.front().dim());
  ClusterConfig cfg;
  cfg.k = a.k;
  cfg.seed = a.seed;
  cfg.max_iters = a.max_iters;
  cfg.divergence = a.div.spec();
  const auto res = kmeans(pts, f, cfg);

  std::string csv = "index,cluster\n";
  for (std::size_t i = 0; i < res.assignments.size(); ++i) {
    csv += std::to_string(i) + ',' + std::to_string(res.assignments[i]) + '\n';
  }
  nlohmann::ordered_json summary;
  summary["objective"] = res.objective_trace.back();
  summary["iterations"] = res.iterations;
  summary["centers"] = nlohmann::json::array();
  for (const auto& c : res.centers) summary["centers"].push_back(c.vec());
  summary["seed"] = a.seed;

  const std::filesystem::path dir(a.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) raise(ErrorCode::kIo, "cannot create '" + a.out_dir + "': " + ec.message());
  write_file(dir / "assignments.csv", csv);
  write_file(dir / "summary.json", summary.dump(2) + '\n');
  out << "objective " << fmt12(res.objective_trace.back()) << " after " << res.iterations
      << " iterations\n";
  return kOk;
}

struct VerifyArgs {
  std::string suite;
  int trials = 200;
  std::uint64_t seed = 0;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  std::vector<std::string_view> names;
  if (a.suite.empty()) {
    for (auto n : verify::suite_names()) names.push_back(n);
  } else if (verify::is_suite(a.suite)) {
    names.push_back(a.suite);
  } else {
    raise(ErrorCode::kUsage, "unknown suite '" + a.suite + "'");
  }
  bool all = true;
  for (auto n : names) {
    const auto r = verify::run_suite(n, {a.trials, a.seed});
    all = all && r.passed;
    char worst[32];
    std::snprintf(worst, sizeof worst, "%.3g", r.worst);
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " worst=" << worst << " (" << r.detail
        << ")\n";
    for (const auto& note : r.notes) out << "     note: " << note << '\n';
  }
  return all ? kOk : kMathError;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Bregman chord divergences and friends", "chordiv");
  app.require_subcommand(1);

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "evaluate one divergence");
  eval->add_option("--generator", ev.generator, "built-in generator")->required();
  eval->add_option("--x", ev.x, "first point, comma-separated")->required();
  eval->add_option("--y", ev.y, "second point, comma-separated")->required();
  ev.div.attach(eval, "bregman");

  SweepArgs sw;
  auto* swp = app.add_subcommand("sweep", "tabulate a divergence over an (alpha, beta) grid");
  swp->add_option("--generator", sw.generator)->required();
  swp->add_option("--x", sw.x)->required();
  swp->add_option("--y", sw.y)->required();
  swp->add_option("--grid", sw.grid, "N: axis values i/(N+1), plus beta = 1")
      ->required()
      ->check(CLI::PositiveNumber);
  swp->add_option("--out", sw.out, "CSV path")->required();
  swp->add_option("--svg", sw.svg, "optional heatmap path");
  swp->add_option("--threads", sw.threads, "0 = hardware concurrency");
  sw.div.attach(swp, "bregman_chord");

  ClusterArgs cl;
  auto* clu = app.add_subcommand("cluster", "k-means under a divergence");
  clu->add_option("--input", cl.input, "points CSV, one point per line")->required();
  clu->add_option("--k", cl.k)->check(CLI::PositiveNumber)->capture_default_str();
  clu->add_option("--generator", cl.generator)->required();
  clu->add_option("--seed", cl.seed)->capture_default_str();
  clu->add_option("--max-iters", cl.max_iters)->check(CLI::PositiveNumber)->capture_default_str();
  clu->add_option("--out-dir", cl.out_dir)->capture_default_str();
  cl.div.attach(clu, "bregman");

  VerifyArgs vf;
  auto* ver = app.add_subcommand("verify", "run the property suites");
  ver->add_option("--suite", vf.suite, "one suite; all when omitted");
  ver->add_option("--trials", vf.trials)->check(CLI::PositiveNumber)->capture_default_str();
  ver->add_option("--seed", vf.seed)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*eval) return cmd_eval(ev, out);
    if (*swp) return cmd_sweep(sw, out);
    if (*clu) return cmd_cluster(cl, out);
    return cmd_verify(vf, out);
  } catch (const Error& e) {
    err << "chordiv: " << e.what() << '\n';
    return exit_for(e.code());
  }
}

}  // namespace chordiv::cli
