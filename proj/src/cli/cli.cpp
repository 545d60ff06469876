#include "rhd/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "rhd/simd.hpp"

namespace rhd::cli {

namespace {

const std::map<std::string, FluxMode> kFluxNames = {
    {"ec", FluxMode::ec}, {"es", FluxMode::es}, {"llf", FluxMode::llf1}};
const std::map<std::string, DissipationKind> kDissNames = {
    {"roe", DissipationKind::roe}, {"lf", DissipationKind::lax_friedrichs}};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw UsageError("invalid number for " + key + ": '" + v + "'");
  }
  return out;
}

int parse_int(const std::string& key, const std::string& v) {
  int out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw UsageError("invalid integer for " + key + ": '" + v + "'");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw UsageError("invalid boolean for " + key + ": '" + v + "'");
}

std::vector<int> parse_levels(const std::string& key, const std::string& v) {
  std::vector<int> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(key, trim(item)));
  return out;
}

template <class Enum>
Enum parse_enum(const std::map<std::string, Enum>& names, const std::string& key,
                const std::string& v) {
  const auto it = names.find(v);
  if (it == names.end()) throw UsageError("invalid value for " + key + ": '" + v + "'");
  return it->second;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

void close_out(std::ofstream& out, const std::filesystem::path& path) {
  out.close();
  if (!out) throw IoError("error while writing " + path.string());
}

template <int Dim>
void write_state_row(std::ostream& os, const Grid& g, int i, int j, const PrimState<Dim>& w,
                     const EosParams& eos) {
  const ConsState<Dim> U = prim_to_cons(w, eos);
  os << format_number(g.xc(i));
  if constexpr (Dim == 2) os << ',' << format_number(g.yc(j));
  os << ',' << format_number(w.rho);
  for (int l = 0; l < Dim; ++l) os << ',' << format_number(w.vel[l]);
  os << ',' << format_number(w.p);
  for (double q : U.q) os << ',' << format_number(q);
  os << '\n';
}

template <int Dim>
const char* state_header() {
  return Dim == 1 ? "x,rho,u,p,D,m,E\n" : "x,y,rho,u,v,p,D,mx,my,E\n";
}

std::string opt_number(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

}  // namespace

std::string to_string(FluxMode mode) {
  for (const auto& [name, m] : kFluxNames) {
    if (m == mode) return name;
  }
  return "?";
}

std::string to_string(DissipationKind kind) {
  for (const auto& [name, k] : kDissNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line " + std::to_string(lineno) + " is not key=value");
    }
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

RunConfig parse_config(const std::vector<std::string>& args) {
  RunConfig cfg;
  CLI::App app{"rhd: relativistic hydrodynamics solver"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string problem, flux, diss, out_dir, levels, simd_level, config_path;
  int n = 0, ny = 0, fine_n = 0;
  double cfl = 0.4, t_end = 0.0, snap_dt = 0.0, bubble_rho = cfg.bubble_rho;
  bool accuracy = false;

  // Long names double as configuration-file keys.
  std::map<std::string, CLI::Option*> opts;
  opts["problem"] = app.add_option("--problem", problem, "catalogue problem name");
  opts["n"] = app.add_option("--n", n, "cells in x (and y unless --ny is given)");
  opts["ny"] = app.add_option("--ny", ny, "cells in y");
  opts["flux"] = app.add_option("--flux", flux, "ec | es | llf");
  opts["diss"] = app.add_option("--diss", diss, "roe | lf");
  opts["cfl"] = app.add_option("--cfl", cfl, "Courant number");
  opts["t-end"] = app.add_option("--t-end", t_end, "final time");
  opts["out"] = app.add_option("--out", out_dir, "output directory");
  opts["snap-dt"] = app.add_option("--snap-dt", snap_dt, "snapshot interval (0: first/last)");
  opts["accuracy-dt"] =
      app.add_flag("--accuracy-dt,!--no-accuracy-dt", accuracy, "cap dt at CFL dx^(5/3)");
  opts["fine-n"] = app.add_option("--fine-n", fine_n, "reference resolution");
  opts["levels"] = app.add_option("--levels", levels, "comma-separated resolutions");
  opts["bubble-rho"] = app.add_option("--bubble-rho", bubble_rho, "shock-bubble density");
  opts["simd"] = app.add_option("--simd", simd_level, "scalar | avx2 | neon");
  app.add_option("--config", config_path, "key=value configuration file");

  CLI::App* run = app.add_subcommand("run", "run one simulation");
  CLI::App* converge = app.add_subcommand("converge", "resolution sweep against the exact solution");
  CLI::App* reference = app.add_subcommand("reference", "fine-mesh first-order reference");
  CLI::App* list = app.add_subcommand("list", "list the problem catalogue");
  for (CLI::App* sub : {run, converge, reference, list}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (*run) cfg.command = Command::run;
  if (*converge) cfg.command = Command::converge;
  if (*reference) cfg.command = Command::reference;
  if (*list) cfg.command = Command::list;

  // File values apply only to keys not given on the command line.
  std::map<std::string, std::string> file;
  if (!config_path.empty()) {
    cfg.config_file = config_path;
    file = parse_config_text(read_file(config_path));
    for (const auto& [key, value] : file) {
      if (!opts.count(key)) throw UsageError("unknown configuration key '" + key + "'");
    }
  }
  auto given = [&](const std::string& key) { return opts.at(key)->count() > 0; };
  auto from_file = [&](const std::string& key) -> const std::string* {
    if (given(key)) return nullptr;
    const auto it = file.find(key);
    return it == file.end() ? nullptr : &it->second;
  };

  if (auto v = from_file("problem")) problem = *v;
  if (auto v = from_file("n")) n = parse_int("n", *v);
  if (auto v = from_file("ny")) ny = parse_int("ny", *v);
  if (auto v = from_file("flux")) flux = *v;
  if (auto v = from_file("diss")) diss = *v;
  if (auto v = from_file("cfl")) cfl = parse_double("cfl", *v);
  if (auto v = from_file("out")) out_dir = *v;
  if (auto v = from_file("snap-dt")) snap_dt = parse_double("snap-dt", *v);
  if (auto v = from_file("fine-n")) fine_n = parse_int("fine-n", *v);
  if (auto v = from_file("levels")) levels = *v;
  if (auto v = from_file("bubble-rho")) bubble_rho = parse_double("bubble-rho", *v);
  if (auto v = from_file("simd")) simd_level = *v;
  bool t_end_set = given("t-end");
  if (auto v = from_file("t-end")) {
    t_end = parse_double("t-end", *v);
    t_end_set = true;
  }
  bool accuracy_set = given("accuracy-dt");
  if (auto v = from_file("accuracy-dt")) {
    accuracy = parse_bool("accuracy-dt", *v);
    accuracy_set = true;
  }

  if (cfg.command != Command::list) {
    if (problem.empty()) throw UsageError("--problem is required");
    if (!find_problem(problem)) throw UsageError("unknown problem '" + problem + "'");
  }
  cfg.problem = problem;
  if (n < 0 || ny < 0 || fine_n < 0) throw UsageError("resolutions must be positive");
  if ((n > 0 && n < 2 * Grid::ghost) || (ny > 0 && ny < 2 * Grid::ghost)) {
    throw UsageError("resolutions must be at least " + std::to_string(2 * Grid::ghost));
  }
  cfg.nx = n;
  cfg.ny = ny;
  if (!flux.empty()) cfg.flux = parse_enum(kFluxNames, "flux", flux);
  if (!diss.empty()) cfg.dissipation = parse_enum(kDissNames, "diss", diss);
  if (!(cfl > 0.0 && cfl <= 1.0)) throw UsageError("cfl must lie in (0, 1]");
  cfg.cfl = cfl;
  if (t_end_set) {
    if (!(t_end >= 0.0)) throw UsageError("t-end must be non-negative");
    cfg.t_end = t_end;
  }
  if (!out_dir.empty()) cfg.out_dir = out_dir;
  if (!(snap_dt >= 0.0)) throw UsageError("snap-dt must be non-negative");
  cfg.snap_dt = snap_dt;
  if (accuracy_set) cfg.accuracy_dt = accuracy;
  cfg.fine_n = fine_n;
  if (!levels.empty()) {
    cfg.levels = parse_levels("levels", levels);
    for (int l : cfg.levels) {
      if (l < 2 * Grid::ghost) throw UsageError("levels must be at least 6");
    }
  }
  if (!(bubble_rho > 0.0)) throw UsageError("bubble-rho must be positive");
  cfg.bubble_rho = bubble_rho;
  if (!simd_level.empty() && simd_level != "scalar" && simd_level != "avx2" &&
      simd_level != "neon") {
    throw UsageError("invalid value for simd: '" + simd_level + "'");
  }
  cfg.simd = simd_level;
  return cfg;
}

template <int Dim>
void emit_states(const Grid& grid, const std::vector<PrimState<Dim>>& states,
                 const EosParams& eos, const std::filesystem::path& path) {
  if (states.size() != grid.interior_count()) throw std::invalid_argument("state count mismatch");
  std::ofstream os = open_out(path);
  os << state_header<Dim>();
  // x-major: x is the outer (slow) index
  for (int i = 0; i < grid.nx; ++i) {
    for (int j = 0; j < grid.ny; ++j) {
      write_state_row<Dim>(os, grid, i, j, states[static_cast<std::size_t>(j) * grid.nx + i], eos);
    }
  }
  close_out(os, path);
}

template <int Dim>
void emit_snapshot(const Field<Dim>& field, const EosParams& eos,
                   const std::filesystem::path& path) {
  const Grid& g = field.grid;
  std::vector<PrimState<Dim>> states;
  states.reserve(g.interior_count());
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) states.push_back(field.w(i, j));
  }
  emit_states<Dim>(g, states, eos, path);
}

void emit_convergence_table(const std::vector<ConvergenceRow>& rows,
                            const std::filesystem::path& path) {
  std::ofstream os = open_out(path);
  os << "n,l1,order1,l2,order2,linf,orderinf\n";
  for (const ConvergenceRow& r : rows) {
    os << r.n << ',' << format_number(r.err.l1) << ',' << opt_number(r.order_l1) << ','
       << format_number(r.err.l2) << ',' << opt_number(r.order_l2) << ','
       << format_number(r.err.linf) << ',' << opt_number(r.order_linf) << '\n';
  }
  close_out(os, path);
}

void emit_entropy_trace(const EntropyTrace& trace, const std::filesystem::path& path) {
  std::ofstream os = open_out(path);
  os << "t,total_entropy\n";
  for (const EntropySample& s : trace.samples) {
    os << format_number(s.t) << ',' << format_number(s.total) << '\n';
  }
  close_out(os, path);
}

void emit_schlieren(const Grid& grid, const std::vector<double>& values,
                    const std::filesystem::path& path) {
  std::ofstream os = open_out(path);
  os << (grid.dim == 2 ? "x,y,schlieren\n" : "x,schlieren\n");
  for (int i = 0; i < grid.nx; ++i) {
    for (int j = 0; j < grid.ny; ++j) {
      os << format_number(grid.xc(i));
      if (grid.dim == 2) os << ',' << format_number(grid.yc(j));
      os << ',' << format_number(values[static_cast<std::size_t>(j) * grid.nx + i]) << '\n';
    }
  }
  close_out(os, path);
}

bool errors_monotone(const std::vector<ConvergenceRow>& rows) {
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const ErrorNorms& a = rows[k - 1].err;
    const ErrorNorms& b = rows[k].err;
    if (!(b.l1 < a.l1 && b.l2 < a.l2 && b.linf < a.linf)) return false;
  }
  return true;
}

namespace {

std::string command_name(Command c) {
  switch (c) {
    case Command::run: return "run";
    case Command::converge: return "converge";
    case Command::reference: return "reference";
    case Command::list: return "list";
  }
  return "?";
}

// Manifest lines are appended in a fixed order; wall time is the only entry
// that differs between identical runs.
class Manifest {
 public:
  void add(const std::string& key, const std::string& value) {
    lines_ += key + "=" + value + "\n";
  }
  void add(const std::string& key, double value) { add(key, format_number(value)); }
  void add(const std::string& key, long value) { add(key, std::to_string(value)); }
  void add(const std::string& key, int value) { add(key, std::to_string(value)); }
  void add(const std::string& key, bool value) { add(key, std::string(value ? "true" : "false")); }

  void write(const std::filesystem::path& path) const {
    std::ofstream os = open_out(path);
    os << lines_;
    close_out(os, path);
  }

 private:
  std::string lines_;
};

struct Setup {
  ProblemSpec problem;
  Grid grid;
  SchemeConfig scheme;
  TimeControls controls;
};

Setup make_setup(const RunConfig& cfg) {
  CatalogueOptions opts;
  opts.shock_bubble.bubble_rho = cfg.bubble_rho;
  Setup s{*find_problem(cfg.problem, opts), {}, {}, {}};
  s.grid = make_grid(s.problem, cfg.nx, cfg.ny);
  s.scheme.flux_mode = cfg.flux;
  s.scheme.dissipation = cfg.dissipation;
  s.scheme.eos = EosParams(s.problem.gamma);
  s.controls.cfl = cfg.cfl;
  s.controls.t_end = cfg.t_end.value_or(s.problem.t_end);
  s.controls.accuracy_mode = cfg.accuracy_dt.value_or(s.problem.accuracy_test);
  s.controls.snapshot_dt = cfg.snap_dt;
  return s;
}

void add_config(Manifest& m, const RunConfig& cfg, const Setup& s) {
  m.add("command", command_name(cfg.command));
  m.add("problem", s.problem.name);
  m.add("dim", s.problem.dim);
  m.add("nx", s.grid.nx);
  m.add("ny", s.grid.ny);
  m.add("flux", to_string(cfg.flux));
  m.add("diss", to_string(cfg.dissipation));
  m.add("gamma", s.problem.gamma);
  m.add("cfl", s.controls.cfl);
  m.add("t-end", s.controls.t_end);
  m.add("accuracy-dt", s.controls.accuracy_mode);
  m.add("snap-dt", s.controls.snapshot_dt);
  m.add("bubble-rho", cfg.bubble_rho);
  m.add("simd", std::string(simd::to_string(simd::active())));
}

std::string stem(const Setup& s) { return s.problem.name; }

std::string indexed(const std::string& base, int k, const std::string& ext) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d", k);
  return base + "_" + buf + ext;
}

template <int Dim>
int do_run(const RunConfig& cfg, const Setup& s, Manifest& m, std::ostream& out) {
  const std::filesystem::path dir = cfg.out_dir;
  int snap = 0;
  std::vector<std::pair<std::string, double>> written;
  auto callback = [&](const Field<Dim>& field, double t) {
    const std::string name = indexed(stem(s) + "_snap", snap, ".csv");
    emit_snapshot<Dim>(field, s.scheme.eos, dir / name);
    if constexpr (Dim == 2) {
      Field<Dim> copy = field;
      const std::string sch = indexed(stem(s) + "_schlieren", snap, ".csv");
      emit_schlieren(copy.grid, schlieren(copy, s.problem.bc), dir / sch);
    }
    written.emplace_back(name, t);
    ++snap;
  };

  const RunResult<Dim> r = run<Dim>(s.problem, s.grid, s.scheme, s.controls, callback);
  emit_entropy_trace(r.trace, dir / (stem(s) + "_entropy.csv"));

  m.add("steps", r.steps);
  m.add("t-final", r.t);
  const StateVec<Dim> total = total_conserved(r.field);
  for (int c = 0; c < Dim + 2; ++c) m.add("total-conserved." + std::to_string(c), total[c]);
  m.add("entropy-initial", r.trace.samples.front().total);
  m.add("entropy-final", r.trace.samples.back().total);
  for (std::size_t k = 0; k < written.size(); ++k) {
    m.add("snapshot." + std::to_string(k), written[k].first + " t=" + format_number(written[k].second));
  }
  if (s.problem.exact) {
    const ErrorNorms e = error_norms(interior_density(r.field), [&] {
      std::vector<double> ex;
      for (int j = 0; j < s.grid.ny; ++j) {
        for (int i = 0; i < s.grid.nx; ++i) {
          ex.push_back(s.problem.exact(s.grid.xc(i), Dim == 2 ? s.grid.yc(j) : 0.0, r.t).rho);
        }
      }
      return ex;
    }());
    m.add("error-rho.l1", e.l1);
    m.add("error-rho.l2", e.l2);
    m.add("error-rho.linf", e.linf);
  }
  out << s.problem.name << ": " << r.steps << " steps to t=" << format_number(r.t) << ", "
      << written.size() << " snapshots in " << dir.string() << "\n";
  return kOk;
}

template <int Dim>
int do_reference(const RunConfig& cfg, const Setup& s, Manifest& m, std::ostream& out) {
  const int fine_n = cfg.fine_n > 0 ? cfg.fine_n : 20 * s.grid.nx;
  m.add("fine-n", fine_n);
  const std::vector<PrimState<Dim>> ref =
      reference_solution<Dim>(s.problem, fine_n, s.grid, s.controls);
  const std::string name = stem(s) + "_reference.csv";
  emit_states<Dim>(s.grid, ref, s.scheme.eos, cfg.out_dir / name);
  m.add("reference", name);
  out << s.problem.name << ": reference from " << fine_n << " cells written to "
      << (cfg.out_dir / name).string() << "\n";
  return kOk;
}

int do_converge(const RunConfig& cfg, const Setup& s, Manifest& m, std::ostream& out) {
  std::vector<int> levels = cfg.levels;
  if (levels.empty()) {
    levels = s.problem.dim == 1 ? std::vector<int>{20, 40, 80, 160, 320}
                                : std::vector<int>{20, 40, 80};
  }
  std::string joined;
  for (int l : levels) joined += (joined.empty() ? "" : ",") + std::to_string(l);
  m.add("levels", joined);
  const std::vector<ConvergenceRow> rows =
      convergence_study(s.problem, levels, s.scheme, s.controls);
  const std::string name = stem(s) + "_convergence.csv";
  emit_convergence_table(rows, cfg.out_dir / name);
  const bool monotone = errors_monotone(rows);
  m.add("convergence", name);
  m.add("monotone-error-decrease", monotone);
  out << "n        l1          order  l2          order  linf        order\n";
  for (const ConvergenceRow& r : rows) {
    char line[160];
    auto o = [](const std::optional<double>& v) { return v ? *v : 0.0; };
    std::snprintf(line, sizeof(line), "%-8d %.3e  %5.2f  %.3e  %5.2f  %.3e  %5.2f\n", r.n,
                  r.err.l1, o(r.order_l1), r.err.l2, o(r.order_l2), r.err.linf, o(r.order_linf));
    out << line;
  }
  if (!monotone) out << "warning: errors do not decrease monotonically\n";
  return kOk;
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.simd.empty()) {
    const simd::Level level = cfg.simd == "avx2"   ? simd::Level::avx2
                              : cfg.simd == "neon" ? simd::Level::neon
                                                   : simd::Level::scalar;
    if (!simd::supported(level)) throw UsageError("simd level " + cfg.simd + " not supported");
    simd::set_active(level);
  }
  if (cfg.command == Command::list) {
    for (const ProblemSpec& p : catalogue()) {
      out << p.name << "\t" << p.dim << "D\tt_end=" << format_number(p.t_end) << "\t"
          << p.summary << "\n";
    }
    return kOk;
  }

  const Setup s = make_setup(cfg);
  std::error_code ec;
  std::filesystem::create_directories(cfg.out_dir, ec);
  if (ec) throw IoError("cannot create " + cfg.out_dir.string() + ": " + ec.message());

  Manifest m;
  add_config(m, cfg, s);
  const auto t0 = std::chrono::steady_clock::now();
  int code = kOk;
  switch (cfg.command) {
    case Command::run:
      code = s.problem.dim == 1 ? do_run<1>(cfg, s, m, out) : do_run<2>(cfg, s, m, out);
      break;
    case Command::reference:
      code = s.problem.dim == 1 ? do_reference<1>(cfg, s, m, out)
                                : do_reference<2>(cfg, s, m, out);
      break;
    case Command::converge:
      code = do_converge(cfg, s, m, out);
      break;
    case Command::list:
      break;
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  m.add("wall-time-seconds", wall);
  m.write(cfg.out_dir / (stem(s) + "_" + command_name(cfg.command) + "_manifest.txt"));
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(parse_config(args), out);
  } catch (const HelpRequested& e) {
    out << e.what();
    return kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "io error: " << e.what() << "\n";
    return kIo;
  } catch (const NonPhysicalState& e) {
    err << "numerical failure: " << e.what();
    if (e.stage() >= 0) err << " (stage " << e.stage() << ")";
    err << "\n";
    return kNumerical;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  }
}

template void emit_snapshot<1>(const Field<1>&, const EosParams&, const std::filesystem::path&);
template void emit_snapshot<2>(const Field<2>&, const EosParams&, const std::filesystem::path&);
template void emit_states<1>(const Grid&, const std::vector<PrimState<1>>&, const EosParams&,
                             const std::filesystem::path&);
template void emit_states<2>(const Grid&, const std::vector<PrimState<2>>&, const EosParams&,
                             const std::filesystem::path&);

}  // namespace rhd::cli
