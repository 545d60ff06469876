#include <doctest.h>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rhd/cli.hpp"

using namespace rhd;
using namespace rhd::cli;
namespace fs = std::filesystem;

namespace {

// Fresh directory under the system temp dir, removed on scope exit.
struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) {
    path = fs::temp_directory_path() / ("rhd_test_" + name + "_" + std::to_string(std::random_device{}()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("flags and defaults") {
  const RunConfig d = parse_config({"run", "--problem", "rp1"});
  CHECK(d.command == Command::run);
  CHECK(d.problem == "rp1");
  CHECK(d.nx == 0);
  CHECK(d.flux == FluxMode::es);
  CHECK(d.dissipation == DissipationKind::lax_friedrichs);
  CHECK(d.cfl == 0.4);
  CHECK_FALSE(d.t_end.has_value());
  CHECK_FALSE(d.accuracy_dt.has_value());
  CHECK(d.out_dir == "out");

  const RunConfig c = parse_config({"converge", "--problem", "acc2d", "--n", "40", "--ny", "30",
                                    "--flux", "ec", "--diss", "roe", "--cfl", "0.2", "--t-end",
                                    "1.5", "--levels", "20, 40,80", "--no-accuracy-dt"});
  CHECK(c.command == Command::converge);
  CHECK(c.nx == 40);
  CHECK(c.ny == 30);
  CHECK(c.flux == FluxMode::ec);
  CHECK(c.dissipation == DissipationKind::roe);
  CHECK(c.cfl == 0.2);
  CHECK(*c.t_end == 1.5);
  CHECK(c.levels == std::vector<int>{20, 40, 80});
  CHECK(*c.accuracy_dt == false);
  CHECK(parse_config({"list"}).command == Command::list);
}

TEST_CASE("invalid command lines raise usage errors") {
  const std::vector<std::vector<std::string>> bad = {
      {},
      {"run"},
      {"run", "--problem", "sod"},
      {"run", "--problem", "rp1", "--flux", "hll"},
      {"run", "--problem", "rp1", "--diss", "rusanov"},
      {"run", "--problem", "rp1", "--cfl", "1.5"},
      {"run", "--problem", "rp1", "--cfl", "0"},
      {"run", "--problem", "rp1", "--n", "5"},
      {"run", "--problem", "rp1", "--n", "abc"},
      {"run", "--problem", "rp1", "--t-end", "-1"},
      {"run", "--problem", "rp1", "--simd", "sse"},
      {"converge", "--problem", "acc1d", "--levels", "20,x"},
      {"converge", "--problem", "acc1d", "--levels", "20,4"},
      {"run", "--problem", "sb", "--bubble-rho", "0"},
      {"run", "--problem", "rp1", "--bogus", "1"},
  };
  for (const auto& args : bad) CHECK_THROWS_AS(parse_config(args), UsageError);
  CHECK_THROWS_AS(parse_config({"--help"}), HelpRequested);
}

TEST_CASE("configuration text") {
  const auto kv = parse_config_text("# header\n  n = 40  \n\nflux=ec # trailing\r\nout=a b\n");
  CHECK(kv.size() == 3);
  CHECK(kv.at("n") == "40");
  CHECK(kv.at("flux") == "ec");
  CHECK(kv.at("out") == "a b");
  CHECK_THROWS_AS(parse_config_text("n 40\n"), UsageError);
}

TEST_CASE("command-line flags override the configuration file") {
  TempDir tmp("config");
  const fs::path cfg_path = tmp.path / "run.cfg";
  std::ofstream(cfg_path) << "problem = rp2\nn = 50\ncfl = 0.3\naccuracy-dt = true\nt-end = 0.2\n";
  const RunConfig c = parse_config({"run", "--config", cfg_path.string(), "--n", "40"});
  CHECK(c.problem == "rp2");
  CHECK(c.nx == 40);
  CHECK(c.cfl == 0.3);
  CHECK(*c.accuracy_dt == true);
  CHECK(*c.t_end == 0.2);
  CHECK(*c.config_file == cfg_path);

  std::ofstream(cfg_path) << "problem = rp2\nresolution = 50\n";
  CHECK_THROWS_AS(parse_config({"run", "--config", cfg_path.string()}), UsageError);
  std::ofstream(cfg_path) << "problem = rp2\nn = many\n";
  CHECK_THROWS_AS(parse_config({"run", "--config", cfg_path.string()}), UsageError);
  CHECK_THROWS_AS(parse_config({"run", "--config", (tmp.path / "missing.cfg").string()}), IoError);
}

TEST_CASE("number formatting round-trips") {
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1e-6) == "1e-06");
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-300, 300);
  for (int k = 0; k < 2000; ++k) {
    const double v = std::ldexp(mant(rng), expo(rng));
    const std::string s = format_number(v);
    double back = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    REQUIRE(back == v);
  }
}

TEST_CASE("monotone error check") {
  auto row = [](int n, double e) { return ConvergenceRow{n, ErrorNorms{e, e, e}, {}, {}, {}}; };
  CHECK(errors_monotone({row(20, 1.0), row(40, 0.1), row(80, 0.01)}));
  CHECK_FALSE(errors_monotone({row(20, 1.0), row(40, 0.1), row(80, 0.1)}));
  auto mixed = row(40, 0.1);
  mixed.err.linf = 2.0;
  CHECK_FALSE(errors_monotone({row(20, 1.0), mixed}));
  CHECK(errors_monotone({}));
}

TEST_CASE("snapshot rows carry self-consistent conservative columns") {
  TempDir tmp("snapshot");
  const EosParams eos(5.0 / 3.0);
  Field<1> f(Grid::make_1d(0.0, 1.0, 6));
  for (int i = 0; i < 6; ++i) f.w(i) = PrimState<1>{1.0 + i, {0.1 * i}, 2.0};
  emit_snapshot<1>(f, eos, tmp.path / "s.csv");
  const auto rows = lines(slurp(tmp.path / "s.csv"));
  REQUIRE(rows.size() == 7);
  CHECK(rows[0] == "x,rho,u,p,D,m,E");
  const auto U = prim_to_cons(f.w(3), eos);
  CHECK(rows[4] == format_number(f.grid.xc(3)) + ",4,0.30000000000000004,2," + format_number(U.q[0]) +
                       "," + format_number(U.q[1]) + "," + format_number(U.q[2]));
  CHECK_THROWS_AS(emit_states<1>(f.grid, std::vector<PrimState<1>>(3), eos, tmp.path / "x.csv"),
                  std::invalid_argument);
  CHECK_THROWS_AS(emit_snapshot<1>(f, eos, tmp.path / "nodir" / "s.csv"), IoError);
}

TEST_CASE("2D snapshots are x-major") {
  TempDir tmp("snapshot2d");
  const EosParams eos;
  Field<2> f(Grid::make_2d(0.0, 1.0, 6, 0.0, 1.0, 7));
  for (int j = 0; j < 7; ++j) {
    for (int i = 0; i < 6; ++i) f.w(i, j) = PrimState<2>{1.0 + i + 10.0 * j, {0.0, 0.0}, 1.0};
  }
  emit_snapshot<2>(f, eos, tmp.path / "s.csv");
  const auto rows = lines(slurp(tmp.path / "s.csv"));
  REQUIRE(rows.size() == 43);
  CHECK(rows[0] == "x,y,rho,u,v,p,D,mx,my,E");
  // second row: i = 0, j = 1
  CHECK(rows[2].rfind(format_number(f.grid.xc(0)) + "," + format_number(f.grid.yc(1)) + ",11,", 0) == 0);
}

TEST_CASE("list prints the catalogue") {
  std::ostringstream out, err;
  CHECK(run_cli({"list"}, out, err) == kOk);
  const auto rows = lines(out.str());
  REQUIRE(rows.size() == catalogue().size());
  CHECK(rows[1].rfind("rp1\t1D\tt_end=0.4\t", 0) == 0);
  CHECK(err.str().empty());
}

TEST_CASE("exit codes") {
  TempDir tmp("exit");
  std::ostringstream out, err;
  CHECK(run_cli({"run", "--problem", "nope"}, out, err) == kUsage);
  CHECK(run_cli({"--help"}, out, err) == kOk);
  CHECK(out.str().find("run") != std::string::npos);

  // output path blocked by a regular file
  const fs::path blocker = tmp.path / "file";
  std::ofstream(blocker) << "x";
  CHECK(run_cli({"run", "--problem", "acc1d", "--n", "20", "--t-end", "0.01", "--out",
                 (blocker / "sub").string()},
                out, err) == kIo);

  // a step that leaves the admissible set
  err.str("");
  CHECK(run_cli({"run", "--problem", "rp1", "--n", "40", "--cfl", "1", "--flux", "ec", "--out",
                 tmp.path.string()},
                out, err) == kNumerical);
  CHECK(err.str().rfind("numerical failure", 0) == 0);
}

TEST_CASE("run writes snapshots, entropy trace and manifest") {
  TempDir tmp("run");
  std::ostringstream out, err;
  REQUIRE(run_cli({"run", "--problem", "acc1d", "--n", "20", "--t-end", "0.02", "--snap-dt",
                   "0.01", "--out", tmp.path.string()},
                  out, err) == kOk);
  for (const char* name : {"acc1d_snap_0000.csv", "acc1d_snap_0001.csv", "acc1d_snap_0002.csv",
                           "acc1d_entropy.csv", "acc1d_run_manifest.txt"}) {
    CHECK(fs::exists(tmp.path / name));
  }
  CHECK_FALSE(fs::exists(tmp.path / "acc1d_snap_0003.csv"));
  CHECK(lines(slurp(tmp.path / "acc1d_snap_0000.csv")).size() == 21);
  const auto entropy = lines(slurp(tmp.path / "acc1d_entropy.csv"));
  CHECK(entropy[0] == "t,total_entropy");
  const std::string manifest = slurp(tmp.path / "acc1d_run_manifest.txt");
  for (const char* key : {"command=run\n", "problem=acc1d\n", "nx=20\n", "flux=es\n", "diss=lf\n",
                          "t-final=0.02\n", "error-rho.l1=", "wall-time-seconds="}) {
    CHECK(manifest.find(key) != std::string::npos);
  }
}

TEST_CASE("2D run also writes schlieren images") {
  TempDir tmp("run2d");
  std::ostringstream out, err;
  REQUIRE(run_cli({"run", "--problem", "2drp1", "--n", "12", "--t-end", "0.01", "--out",
                   tmp.path.string()},
                  out, err) == kOk);
  CHECK(fs::exists(tmp.path / "2drp1_schlieren_0000.csv"));
  CHECK(fs::exists(tmp.path / "2drp1_schlieren_0001.csv"));
  CHECK(lines(slurp(tmp.path / "2drp1_snap_0001.csv")).size() == 145);
}

TEST_CASE("reference and converge commands") {
  TempDir tmp("ref");
  std::ostringstream out, err;
  REQUIRE(run_cli({"reference", "--problem", "rp3", "--n", "20", "--fine-n", "60", "--t-end",
                   "0.05", "--out", tmp.path.string()},
                  out, err) == kOk);
  CHECK(lines(slurp(tmp.path / "rp3_reference.csv")).size() == 21);
  CHECK(slurp(tmp.path / "rp3_reference_manifest.txt").find("fine-n=60\n") != std::string::npos);
  CHECK(run_cli({"reference", "--problem", "rp3", "--n", "20", "--fine-n", "50", "--out",
                 tmp.path.string()},
                out, err) == kUsage);

  REQUIRE(run_cli({"converge", "--problem", "acc1d", "--levels", "20,40", "--t-end", "0.02",
                   "--out", tmp.path.string()},
                  out, err) == kOk);
  const auto table = lines(slurp(tmp.path / "acc1d_convergence.csv"));
  REQUIRE(table.size() == 3);
  CHECK(table[0] == "n,l1,order1,l2,order2,linf,orderinf");
  CHECK(table[1].rfind("20,", 0) == 0);
  CHECK(table[1].find(",,") != std::string::npos);
  CHECK(slurp(tmp.path / "acc1d_converge_manifest.txt").find("monotone-error-decrease=true") !=
        std::string::npos);
}
