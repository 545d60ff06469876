#pragma once

// Command-line driver: configuration, CSV emission and the run / converge /
// reference / list subcommands.

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rhd/bench.hpp"
#include "rhd/scheme.hpp"
#include "rhd/timeint.hpp"

namespace rhd::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kNumerical = 2, kIo = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Carries the help text; not an error.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { run, converge, reference, list };

struct RunConfig {
  Command command = Command::run;
  std::string problem;
  int nx = 0;  // 0: problem default
  int ny = 0;
  FluxMode flux = FluxMode::es;
  DissipationKind dissipation = DissipationKind::lax_friedrichs;
  double cfl = 0.4;
  std::optional<double> t_end;  // problem default when unset
  std::filesystem::path out_dir = "out";
  double snap_dt = 0.0;
  std::optional<bool> accuracy_dt;  // problem default when unset
  int fine_n = 0;                   // reference: 0 picks 20 n
  std::vector<int> levels;          // converge: empty picks problem defaults
  double bubble_rho = ShockBubbleParams{}.bubble_rho;
  std::string simd;  // empty: auto-detect
  std::optional<std::filesystem::path> config_file;
};

/// Parses flags and, if --config is given, a key=value file whose keys are the
/// long flag names. Flags override file values; unknown keys, unknown
/// problems and malformed values raise UsageError.
RunConfig parse_config(const std::vector<std::string>& args);

/// Parses the key=value text of a configuration file ('#' starts a comment).
std::map<std::string, std::string> parse_config_text(const std::string& text);

std::string to_string(FluxMode mode);
std::string to_string(DissipationKind kind);

/// Shortest text that reads back to the same double.
std::string format_number(double v);

/// Snapshot CSV: 1D columns x,rho,u,p,D,m,E; 2D columns
/// x,y,rho,u,v,p,D,mx,my,E. Conservative columns are recomputed from the
/// stored primitives so each row is self-consistent. Throws IoError.
template <int Dim>
void emit_snapshot(const Field<Dim>& field, const EosParams& eos,
                   const std::filesystem::path& path);

/// Same layout for primitive states on the interior of `grid`.
template <int Dim>
void emit_states(const Grid& grid, const std::vector<PrimState<Dim>>& states,
                 const EosParams& eos, const std::filesystem::path& path);

/// CSV n,l1,order1,l2,order2,linf,orderinf; missing orders are blank.
void emit_convergence_table(const std::vector<ConvergenceRow>& rows,
                            const std::filesystem::path& path);

/// CSV t,total_entropy.
void emit_entropy_trace(const EntropyTrace& trace, const std::filesystem::path& path);

/// CSV x[,y],schlieren.
void emit_schlieren(const Grid& grid, const std::vector<double>& values,
                    const std::filesystem::path& path);

/// Whether every error norm decreases from row to row.
bool errors_monotone(const std::vector<ConvergenceRow>& rows);

/// Runs the command line; returns an ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rhd::cli
