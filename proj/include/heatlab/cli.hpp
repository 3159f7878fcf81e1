#pragma once

// Command front end: solve, sweep, profile, audit-lie.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "heatlab/csv.hpp"
#include "heatlab/models.hpp"
#include "heatlab/oracle.hpp"

namespace heatlab::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kNumericalFailure = 2,
};

struct SweepConfig {
  double eps_min = 0.1;
  double eps_max = 5.0;
  std::size_t eps_steps = 50;
  std::size_t order = 30;
  std::string output_path;  // empty: standard output
};

struct ProfileConfig {
  ModelId model = ModelId::Model2;
  double eps = 0.7;
  std::size_t grid_n = 101;
  std::size_t order = 30;
  std::vector<Method> methods;  // empty: every method valid for the model
  std::string output_path;
};

inline constexpr const char* kSweepHeader[] = {"epsilon",        "u0_taylor", "u0_virial",
                                               "u0_hypervirial", "b_virial",  "b_hypervirial"};

/// Methods accepted by `solve` and `profile` for a model.
std::vector<Method> methods_for(ModelId model);

/// Uniform eps grid of the sweep; a single point when eps_steps == 1.
std::vector<double> sweep_grid(const SweepConfig& cfg);

/// Builds the u0-versus-eps table. Failed cells are left empty and a warning
/// is written to `diag`.
csv::Table sweep_table(const SweepConfig& cfg, std::ostream& diag);

/// Builds the u(x) table on a uniform grid over [0, 1], one column per
/// method. Throws std::invalid_argument for a method the model does not
/// support.
csv::Table profile_table(const ProfileConfig& cfg, std::ostream& diag);

/// Parses `args` (without the program name) and runs the command. Data goes
/// to `out` unless --out names a file; warnings and timings go to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace heatlab::cli
