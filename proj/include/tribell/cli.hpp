#pragma once

// Command-line front end: decompose, evaluate, optimize, classify, sample, figure.
//
// Exit codes: 0 success, 2 input or validation error, 3 internal consistency
// (dual-path) failure. Numbers are written with 9 significant digits.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tribell/bell.hpp"
#include "tribell/states.hpp"

namespace tribell::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitConsistency = 3;

// Validation tolerance on norm / trace for state and settings files.
inline constexpr double kFileTol = 1e-8;

/// Loads a state from a JSON file or a `builtin:<name>` spec.
///
/// Builtins: ghz, w, 000, mixed-identity, phi-plus-otimes-0,
/// plus-otimes-phi-plus, generalized-ghz:<alpha>, acin:<l0>,<l1>,<l2>,<l3>,<l4>,<phi>,
/// biseparable:<1-23|2-13|12-3>:<alpha>.
DensityMatrix load_state(std::string_view spec);

/// Loads settings from a JSON file or builtin:all-x / all-y / all-z.
MeasurementSettings load_settings(std::string_view spec);

/// Rounds to 9 significant digits.
double sig9(double x);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tribell::cli
