#pragma once

// Command-line front end.
//
//   compute {H|F|dF|bell|bernoulli|zeta-even} --n --x --alpha --r --N
//   verify  {thm2.2|thm2.3|thm2.5|thm2.6|lemma-a|beta-eq|inversion|all} --n-max --r-max --x LIST
//   series  {zeta|lemma-c|cor2.4-r3|cor2.4-r4|cor2.4-r5|eq32} --N --x --s --r [--float]
//   oracle  {quad|mc} --n --m --x --r --samples --seed
//
// Common: --format {text|json|csv}, --output PATH. Exit codes: 0 success,
// 1 a check failed or a bracket excluded its claimed limit, 2 usage error.

#include <iosfwd>
#include <span>
#include <string>

namespace harmonic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace harmonic::cli
