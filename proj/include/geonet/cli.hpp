#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geonet {

/// Exit codes of dispatch.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // validation failed or input rejected
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. Machine output
/// (JSON, SVG, CSV) goes to `out` and only on success; diagnostics go to
/// `err`.
///
///   validate    --network F [--mode exact|float] [--tol T]
///   enumerate   --n N [--allow-adjacent] [--max-only]
///   solve       --network F [--fix-exterior] [--bound M]
///   replace     --network F --vertex I [--bound M]
///   audit       --network F [--depth K] [--bound M] | --counting N
///   certify-n3
///   sweep       --c X [--radius R] [--samples n] [--flow] [--points P] [--emit-csv F]
///   render      --network F [--canvas PX] [--stroke W] [--no-labels]
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geonet
