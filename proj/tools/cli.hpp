#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace hexdrop::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the `hexdrop` executable. args[0] is the program name.
///
///   gen      --config FILE --seed U64 --out FILE [--format csv|json] [--svg FILE] [--threads N]
///   validate --shape hexagon|rhombus|triangle --n N --seed U64 [--depth 1|2] [--json]
///   centers  --rings R --L0 X
///
/// Returns 0 on success, 1 when a validation test fails, 2 on usage or
/// config errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hexdrop::cli
