#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace casimir {

/// Full command-line surface, usable in-process. Exit codes: 0 success,
/// 1 verification failures, 2 usage/argument errors.
///
/// Subcommands:
///   verify --family so|sp --n N [--level fast|full] [--format text|structured] [--out PATH]
///   dims   --family so|sp --n N [--format text|structured] [--out PATH]
///   vogel  --family so|sp --n N [--format text|structured] [--out PATH]
///   export --family so|sp --n N --op NAME [--out PATH]
///   duality --n N [--format text|structured] [--out PATH]
///
/// The n cap (default 12) can be raised or lowered with CASIMIR_MAX_N.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace casimir
