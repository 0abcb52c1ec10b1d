#pragma once

#include <ostream>
#include <span>
#include <string>

namespace halphen::cli {

/// Version of the JSON output schema (schemas/halphen-cli-output.v1.schema.json).
inline constexpr int kSchemaVersion = 1;

/// Runs one command line (program name excluded). Returns 0 on success, 1 on
/// domain errors and 2 on usage errors; diagnostics go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace halphen::cli
