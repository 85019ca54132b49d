#pragma once

#include <iosfwd>
#include <string>

#include "qcurve/io.hpp"

namespace qcurve::cli {

enum ExitCode { kOk = 0, kDomainFailure = 1, kBadInput = 2 };

struct CommandResult {
  int exitCode = kOk;
  io::Json report;
};

CommandResult validateCocycleCommand(const io::Json& doc);
CommandResult splitCommand(const io::Json& doc);
CommandResult algebraCommand(const io::Json& doc);
CommandResult constructCommand(const io::Json& doc);
CommandResult quadraticCommand(std::int64_t m, const std::string& kSignature);
CommandResult descentCommand(const io::Json& doc);
CommandResult tracesCommand(const io::Json& doc);

/// Parses argv, runs one subcommand and writes its report. Returns the
/// process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcurve::cli
