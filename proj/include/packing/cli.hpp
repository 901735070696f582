#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace packing::cli {

enum Exit : int {
	kOk = 0,
	kNegative = 1, // UNSAT, not outerplanar, class precondition fails, violations found
	kUsage = 2,    // malformed flags or input files
	kTimeout = 3,  // time or memory budget exhausted
};

struct CommandOutcome {
	int exit = kOk;
	std::string out; // machine-readable payload
	std::string err; // diagnostics
};

/// Runs one command. `args` excludes the program name. Graph files named "-"
/// or omitted are read from `in`. The default solver time budget comes from
/// the PACKING_BUDGET environment variable (seconds) when set.
CommandOutcome run(const std::vector<std::string> &args, std::istream &in);

} // namespace packing::cli
