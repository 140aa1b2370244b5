#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "pathres/errors.hpp"
#include "pathres/examples.hpp"

namespace pathres {

constexpr const char* kVersion = "0.1.0";

enum ExitCode { kOk = 0, kVerificationFailed = 1, kExhausted = 2, kInputError = 3 };

struct RunOptions {
  bool latex = false;
};

struct TaskOutcome {
  nlohmann::json result;
  int exit_code = kOk;
};

// Runs doc.task.kind on the document. Library errors propagate.
TaskOutcome run_task(const ProblemDocument& doc, const RunOptions& opts = {});

// Checks an example against its embedded fixtures.
TaskOutcome self_test(const Example& ex);

// FNV-1a of the canonical JSON dump, as 16 hex digits.
std::string input_hash(const ProblemDocument& doc);

// Reads the default fuel from PATHRES_FUEL, if set.
std::optional<std::size_t> env_fuel();

int exit_code_for(const Error& e);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pathres
