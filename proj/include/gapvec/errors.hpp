#pragma once

#include <stdexcept>
#include <string>

namespace gapvec {

// Exit codes used by the CLI; the exception types below map onto them 1:1.
enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,          // bad flags, bad variety spec, parse errors
  exit_genericity = 2,     // random samples kept colliding after all retries
  exit_inconsistency = 3,  // two exact computation routes disagreed
  exit_check_failed = 4,   // a theorem check failed under `verify`
};

// Invalid input: rejected variety spec, precondition violation, bad file.
struct InvalidVariety : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Syntax error in a variety file or spec string; message carries the location.
struct ParseError : InvalidVariety {
  using InvalidVariety::InvalidVariety;
};

// Random sampling failed to produce generic data within the retry budget.
struct GenericityFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two independent exact routes to the same number disagreed: either a bug or
// a genuinely non-generic sample that slipped past every guard.
struct InternalInconsistency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gapvec
