#pragma once

#include <ostream>

namespace clonelogic::cli {

/// Exit codes: 0 success or pass, 1 check failure or counterexample found,
/// 2 usage, input or parse error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace clonelogic::cli
