#pragma once

namespace influence {

// Runs the command line tool. Exit codes: 0 on success, 1 for usage errors,
// 2 for data errors.
int cli_dispatch(int argc, const char* const* argv);

}  // namespace influence
