#ifndef MSST_CLI_HPP
#define MSST_CLI_HPP

namespace msst {

/// Runs the command-line tool. Exit codes: 0 success, 1 domain error
/// (bad values, I/O failures), 2 usage error.
int run_cli(int argc, const char* const* argv);

}  // namespace msst

#endif
