#ifndef RLSLP_CLI_APP_HPP
#define RLSLP_CLI_APP_HPP

#include <iosfwd>

namespace rlslp::cli {

/// Exit codes: 0 success, 1 self-test failure, 2 bad arguments or input file,
/// 3 query outside the supported domain (RatioViolation, OutOfRange).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rlslp::cli

#endif
