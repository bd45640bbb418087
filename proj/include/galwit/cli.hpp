#ifndef GALWIT_CLI_HPP
#define GALWIT_CLI_HPP

#include <ostream>

namespace galwit::cli {

/// Exit codes: 0 answered or verified, 1 refuted or verification failed,
/// 2 usage error or computational limit.
inline constexpr int kAnswered = 0;
inline constexpr int kRefuted = 1;
inline constexpr int kUsage = 2;

/// Largest polynomial degree accepted on the command line.
inline constexpr int kMaxInputDegree = 200;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace galwit::cli

#endif
