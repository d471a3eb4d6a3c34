#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cdv::cli {

/// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

/// Environment variable naming the corpus root; --corpus wins over it.
inline constexpr const char* corpus_env = "CDVERIFY_CORPUS";

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cdv::cli
