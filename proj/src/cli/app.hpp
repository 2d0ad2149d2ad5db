#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace bj::cli {

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kDataError = 2, kComputeError = 3 };

struct Outcome {
    int exit_code = kSuccess;
    std::string out;
    std::string err;
    std::vector<std::filesystem::path> plots;
};

/// Runs one command line (program name excluded). The default output format
/// comes from BJ_OUTPUT ("json" or "text") unless --json is given.
[[nodiscard]] Outcome run(const std::vector<std::string>& args);

/// argv entry point: prints the outcome and returns its exit code.
int main(int argc, char** argv);

}  // namespace bj::cli
