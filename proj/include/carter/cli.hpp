#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace carter {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitBadPartition = 2,
    kExitBadParams = 3,
    kExitBatchPartial = 4,
};

/// Entry point shared by the executable and the tests. args excludes argv[0].
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// "20,9,6" -> parts. Throws carter::Error on malformed input.
std::vector<std::int64_t> parse_partition_flag(const std::string& text);

}  // namespace carter
