#ifndef JDEBLOCK_CLI_H_
#define JDEBLOCK_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace jdeblock::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kCurveHeader =
    "quality,ratio,psnr_degraded,psnr_deblocked,blockiness_degraded,"
    "blockiness_deblocked";

// Entry point shared by the executable and the tests. `args` excludes the
// program name. Reports go to `out` unless redirected with --report/--out;
// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jdeblock::cli

#endif  // JDEBLOCK_CLI_H_
