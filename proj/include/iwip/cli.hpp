#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace iwip::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kInternalError = 2;

// `args` excludes the program name. Reports go to `out`, diagnostics to
// `err`. The IWIP_FORMAT environment variable supplies the default format.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace iwip::cli
