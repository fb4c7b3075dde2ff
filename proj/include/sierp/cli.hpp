#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sierp::cli {

/// Runs `sierp <args...>` in-process. `args` excludes the program name.
/// Returns the process exit code: 0 when every requested item was computed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sierp::cli
