#pragma once

#include <iosfwd>

namespace coxkit::cli {

/// Entry point of the `coxkit` tool. Returns 0 when every audit passes,
/// 1 on a violation and 2 on an input or usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coxkit::cli
