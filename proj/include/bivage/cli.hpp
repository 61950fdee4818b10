#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bivage::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Entry point shared by the binary and the tests.
/// argv[0] is the program name. Exit contract: 0 success, 1 property
/// failure, 2 input error, 3 internal error / route mismatch.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience adapter: args without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bivage::cli
