#pragma once

#include <iosfwd>
#include <string_view>

#include "blockscope/partition.hpp"

namespace blockscope::cli {

/// Entry point shared by the executable and the tests.  Returns the process
/// exit code: 0 on success, 1 when a verification suite failed, 2 on bad
/// input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "12,7,7,5,4,2,1,1"; the empty string is the empty partition.  Throws
/// ValidationError naming the offending character position.
Partition parse_partition(std::string_view text);

}  // namespace blockscope::cli
