#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace germ2 {

// Command dispatcher behind the germ2 binary. Returns the process exit code:
// 0 success, 1 usage or parse error, 2 mathematical precondition failure.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace germ2
