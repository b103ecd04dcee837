#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qh {

// Exit codes: 0 all checks pass, 1 check failure, 2 precondition failure,
// 64 usage or parse error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qh
