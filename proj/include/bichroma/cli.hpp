#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bichroma {

// Runs one CLI invocation. args excludes the program name. Returns the
// process exit code: 0 success (and all verifications passing), 1 when a
// verification fails, 2 on input or usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bichroma
