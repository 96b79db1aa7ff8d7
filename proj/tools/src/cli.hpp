#ifndef IRCL_TOOLS_CLI_HPP
#define IRCL_TOOLS_CLI_HPP

#include <string>
#include <vector>

namespace ircl {

// Exit codes: 0 success, 1 verification/property failure,
// 2 bound exceeded or nothing found, 3 input error.
int cli_main(const std::vector<std::string>& args);

}  // namespace ircl

#endif
