#pragma once

#include <string>
#include <vector>

namespace romankit {

// Exit codes: 0 success / all identities held, 1 identity failures,
// 2 usage error, 3 domain error.
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, char** argv);

}  // namespace romankit
