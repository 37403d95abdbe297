#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace switchhom {

// Exit codes: 0 = yes / polynomial / success, 1 = no / NP-complete,
// 2 = usage or input error (one-line diagnostic on err).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace switchhom
