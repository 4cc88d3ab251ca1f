#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace koch24::cli {

// Exit codes: 0 = success / verdict pass, 1 = verdict fail,
// 2 = usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace koch24::cli
