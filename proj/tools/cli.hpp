#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace upst::cli {

inline constexpr int kPass = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInputError = 2;

// generate | verify | times. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace upst::cli
