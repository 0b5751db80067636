#pragma once

#include <ostream>

namespace sbw::cli {

// Exit codes: 0 pass, 1 computation or verification failure, 2 usage.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sbw::cli
