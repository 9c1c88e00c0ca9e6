#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace balcheck::cli {

// args excludes the program name; exit code 0 = yes, 1 = no, 2 = error
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace balcheck::cli
