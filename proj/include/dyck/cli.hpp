#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dyck::cli {

// Full command dispatch against the given streams.  Returns the process exit
// code: 0 success, 1 verification failure, 2 usage error.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

int run(int argc, char **argv);

} // namespace dyck::cli
