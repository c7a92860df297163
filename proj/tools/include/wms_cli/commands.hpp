#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wms::cli
{

enum ExitCode
{
    ok = 0,
    failure = 1,
    validation = 2,
    capability = 3,
};

/// Runs one `wms` invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wms::cli
