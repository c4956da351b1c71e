/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MUNCH_GUARD_MUNCH_CLI_HH
#define MUNCH_GUARD_MUNCH_CLI_HH 1

#include <iosfwd>
#include <string>
#include <vector>

namespace munch::cli
{
    inline constexpr int exit_ok = 0;
    inline constexpr int exit_usage = 2;
    inline constexpr int exit_not_munchhausen = 3;
    inline constexpr int exit_budget = 4;

    /// Runs one command line (args excludes the program name). Results go to out, diagnostics to err.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
