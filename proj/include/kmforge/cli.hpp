#pragma once

#include "kmforge/commands.hpp"
#include "kmforge/selftest.hpp"

#include <iostream>
#include <string>
#include <vector>

namespace kmforge {

// Process entry point: parses argv, runs the requested command, prints the
// text or JSON rendering, and maps outcomes to exit codes (0 success,
// 1 input error, 2 certificate failure).
inline int run_cli(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    CommandOutcome out = run_command(args, &run_selftest, &std::cout);
    if (out.printed_live) return out.exit_code;
    if (out.exit_code == 0) {
        if (out.output_mode == "json" && out.has_report)
            std::cout << out.report.printable(out.wall_ms) << "\n";
        else if (!out.text.empty())
            std::cout << out.text;
    } else {
        std::cerr << out.text;
    }
    return out.exit_code;
}

}  // namespace kmforge
