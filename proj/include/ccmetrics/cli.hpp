#ifndef CCMETRICS_CLI_HPP
#define CCMETRICS_CLI_HPP

#include <iosfwd>

namespace ccmetrics::cli {

// Subcommands: measure, analyze, summarize.
// Exit status: 0 success, 1 processing failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace ccmetrics::cli

#endif
