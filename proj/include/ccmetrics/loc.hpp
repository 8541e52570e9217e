#ifndef CCMETRICS_LOC_HPP
#define CCMETRICS_LOC_HPP

#include <cstdint>
#include <map>
#include <string_view>

namespace ccmetrics {

// Jones's 1986 counting policies, in their published order.
enum class JonesMode {
    ExecutableOnly,
    ExecutableAndData,
    ExecutableCommentsData,
    ExecutableCommentsDataJcl,
    PhysicalInputLines,
    LogicalTerminated,
};

const char* jones_mode_name(JonesMode mode);

struct LocReport {
    std::int64_t ploc = 0;   // physical lines
    std::int64_t sloc = 0;   // lines with at least one non-comment, non-directive token
    std::int64_t cloc = 0;   // lines touched by a comment token
    std::int64_t scloc = 0;  // lines counted in both sloc and cloc
    std::int64_t bloc = 0;   // blank or whitespace-only lines
    std::int64_t lloc = 0;   // logical statements
    std::map<JonesMode, std::int64_t> jones_mode_counts;
};

// Classifies every physical line using the token stream, so comment
// markers inside string literals are not miscounted.
LocReport count_loc(std::string_view source);

std::int64_t count_jones(std::string_view source, JonesMode mode);

}  // namespace ccmetrics

#endif
