#ifndef CCMETRICS_HALSTEAD_HPP
#define CCMETRICS_HALSTEAD_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "ccmetrics/token.hpp"

namespace ccmetrics {

struct HalsteadCounts {
    std::int64_t n1 = 0;  // distinct operators
    std::int64_t n2 = 0;  // distinct operands
    std::int64_t N1 = 0;  // total operator occurrences
    std::int64_t N2 = 0;  // total operand occurrences
    std::map<std::string, std::int64_t> operator_table;
    std::map<std::string, std::int64_t> operand_table;
};

struct HalsteadMeasures {
    double vocabulary = 0;    // n = n1 + n2
    double length = 0;        // N = N1 + N2
    double volume = 0;        // V = N * log2(n), bits
    double difficulty = 0;    // D = (n1/2) * (N2/n2)
    double level = 0;         // L = (2*n2) / (n1*N2) = 1/D
    double intelligence = 0;  // I = L * V, bits
    double effort = 0;        // E = D * V, elementary discriminations
    double time_seconds = 0;  // T = E / 18 (Stroud number)
};

// Operators: keywords, punctuators, and identifiers directly followed by
// `(` (call names). Operands: all other identifiers and literals.
// Comments, preprocessor directives, and end-of-input are ignored.
// Distinctness is by exact token text, case-sensitive.
HalsteadCounts classify(std::span<const Token> tokens);

// Throws MetricsError{EmptyProgram} when n1 or n2 is zero: difficulty and
// level are undefined there, so comment-only input is an error, not zeros.
HalsteadMeasures measures(const HalsteadCounts& counts);

HalsteadMeasures measure_source(std::string_view source);

// Same, but hands back non-fatal lexer diagnostics from the tokenize step.
HalsteadMeasures measure_source(std::string_view source,
                                std::vector<Diagnostic>& diagnostics);

}  // namespace ccmetrics

#endif
