#ifndef CCMETRICS_LEXER_HPP
#define CCMETRICS_LEXER_HPP

#include <string_view>

#include "ccmetrics/token.hpp"

namespace ccmetrics {

// Splits C-like source into tokens. Never throws: malformed regions are
// reported through LexResult::diagnostics and lexing continues, so metrics
// stay computable on broken input.
LexResult tokenize(std::string_view source);

bool is_c_keyword(std::string_view text);

}  // namespace ccmetrics

#endif
