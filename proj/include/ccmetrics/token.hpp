#ifndef CCMETRICS_TOKEN_HPP
#define CCMETRICS_TOKEN_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace ccmetrics {

enum class TokenKind {
    Identifier,
    Keyword,
    NumberLiteral,
    StringLiteral,
    CharLiteral,
    Punctuator,
    Comment,
    PreprocessorDirective,
    EndOfInput,
};

const char* token_kind_name(TokenKind kind);

struct Token {
    TokenKind kind = TokenKind::EndOfInput;
    std::string text;       // exact source substring
    int line = 1;           // 1-based physical line of the first character
    int column = 1;         // 1-based byte column of the first character
    std::size_t offset = 0; // byte offset into the source
    int end_line = 1;       // line of the last character (== line unless multi-line)
};

struct Diagnostic {
    std::string message;
    int line = 0;
    int column = 0;
};

struct LexResult {
    std::vector<Token> tokens;       // always terminated by EndOfInput
    std::vector<Diagnostic> diagnostics;
};

}  // namespace ccmetrics

#endif
