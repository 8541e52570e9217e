#include "ccmetrics/lexer.hpp"

#include <array>
#include <cctype>
#include <string_view>
#include <unordered_set>

namespace ccmetrics {

const char* token_kind_name(TokenKind kind) {
    switch (kind) {
        case TokenKind::Identifier: return "identifier";
        case TokenKind::Keyword: return "keyword";
        case TokenKind::NumberLiteral: return "number";
        case TokenKind::StringLiteral: return "string";
        case TokenKind::CharLiteral: return "char";
        case TokenKind::Punctuator: return "punctuator";
        case TokenKind::Comment: return "comment";
        case TokenKind::PreprocessorDirective: return "directive";
        case TokenKind::EndOfInput: return "eof";
    }
    return "unknown";
}

namespace {

// C89 keywords plus the `and`/`or` aliases.
const std::unordered_set<std::string_view> kKeywords = {
    "auto", "break", "case", "char", "const", "continue", "default", "do",
    "double", "else", "enum", "extern", "float", "for", "goto", "if",
    "int", "long", "register", "return", "short", "signed", "sizeof",
    "static", "struct", "switch", "typedef", "union", "unsigned", "void",
    "volatile", "while", "and", "or",
};

// Longest match first.
constexpr std::array<std::string_view, 3> kPunct3 = {"<<=", ">>=", "..."};
constexpr std::array<std::string_view, 20> kPunct2 = {
    "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=", "&&",
    "||", "+=", "-=", "*=", "/=", "%=", "&=", "^=", "|=", "##",
};
constexpr std::string_view kPunct1 = "[](){}.&*+-~!/%<>^|?:;=,#";

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    LexResult run() {
        bool line_has_token = false;  // directives must be first on their line
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\n') {
                advance_newline();
                line_has_token = false;
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f') {
                ++pos_;
                ++col_;
                continue;
            }
            if (c == '#' && !line_has_token) {
                lex_directive();
                line_has_token = true;
                continue;
            }
            if (c == '/' && peek(1) == '/') {
                lex_line_comment();
                line_has_token = true;
                continue;
            }
            if (c == '/' && peek(1) == '*') {
                lex_block_comment();
                line_has_token = true;
                continue;
            }
            line_has_token = true;
            if (is_ident_start(c)) {
                lex_identifier();
            } else if (is_digit(c) || (c == '.' && is_digit(peek(1)))) {
                lex_number();
            } else if (c == '"') {
                lex_quoted('"', TokenKind::StringLiteral);
            } else if (c == '\'') {
                lex_quoted('\'', TokenKind::CharLiteral);
            } else {
                lex_punctuator();
            }
        }
        Token eof;
        eof.kind = TokenKind::EndOfInput;
        eof.line = line_;
        eof.column = col_;
        eof.offset = pos_;
        eof.end_line = line_;
        result_.tokens.push_back(eof);
        return std::move(result_);
    }

private:
    char peek(std::size_t ahead) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    void advance_newline() {
        ++pos_;
        ++line_;
        col_ = 1;
    }

    // Advances over one character inside a token, tracking line breaks.
    void advance_in_token() {
        if (src_[pos_] == '\n') {
            advance_newline();
        } else {
            ++pos_;
            ++col_;
        }
    }

    Token start_token(TokenKind kind) {
        Token t;
        t.kind = kind;
        t.line = line_;
        t.column = col_;
        t.offset = pos_;
        return t;
    }

    void finish_token(Token& t) {
        t.text = std::string(src_.substr(t.offset, pos_ - t.offset));
        t.end_line = line_;
        result_.tokens.push_back(std::move(t));
    }

    void diagnose(const std::string& msg, int line, int column) {
        result_.diagnostics.push_back({msg, line, column});
    }

    void lex_identifier() {
        Token t = start_token(TokenKind::Identifier);
        while (pos_ < src_.size() && is_ident_char(src_[pos_])) {
            ++pos_;
            ++col_;
        }
        std::string_view text = src_.substr(t.offset, pos_ - t.offset);
        if (kKeywords.count(text)) t.kind = TokenKind::Keyword;
        finish_token(t);
    }

    void lex_number() {
        Token t = start_token(TokenKind::NumberLiteral);
        bool hex = false;
        if (src_[pos_] == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
            hex = true;
            pos_ += 2;
            col_ += 2;
        }
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (is_digit(c) || c == '.' ||
                (hex && std::isxdigit(static_cast<unsigned char>(c)))) {
                ++pos_;
                ++col_;
            } else if (!hex && (c == 'e' || c == 'E') &&
                       (is_digit(peek(1)) ||
                        ((peek(1) == '+' || peek(1) == '-') && is_digit(peek(2))))) {
                // exponent with optional sign
                std::size_t n = (peek(1) == '+' || peek(1) == '-') ? 3 : 2;
                pos_ += n;
                col_ += static_cast<int>(n);
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                // suffixes (u, l, f) and stray letters stay in the token
                ++pos_;
                ++col_;
            } else {
                break;
            }
        }
        finish_token(t);
    }

    void lex_quoted(char quote, TokenKind kind) {
        Token t = start_token(kind);
        ++pos_;
        ++col_;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\\' && pos_ + 1 < src_.size()) {
                advance_in_token();  // backslash
                if (src_[pos_] == '\r' && pos_ + 1 < src_.size() &&
                    src_[pos_ + 1] == '\n') {
                    advance_in_token();  // CR of a CRLF line splice
                }
                advance_in_token();  // escaped char or LF
                continue;
            }
            if (c == quote) {
                ++pos_;
                ++col_;
                finish_token(t);
                return;
            }
            if (c == '\n') break;  // literal ends unterminated at EOL
            advance_in_token();
        }
        diagnose(quote == '"' ? "unterminated string literal"
                              : "unterminated character literal",
                 t.line, t.column);
        finish_token(t);
    }

    void lex_line_comment() {
        Token t = start_token(TokenKind::Comment);
        while (pos_ < src_.size() && src_[pos_] != '\n') {
            ++pos_;
            ++col_;
        }
        finish_token(t);
    }

    void lex_block_comment() {
        Token t = start_token(TokenKind::Comment);
        pos_ += 2;
        col_ += 2;
        while (pos_ < src_.size()) {
            if (src_[pos_] == '*' && peek(1) == '/') {
                pos_ += 2;
                col_ += 2;
                finish_token(t);
                return;
            }
            advance_in_token();
        }
        diagnose("unterminated block comment", t.line, t.column);
        finish_token(t);
    }

    void lex_punctuator() {
        Token t = start_token(TokenKind::Punctuator);
        std::string_view rest = src_.substr(pos_);
        std::size_t len = 0;
        for (auto p : kPunct3) {
            if (rest.substr(0, 3) == p) { len = 3; break; }
        }
        if (len == 0) {
            for (auto p : kPunct2) {
                if (rest.substr(0, 2) == p) { len = 2; break; }
            }
        }
        if (len == 0 && kPunct1.find(rest[0]) != std::string_view::npos) len = 1;
        if (len == 0) {
            // not part of the C-like subset; keep the byte so lexing is lossless
            diagnose(std::string("unexpected character '") + rest[0] + "'",
                     line_, col_);
            len = 1;
        }
        pos_ += len;
        col_ += static_cast<int>(len);
        finish_token(t);
    }

    // One token per directive, `#` through end of line, honoring
    // backslash-newline continuations.
    void lex_directive() {
        Token t = start_token(TokenKind::PreprocessorDirective);
        while (pos_ < src_.size() && src_[pos_] != '\n') {
            if (src_[pos_] == '\\') {
                // continuation: backslash, optional \r, then newline
                std::size_t next = pos_ + 1;
                if (next < src_.size() && src_[next] == '\r') ++next;
                if (next < src_.size() && src_[next] == '\n') {
                    while (pos_ <= next) advance_in_token();
                    continue;
                }
            }
            ++pos_;
            ++col_;
        }
        finish_token(t);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    LexResult result_;
};

}  // namespace

bool is_c_keyword(std::string_view text) { return kKeywords.count(text) > 0; }

LexResult tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace ccmetrics
