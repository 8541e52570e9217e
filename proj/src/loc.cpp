#include "ccmetrics/loc.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>
#include <vector>

#include "ccmetrics/lexer.hpp"

namespace ccmetrics {

namespace {

const std::unordered_set<std::string_view> kControlKeywords = {
    "if", "else", "for", "while", "do", "switch", "case", "default",
};

// First-token heuristic for Jones's "data declaration" lines.
const std::unordered_set<std::string_view> kDeclKeywords = {
    "int",    "char",   "float",  "double", "long",    "short",
    "unsigned", "signed", "struct", "union", "enum",   "typedef",
    "static", "extern", "const",  "void",
};

struct LineFlags {
    bool source = false;     // non-comment, non-directive token on the line
    bool comment = false;    // any part of a comment token
    bool directive = false;  // any part of a preprocessor directive
    bool blank_text = false; // whitespace-only text
    bool declaration = false;
};

std::int64_t physical_line_count(std::string_view source) {
    std::int64_t breaks = 0;
    for (char c : source) {
        if (c == '\n') ++breaks;
    }
    if (!source.empty() && source.back() != '\n') ++breaks;
    return breaks;
}

bool whitespace_only(std::string_view line) {
    return std::all_of(line.begin(), line.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) != 0;
    });
}

// Logical statements: statement-level semicolons, control-structure
// headers, and block-opening braces (initializer braces excluded).
std::int64_t logical_lines(const std::vector<Token>& tokens) {
    std::int64_t lloc = 0;
    int paren_depth = 0;
    std::string_view prev;
    for (const Token& t : tokens) {
        if (t.kind == TokenKind::Comment ||
            t.kind == TokenKind::PreprocessorDirective ||
            t.kind == TokenKind::EndOfInput) {
            continue;
        }
        if (t.kind == TokenKind::Punctuator) {
            if (t.text == "(") {
                ++paren_depth;
            } else if (t.text == ")") {
                if (paren_depth > 0) --paren_depth;
            } else if (t.text == ";" && paren_depth == 0) {
                ++lloc;
            } else if (t.text == "{") {
                bool initializer = prev == "=" || prev == "," ||
                                   prev == "(" || prev == "[" || prev == "{";
                if (!initializer) ++lloc;
            }
        } else if (t.kind == TokenKind::Keyword && kControlKeywords.count(t.text)) {
            ++lloc;
        }
        prev = t.text;
    }
    return lloc;
}

}  // namespace

const char* jones_mode_name(JonesMode mode) {
    switch (mode) {
        case JonesMode::ExecutableOnly: return "executable-only";
        case JonesMode::ExecutableAndData: return "executable-and-data";
        case JonesMode::ExecutableCommentsData: return "executable-comments-data";
        case JonesMode::ExecutableCommentsDataJcl: return "executable-comments-data-jcl";
        case JonesMode::PhysicalInputLines: return "physical-input-lines";
        case JonesMode::LogicalTerminated: return "logical-terminated";
    }
    return "unknown";
}

LocReport count_loc(std::string_view source) {
    LocReport report;
    report.ploc = physical_line_count(source);
    LexResult lex = tokenize(source);

    std::vector<LineFlags> lines(static_cast<std::size_t>(report.ploc));
    {
        std::size_t start = 0;
        std::size_t idx = 0;
        while (idx < lines.size()) {
            std::size_t end = source.find('\n', start);
            std::string_view text = source.substr(
                start, end == std::string_view::npos ? std::string_view::npos
                                                     : end - start);
            lines[idx].blank_text = whitespace_only(text);
            if (end == std::string_view::npos) break;
            start = end + 1;
            ++idx;
        }
    }

    auto mark = [&](const Token& t, bool LineFlags::*flag) {
        for (int ln = t.line; ln <= t.end_line; ++ln) {
            std::size_t i = static_cast<std::size_t>(ln - 1);
            if (i < lines.size()) lines[i].*flag = true;
        }
    };

    for (const Token& t : lex.tokens) {
        switch (t.kind) {
            case TokenKind::EndOfInput:
                break;
            case TokenKind::Comment:
                mark(t, &LineFlags::comment);
                break;
            case TokenKind::PreprocessorDirective:
                mark(t, &LineFlags::directive);
                break;
            default:
                mark(t, &LineFlags::source);
                break;
        }
    }

    // Declaration lines: first token starting on the line is a type keyword.
    {
        std::vector<bool> seen(lines.size(), false);
        for (const Token& t : lex.tokens) {
            if (t.kind == TokenKind::Comment ||
                t.kind == TokenKind::PreprocessorDirective ||
                t.kind == TokenKind::EndOfInput) {
                continue;
            }
            std::size_t i = static_cast<std::size_t>(t.line - 1);
            if (i >= lines.size() || seen[i]) continue;
            seen[i] = true;
            lines[i].declaration =
                t.kind == TokenKind::Keyword && kDeclKeywords.count(t.text) > 0;
        }
    }

    std::int64_t decl_lines = 0;
    for (const LineFlags& lf : lines) {
        bool covered = lf.source || lf.comment || lf.directive;
        if (lf.blank_text && !covered) {
            ++report.bloc;
            continue;
        }
        if (lf.source) ++report.sloc;
        if (lf.comment) ++report.cloc;
        if (lf.source && lf.comment) ++report.scloc;
        if (lf.source && lf.declaration) ++decl_lines;
    }

    report.lloc = logical_lines(lex.tokens);

    std::int64_t comment_only = report.cloc - report.scloc;
    report.jones_mode_counts[JonesMode::ExecutableOnly] = report.sloc - decl_lines;
    report.jones_mode_counts[JonesMode::ExecutableAndData] = report.sloc;
    report.jones_mode_counts[JonesMode::ExecutableCommentsData] =
        report.sloc + comment_only;
    report.jones_mode_counts[JonesMode::ExecutableCommentsDataJcl] =
        report.sloc + comment_only;  // no JCL in C input
    report.jones_mode_counts[JonesMode::PhysicalInputLines] = report.ploc;
    report.jones_mode_counts[JonesMode::LogicalTerminated] = report.lloc;
    return report;
}

std::int64_t count_jones(std::string_view source, JonesMode mode) {
    return count_loc(source).jones_mode_counts.at(mode);
}

}  // namespace ccmetrics
