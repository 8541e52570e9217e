#include "ccmetrics/halstead.hpp"

#include <cmath>

#include "ccmetrics/errors.hpp"
#include "ccmetrics/lexer.hpp"

namespace ccmetrics {

HalsteadCounts classify(std::span<const Token> tokens) {
    HalsteadCounts counts;
    auto next_significant = [&](std::size_t from) -> const Token* {
        for (std::size_t j = from; j < tokens.size(); ++j) {
            const Token& t = tokens[j];
            if (t.kind == TokenKind::Comment ||
                t.kind == TokenKind::PreprocessorDirective) {
                continue;
            }
            return &t;
        }
        return nullptr;
    };

    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const Token& t = tokens[i];
        switch (t.kind) {
            case TokenKind::Comment:
            case TokenKind::PreprocessorDirective:
            case TokenKind::EndOfInput:
                break;
            case TokenKind::Keyword:
            case TokenKind::Punctuator:
                ++counts.operator_table[t.text];
                break;
            case TokenKind::Identifier: {
                const Token* next = next_significant(i + 1);
                bool call_name = next && next->kind == TokenKind::Punctuator &&
                                 next->text == "(";
                if (call_name) {
                    ++counts.operator_table[t.text];
                } else {
                    ++counts.operand_table[t.text];
                }
                break;
            }
            case TokenKind::NumberLiteral:
            case TokenKind::StringLiteral:
            case TokenKind::CharLiteral:
                ++counts.operand_table[t.text];
                break;
        }
    }

    counts.n1 = static_cast<std::int64_t>(counts.operator_table.size());
    counts.n2 = static_cast<std::int64_t>(counts.operand_table.size());
    for (const auto& [text, n] : counts.operator_table) counts.N1 += n;
    for (const auto& [text, n] : counts.operand_table) counts.N2 += n;
    return counts;
}

HalsteadMeasures measures(const HalsteadCounts& counts) {
    if (counts.n1 == 0 || counts.n2 == 0) {
        throw MetricsError(ErrorKind::EmptyProgram,
                           "no operators or operands to measure");
    }
    HalsteadMeasures m;
    double n1 = static_cast<double>(counts.n1);
    double n2 = static_cast<double>(counts.n2);
    double N1 = static_cast<double>(counts.N1);
    double N2 = static_cast<double>(counts.N2);
    m.vocabulary = n1 + n2;
    m.length = N1 + N2;
    m.volume = m.length * std::log2(m.vocabulary);
    m.difficulty = (n1 / 2.0) * (N2 / n2);
    m.level = (2.0 * n2) / (n1 * N2);
    m.intelligence = m.level * m.volume;
    m.effort = m.difficulty * m.volume;
    m.time_seconds = m.effort / 18.0;
    return m;
}

HalsteadMeasures measure_source(std::string_view source) {
    LexResult lex = tokenize(source);
    return measures(classify(lex.tokens));
}

HalsteadMeasures measure_source(std::string_view source,
                                std::vector<Diagnostic>& diagnostics) {
    LexResult lex = tokenize(source);
    diagnostics.insert(diagnostics.end(), lex.diagnostics.begin(),
                       lex.diagnostics.end());
    return measures(classify(lex.tokens));
}

}  // namespace ccmetrics
