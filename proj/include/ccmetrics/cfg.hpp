#ifndef CCMETRICS_CFG_HPP
#define CCMETRICS_CFG_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccmetrics/token.hpp"

namespace ccmetrics {

enum class StatementKind {
    Simple,
    If,
    While,
    DoWhile,
    For,
    Switch,
    Case,
    Default,
    Break,
    Continue,
    Return,
    Goto,
    Label,
    Block,
};

const char* statement_kind_name(StatementKind kind);

struct Statement {
    StatementKind kind = StatementKind::Simple;
    std::string condition_text;  // decision kinds; case value; label/goto target
    bool has_else = false;       // If
    bool has_condition = true;   // For: false for `for(;;)` (still a decision)
    int line = 0;
    std::vector<Statement> children;       // body / then-arm / switch arms
    std::vector<Statement> else_children;  // else-arm
};

struct FunctionUnit {
    std::string name;  // empty for the anonymous whole-file unit
    std::vector<Statement> body;
    int start_line = 0;
    int end_line = 0;
    bool anonymous = false;
    // token ranges into the original token vector: the whole unit
    // (signature through closing brace) and the body between the braces.
    // Halstead per function measures the body, so wrapping a fragment in a
    // definition does not change its numbers.
    std::size_t token_begin = 0;
    std::size_t token_end = 0;
    std::size_t body_token_begin = 0;
    std::size_t body_token_end = 0;
};

struct FunctionParse {
    std::vector<FunctionUnit> units;
    std::vector<Diagnostic> diagnostics;
};

struct CfgNode {
    int id = 0;
    int line = 0;
    std::string kind;
};

struct ControlFlowGraph {
    std::vector<CfgNode> nodes;  // entry first, single exit last
    std::vector<std::pair<int, int>> edges;  // unique, sorted
    int entry_id = 0;
    int exit_id = 0;
    std::vector<Diagnostic> diagnostics;  // unreachable code, missing exit paths
};

// Recognizes top-level function definitions (identifier + parameter list +
// brace block) and parses each body. A file with no function at all is
// wrapped as one anonymous unit so fragments stay measurable.
FunctionParse parse_functions(std::span<const Token> tokens);

// One node per statement plus a synthetic exit where the flow needs one.
// Compound boolean conditions stay a single node.
ControlFlowGraph build_cfg(const FunctionUnit& unit);

// V(G) = E - N + 2
int cyclomatic_edges_nodes(const ControlFlowGraph& cfg);

// 1 + decisions (if, while, do/while, for, each case arm)
int cyclomatic_decisions(const FunctionUnit& unit);

// "simple" < 10, "moderate" <= 20, "complex" < 100, "out-of-control" >= 100
std::string_view complexity_band(int cc);

// Plain-text node table (id, line, kind) followed by `a -> b` edge records.
std::string dump_cfg(const ControlFlowGraph& cfg);

}  // namespace ccmetrics

#endif
