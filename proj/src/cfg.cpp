#include "ccmetrics/cfg.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace ccmetrics {

const char* statement_kind_name(StatementKind kind) {
    switch (kind) {
        case StatementKind::Simple: return "simple";
        case StatementKind::If: return "if";
        case StatementKind::While: return "while";
        case StatementKind::DoWhile: return "do-while";
        case StatementKind::For: return "for";
        case StatementKind::Switch: return "switch";
        case StatementKind::Case: return "case";
        case StatementKind::Default: return "default";
        case StatementKind::Break: return "break";
        case StatementKind::Continue: return "continue";
        case StatementKind::Return: return "return";
        case StatementKind::Goto: return "goto";
        case StatementKind::Label: return "label";
        case StatementKind::Block: return "block";
    }
    return "unknown";
}

namespace {

struct SigTok {
    const Token* tok;
    std::size_t orig;  // index in the original token vector
};

bool is_punct(const SigTok& t, std::string_view text) {
    return t.tok->kind == TokenKind::Punctuator && t.tok->text == text;
}

bool is_kw(const SigTok& t, std::string_view text) {
    return t.tok->kind == TokenKind::Keyword && t.tok->text == text;
}

// Tolerant recursive-descent parser over the significant token stream.
// Malformed regions degrade to Simple statements; it never throws.
class StatementParser {
public:
    StatementParser(const std::vector<SigTok>& toks, std::size_t begin,
                    std::size_t end, std::vector<Diagnostic>& diags)
        : toks_(toks), pos_(begin), end_(end), diags_(diags) {}

    std::vector<Statement> parse_sequence(bool in_switch) {
        std::vector<Statement> out;
        while (pos_ < end_ && !at_punct("}")) {
            out.push_back(parse_statement(in_switch));
        }
        return out;
    }

    // For anonymous whole-file units: stray closing braces are skipped with
    // a diagnostic instead of ending the parse.
    std::vector<Statement> parse_top_level() {
        std::vector<Statement> out;
        while (pos_ < end_) {
            std::vector<Statement> chunk = parse_sequence(false);
            std::move(chunk.begin(), chunk.end(), std::back_inserter(out));
            if (pos_ < end_) {
                diags_.push_back({"stray '}'", cur_line(), 0});
                ++pos_;
            }
        }
        return out;
    }

private:
    bool at_punct(std::string_view text) const {
        return pos_ < end_ && is_punct(toks_[pos_], text);
    }

    bool at_kw(std::string_view text) const {
        return pos_ < end_ && is_kw(toks_[pos_], text);
    }

    int cur_line() const {
        return pos_ < end_ ? toks_[pos_].tok->line : 0;
    }

    Statement parse_statement(bool in_switch) {
        Statement s;
        s.line = cur_line();
        if (pos_ >= end_ || at_punct("}")) {
            s.kind = StatementKind::Simple;  // missing statement, keep shape
            return s;
        }
        const SigTok& t = toks_[pos_];
        if (is_punct(t, ";")) {
            ++pos_;
            s.kind = StatementKind::Simple;
            return s;
        }
        if (is_punct(t, "{")) {
            ++pos_;
            s.kind = StatementKind::Block;
            s.children = parse_sequence(false);
            expect_close_brace();
            return s;
        }
        if (t.tok->kind == TokenKind::Keyword) {
            const std::string& kw = t.tok->text;
            if (kw == "if") return parse_if();
            if (kw == "while") return parse_while();
            if (kw == "do") return parse_do_while();
            if (kw == "for") return parse_for();
            if (kw == "switch") return parse_switch();
            if (kw == "case") return parse_case(in_switch);
            if (kw == "default") return parse_default(in_switch);
            if (kw == "break" || kw == "continue") {
                s.kind = kw == "break" ? StatementKind::Break
                                       : StatementKind::Continue;
                ++pos_;
                if (at_punct(";")) ++pos_;
                return s;
            }
            if (kw == "return") {
                ++pos_;
                s.kind = StatementKind::Return;
                consume_expression();
                return s;
            }
            if (kw == "goto") {
                ++pos_;
                s.kind = StatementKind::Goto;
                if (pos_ < end_ && toks_[pos_].tok->kind == TokenKind::Identifier) {
                    s.condition_text = toks_[pos_].tok->text;
                }
                consume_expression();
                return s;
            }
            // type keywords etc. fall through to a plain statement
        }
        if (t.tok->kind == TokenKind::Identifier && pos_ + 1 < end_ &&
            is_punct(toks_[pos_ + 1], ":")) {
            s.kind = StatementKind::Label;
            s.condition_text = t.tok->text;
            pos_ += 2;
            return s;
        }
        s.kind = StatementKind::Simple;
        consume_expression();
        return s;
    }

    Statement parse_if() {
        Statement s;
        s.kind = StatementKind::If;
        s.line = cur_line();
        ++pos_;
        s.condition_text = parse_parens();
        attach_body(s.children, parse_statement(false));
        if (at_kw("else")) {
            ++pos_;
            s.has_else = true;
            attach_body(s.else_children, parse_statement(false));
        }
        return s;
    }

    Statement parse_while() {
        Statement s;
        s.kind = StatementKind::While;
        s.line = cur_line();
        ++pos_;
        s.condition_text = parse_parens();
        attach_body(s.children, parse_statement(false));
        return s;
    }

    Statement parse_do_while() {
        Statement s;
        s.kind = StatementKind::DoWhile;
        s.line = cur_line();
        ++pos_;
        attach_body(s.children, parse_statement(false));
        if (at_kw("while")) {
            ++pos_;
            s.condition_text = parse_parens();
            if (at_punct(";")) ++pos_;
        } else {
            diags_.push_back({"expected `while` after do-body", s.line, 0});
        }
        return s;
    }

    Statement parse_for() {
        Statement s;
        s.kind = StatementKind::For;
        s.line = cur_line();
        ++pos_;
        // header: init ; condition ; increment — condition emptiness matters
        if (at_punct("(")) {
            ++pos_;
            int depth = 1;
            int semis = 0;
            std::string segments[3];
            while (pos_ < end_ && depth > 0) {
                const SigTok& t = toks_[pos_];
                if (is_punct(t, "(")) ++depth;
                else if (is_punct(t, ")")) {
                    --depth;
                    if (depth == 0) { ++pos_; break; }
                } else if (is_punct(t, ";") && depth == 1 && semis < 2) {
                    ++semis;
                    ++pos_;
                    continue;
                }
                if (depth > 0 && semis < 3) {
                    if (!segments[semis].empty()) segments[semis] += ' ';
                    segments[semis] += t.tok->text;
                }
                ++pos_;
            }
            s.condition_text = segments[1];
            s.has_condition = !segments[1].empty();
        } else {
            s.has_condition = false;
        }
        attach_body(s.children, parse_statement(false));
        return s;
    }

    Statement parse_switch() {
        Statement s;
        s.kind = StatementKind::Switch;
        s.line = cur_line();
        ++pos_;
        s.condition_text = parse_parens();
        std::vector<Statement> items;
        if (at_punct("{")) {
            ++pos_;
            items = parse_sequence(true);
            expect_close_brace();
        } else {
            items.push_back(parse_statement(true));
        }
        // group each arm's statements under its case/default label
        Statement* arm = nullptr;
        for (Statement& item : items) {
            if (item.kind == StatementKind::Case ||
                item.kind == StatementKind::Default) {
                s.children.push_back(std::move(item));
                arm = &s.children.back();
            } else if (arm) {
                arm->children.push_back(std::move(item));
            } else {
                s.children.push_back(std::move(item));  // stray pre-label code
            }
        }
        return s;
    }

    Statement parse_case(bool in_switch) {
        Statement s;
        s.kind = in_switch ? StatementKind::Case : StatementKind::Label;
        s.line = cur_line();
        ++pos_;
        std::string value;
        int depth = 0;
        while (pos_ < end_) {
            const SigTok& t = toks_[pos_];
            if (is_punct(t, "(") || is_punct(t, "[")) ++depth;
            else if (is_punct(t, ")") || is_punct(t, "]")) --depth;
            else if (is_punct(t, ":") && depth <= 0) { ++pos_; break; }
            else if (is_punct(t, ";") || is_punct(t, "}") || is_punct(t, "{")) break;
            if (!value.empty()) value += ' ';
            value += t.tok->text;
            ++pos_;
        }
        s.condition_text = in_switch ? value : "case " + value;
        return s;
    }

    Statement parse_default(bool in_switch) {
        Statement s;
        s.kind = in_switch ? StatementKind::Default : StatementKind::Label;
        s.line = cur_line();
        ++pos_;
        if (at_punct(":")) ++pos_;
        if (!in_switch) s.condition_text = "default";
        return s;
    }

    // A control body that is a brace block contributes its children
    // directly; any other statement is the single child.
    static void attach_body(std::vector<Statement>& dest, Statement&& stmt) {
        if (stmt.kind == StatementKind::Block) {
            dest = std::move(stmt.children);
        } else {
            dest.push_back(std::move(stmt));
        }
    }

    std::string parse_parens() {
        std::string text;
        if (!at_punct("(")) return text;
        ++pos_;
        int depth = 1;
        while (pos_ < end_) {
            const SigTok& t = toks_[pos_];
            if (is_punct(t, "(")) ++depth;
            else if (is_punct(t, ")")) {
                --depth;
                if (depth == 0) { ++pos_; break; }
            }
            if (!text.empty()) text += ' ';
            text += t.tok->text;
            ++pos_;
        }
        return text;
    }

    // Consumes an expression/declaration statement through its terminating
    // semicolon, honoring nested (), [], {} groups (initializers).
    void consume_expression() {
        int depth = 0;
        while (pos_ < end_) {
            const SigTok& t = toks_[pos_];
            if (is_punct(t, "(") || is_punct(t, "[") || is_punct(t, "{")) {
                ++depth;
            } else if (is_punct(t, ")") || is_punct(t, "]")) {
                if (depth > 0) --depth;
            } else if (is_punct(t, "}")) {
                if (depth == 0) return;  // enclosing block closes; statement ends
                --depth;
            } else if (is_punct(t, ";") && depth == 0) {
                ++pos_;
                return;
            }
            ++pos_;
        }
    }

    void expect_close_brace() {
        if (at_punct("}")) {
            ++pos_;
        } else {
            diags_.push_back({"missing closing `}`", cur_line(), 0});
        }
    }

    const std::vector<SigTok>& toks_;
    std::size_t pos_;
    std::size_t end_;
    std::vector<Diagnostic>& diags_;
};

std::size_t match_forward(const std::vector<SigTok>& sig, std::size_t open,
                          std::string_view open_text, std::string_view close_text) {
    int depth = 0;
    for (std::size_t i = open; i < sig.size(); ++i) {
        if (is_punct(sig[i], open_text)) ++depth;
        else if (is_punct(sig[i], close_text)) {
            --depth;
            if (depth == 0) return i;
        }
    }
    return static_cast<std::size_t>(-1);
}

// ---------------------------------------------------------------------------
// CFG construction
// ---------------------------------------------------------------------------

class CfgBuilder {
public:
    explicit CfgBuilder(const FunctionUnit& unit) : unit_(unit) {}

    ControlFlowGraph build() {
        if (unit_.body.empty()) {
            int n = add_node("exit", unit_.start_line);
            graph_.entry_id = graph_.exit_id = n;
            finish();
            return std::move(graph_);
        }

        Flow seq = emit_sequence(unit_.body);
        std::vector<int> danglers = seq.exits;
        danglers.insert(danglers.end(), fn_exits_.begin(), fn_exits_.end());
        for (const auto& [node, name, line] : gotos_) {
            auto it = labels_.find(name);
            if (it != labels_.end()) {
                add_edge(node, it->second);
            } else {
                diag("goto to unknown label '" + name + "'", line);
                danglers.push_back(node);
            }
        }

        std::sort(danglers.begin(), danglers.end());
        danglers.erase(std::unique(danglers.begin(), danglers.end()),
                       danglers.end());

        int last = static_cast<int>(graph_.nodes.size()) - 1;
        if (danglers.empty()) {
            graph_.exit_id = add_node("exit", unit_.end_line);
            diag("no control path reaches the function exit", unit_.start_line);
        } else if (danglers.size() == 1 && danglers[0] == last &&
                   out_degree(last) == 0) {
            graph_.exit_id = last;  // natural single exit, no synthetic node
        } else {
            int e = add_node("exit", unit_.end_line);
            for (int d : danglers) add_edge(d, e);
            graph_.exit_id = e;
        }
        graph_.entry_id = 0;
        finish();
        return std::move(graph_);
    }

private:
    struct Flow {
        int entry = -1;
        std::vector<int> exits;
    };

    struct LoopCtx {
        int continue_target = -1;         // -1: collect for later (do-while)
        std::vector<int>* continue_sink = nullptr;
        std::vector<int>* break_sink = nullptr;
    };

    int add_node(std::string kind, int line) {
        int id = static_cast<int>(graph_.nodes.size());
        graph_.nodes.push_back({id, line, std::move(kind)});
        return id;
    }

    void add_edge(int from, int to) { edges_.insert({from, to}); }

    int out_degree(int node) const {
        int d = 0;
        for (const auto& [a, b] : edges_) {
            if (a == node) ++d;
        }
        return d;
    }

    void connect(const std::vector<int>& sources, int target) {
        for (int s : sources) add_edge(s, target);
    }

    void diag(std::string message, int line) {
        graph_.diagnostics.push_back({std::move(message), line, 0});
    }

    Flow emit_sequence(const std::vector<Statement>& stmts) {
        Flow flow;
        std::vector<int> pending;
        bool first = true;
        for (const Statement& s : stmts) {
            Flow r = emit_statement(s);
            if (first) {
                flow.entry = r.entry;
                first = false;
            } else {
                connect(pending, r.entry);
            }
            pending = std::move(r.exits);
        }
        flow.exits = std::move(pending);
        return flow;
    }

    // Like emit_sequence but guarantees a node, so branch arms and loop
    // bodies never collapse onto their successor (would fold two edges
    // into one and break the edge/node formula).
    Flow emit_body(const std::vector<Statement>& stmts, int line) {
        if (stmts.empty()) {
            int n = add_node("empty", line);
            return {n, {n}};
        }
        return emit_sequence(stmts);
    }

    Flow emit_statement(const Statement& s) {
        switch (s.kind) {
            case StatementKind::Simple: {
                int n = add_node("simple", s.line);
                return {n, {n}};
            }
            case StatementKind::Block: {
                if (s.children.empty()) {
                    int n = add_node("block", s.line);
                    return {n, {n}};
                }
                return emit_sequence(s.children);
            }
            case StatementKind::If: {
                int c = add_node("if", s.line);
                Flow then_arm = emit_body(s.children, s.line);
                add_edge(c, then_arm.entry);
                Flow flow;
                flow.entry = c;
                flow.exits = then_arm.exits;
                if (s.has_else) {
                    Flow else_arm = emit_body(s.else_children, s.line);
                    add_edge(c, else_arm.entry);
                    flow.exits.insert(flow.exits.end(), else_arm.exits.begin(),
                                      else_arm.exits.end());
                } else {
                    flow.exits.push_back(c);
                }
                return flow;
            }
            case StatementKind::While:
            case StatementKind::For: {
                int h = add_node(s.kind == StatementKind::While ? "while" : "for",
                                 s.line);
                std::vector<int> breaks;
                loops_.push_back({h, nullptr, &breaks});
                breakables_.push_back(&breaks);
                Flow body = emit_body(s.children, s.line);
                breakables_.pop_back();
                loops_.pop_back();
                add_edge(h, body.entry);
                connect(body.exits, h);  // back edges
                Flow flow;
                flow.entry = h;
                flow.exits = {h};  // loop-exit branch, kept even for `for(;;)`
                flow.exits.insert(flow.exits.end(), breaks.begin(), breaks.end());
                return flow;
            }
            case StatementKind::DoWhile: {
                std::vector<int> breaks;
                std::vector<int> continues;
                loops_.push_back({-1, &continues, &breaks});
                breakables_.push_back(&breaks);
                Flow body = emit_body(s.children, s.line);
                breakables_.pop_back();
                loops_.pop_back();
                int cond = add_node("do-while", s.line);
                connect(body.exits, cond);
                connect(continues, cond);
                add_edge(cond, body.entry);  // back edge
                Flow flow;
                flow.entry = body.entry;
                flow.exits = {cond};
                flow.exits.insert(flow.exits.end(), breaks.begin(), breaks.end());
                return flow;
            }
            case StatementKind::Switch:
                return emit_switch(s);
            case StatementKind::Break: {
                int n = add_node("break", s.line);
                if (breakables_.empty()) {
                    diag("break outside loop or switch", s.line);
                    fn_exits_.push_back(n);
                } else {
                    breakables_.back()->push_back(n);
                }
                return {n, {}};
            }
            case StatementKind::Continue: {
                int n = add_node("continue", s.line);
                if (loops_.empty()) {
                    diag("continue outside loop", s.line);
                    fn_exits_.push_back(n);
                } else if (loops_.back().continue_target >= 0) {
                    add_edge(n, loops_.back().continue_target);
                } else {
                    loops_.back().continue_sink->push_back(n);
                }
                return {n, {}};
            }
            case StatementKind::Return: {
                int n = add_node("return", s.line);
                fn_exits_.push_back(n);
                return {n, {}};
            }
            case StatementKind::Goto: {
                int n = add_node("goto", s.line);
                gotos_.push_back({n, s.condition_text, s.line});
                return {n, {}};
            }
            case StatementKind::Label:
            case StatementKind::Case:      // stray outside a switch
            case StatementKind::Default: {
                int n = add_node("label", s.line);
                if (!s.condition_text.empty() && !labels_.count(s.condition_text)) {
                    labels_[s.condition_text] = n;
                }
                return {n, {n}};
            }
        }
        int n = add_node("simple", s.line);
        return {n, {n}};
    }

    Flow emit_switch(const Statement& s) {
        int sw = add_node("switch", s.line);
        std::vector<int> breaks;
        breakables_.push_back(&breaks);

        std::vector<const Statement*> strays;
        std::vector<const Statement*> arms;
        bool has_default = false;
        for (const Statement& child : s.children) {
            if (child.kind == StatementKind::Case ||
                child.kind == StatementKind::Default) {
                arms.push_back(&child);
                has_default |= child.kind == StatementKind::Default;
            } else {
                strays.push_back(&child);
            }
        }

        std::vector<int> fallthrough;
        if (!strays.empty()) {
            // statements before the first label: no edge from the switch head
            std::vector<int> pending;
            bool first = true;
            for (const Statement* st : strays) {
                Flow r = emit_statement(*st);
                if (!first) connect(pending, r.entry);
                first = false;
                pending = std::move(r.exits);
            }
            fallthrough = std::move(pending);
        }

        for (const Statement* arm : arms) {
            int label = add_node(
                arm->kind == StatementKind::Case ? "case" : "default", arm->line);
            add_edge(sw, label);
            connect(fallthrough, label);
            if (arm->children.empty()) {
                fallthrough = {label};
            } else {
                Flow body = emit_sequence(arm->children);
                add_edge(label, body.entry);
                fallthrough = std::move(body.exits);
            }
        }

        breakables_.pop_back();
        Flow flow;
        flow.entry = sw;
        flow.exits = std::move(fallthrough);
        flow.exits.insert(flow.exits.end(), breaks.begin(), breaks.end());
        if (!has_default) flow.exits.push_back(sw);
        return flow;
    }

    void finish() {
        graph_.edges.assign(edges_.begin(), edges_.end());
        report_unreachable();
    }

    void report_unreachable() {
        std::size_t n = graph_.nodes.size();
        std::vector<char> fwd(n, 0), back(n, 0);
        auto bfs = [&](int start, std::vector<char>& seen, bool reverse) {
            std::vector<int> stack = {start};
            seen[static_cast<std::size_t>(start)] = 1;
            while (!stack.empty()) {
                int cur = stack.back();
                stack.pop_back();
                for (const auto& [a, b] : graph_.edges) {
                    int from = reverse ? b : a;
                    int to = reverse ? a : b;
                    if (from == cur && !seen[static_cast<std::size_t>(to)]) {
                        seen[static_cast<std::size_t>(to)] = 1;
                        stack.push_back(to);
                    }
                }
            }
        };
        if (n == 0) return;
        bfs(graph_.entry_id, fwd, false);
        bfs(graph_.exit_id, back, true);
        for (const CfgNode& node : graph_.nodes) {
            if (!fwd[static_cast<std::size_t>(node.id)]) {
                diag("unreachable statement (" + node.kind + ")", node.line);
            } else if (!back[static_cast<std::size_t>(node.id)]) {
                diag("no path to exit from " + node.kind + " statement",
                     node.line);
            }
        }
    }

    const FunctionUnit& unit_;
    ControlFlowGraph graph_;
    std::set<std::pair<int, int>> edges_;
    std::vector<LoopCtx> loops_;
    std::vector<std::vector<int>*> breakables_;
    std::vector<int> fn_exits_;
    std::vector<std::tuple<int, std::string, int>> gotos_;
    std::map<std::string, int> labels_;
};

int count_decisions(const std::vector<Statement>& stmts) {
    int count = 0;
    for (const Statement& s : stmts) {
        switch (s.kind) {
            case StatementKind::If:
            case StatementKind::While:
            case StatementKind::DoWhile:
            case StatementKind::For:
            case StatementKind::Case:
                ++count;
                break;
            default:
                break;
        }
        count += count_decisions(s.children);
        count += count_decisions(s.else_children);
    }
    return count;
}

}  // namespace

FunctionParse parse_functions(std::span<const Token> tokens) {
    FunctionParse result;
    std::vector<SigTok> sig;
    sig.reserve(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const Token& t = tokens[i];
        if (t.kind == TokenKind::Comment ||
            t.kind == TokenKind::PreprocessorDirective ||
            t.kind == TokenKind::EndOfInput) {
            continue;
        }
        sig.push_back({&t, i});
    }

    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    int depth = 0;
    std::size_t anchor = 0;
    std::size_t i = 0;
    bool skipped_unit = false;
    while (i < sig.size()) {
        const SigTok& t = sig[i];
        if (is_punct(t, "{")) {
            ++depth;
            ++i;
            continue;
        }
        if (is_punct(t, "}")) {
            if (depth > 0) --depth;
            ++i;
            if (depth == 0) anchor = i;
            continue;
        }
        if (depth == 0 && is_punct(t, ";")) {
            ++i;
            anchor = i;
            continue;
        }
        if (depth == 0 && t.tok->kind == TokenKind::Identifier &&
            i + 1 < sig.size() && is_punct(sig[i + 1], "(")) {
            std::size_t close_paren = match_forward(sig, i + 1, "(", ")");
            if (close_paren != npos && close_paren + 1 < sig.size() &&
                is_punct(sig[close_paren + 1], "{")) {
                std::size_t close_brace =
                    match_forward(sig, close_paren + 1, "{", "}");
                if (close_brace == npos) {
                    result.diagnostics.push_back(
                        {"unbalanced braces in function '" + t.tok->text +
                             "', unit skipped",
                         sig[close_paren + 1].tok->line,
                         sig[close_paren + 1].tok->column});
                    skipped_unit = true;
                    break;  // the rest of the stream is inside the broken body
                }
                FunctionUnit unit;
                unit.name = t.tok->text;
                unit.start_line = sig[anchor].tok->line;
                unit.end_line = sig[close_brace].tok->end_line;
                unit.token_begin = sig[anchor].orig;
                unit.token_end = sig[close_brace].orig + 1;
                unit.body_token_begin = sig[close_paren + 1].orig + 1;
                unit.body_token_end = sig[close_brace].orig;
                StatementParser parser(sig, close_paren + 2, close_brace,
                                       result.diagnostics);
                unit.body = parser.parse_sequence(false);
                result.units.push_back(std::move(unit));
                i = close_brace + 1;
                anchor = i;
                continue;
            }
        }
        ++i;
    }

    if (result.units.empty() && !skipped_unit && !sig.empty()) {
        FunctionUnit unit;
        unit.anonymous = true;
        unit.start_line = sig.front().tok->line;
        unit.end_line = sig.back().tok->end_line;
        unit.token_begin = sig.front().orig;
        unit.token_end = sig.back().orig + 1;
        unit.body_token_begin = unit.token_begin;
        unit.body_token_end = unit.token_end;
        StatementParser parser(sig, 0, sig.size(), result.diagnostics);
        unit.body = parser.parse_top_level();
        result.units.push_back(std::move(unit));
    }
    return result;
}

ControlFlowGraph build_cfg(const FunctionUnit& unit) {
    return CfgBuilder(unit).build();
}

int cyclomatic_edges_nodes(const ControlFlowGraph& cfg) {
    return static_cast<int>(cfg.edges.size()) -
           static_cast<int>(cfg.nodes.size()) + 2;
}

int cyclomatic_decisions(const FunctionUnit& unit) {
    return 1 + count_decisions(unit.body);
}

std::string_view complexity_band(int cc) {
    if (cc < 10) return "simple";
    if (cc <= 20) return "moderate";
    if (cc < 100) return "complex";
    return "out-of-control";
}

std::string dump_cfg(const ControlFlowGraph& cfg) {
    std::ostringstream out;
    for (const CfgNode& n : cfg.nodes) {
        out << "node " << n.id << ' ' << n.line << ' ' << n.kind << '\n';
    }
    for (const auto& [a, b] : cfg.edges) {
        out << a << " -> " << b << '\n';
    }
    return out.str();
}

}  // namespace ccmetrics
