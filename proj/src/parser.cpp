#include "lexer.hpp"
#include "pprog/frontend.hpp"

#include <cstdint>
#include <stdexcept>

namespace pprog {

const char* design_name(Design d) {
    switch (d) {
        case Design::Auto: return "auto";
        case Design::NoSignal: return "no-signal";
        case Design::Signal: return "signal";
        case Design::Order: return "order";
    }
    return "?";
}

namespace {

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    Program run() {
        Program prog;
        bool seen_context = false;
        while (!at_keyword("return")) {
            if (at_keyword("def")) {
                if (seen_context)
                    fail("component definitions must precede the first context",
                         {"'return'", "'var'"});
                prog.components.push_back(component_def());
            } else if (at_keyword("var")) {
                seen_context = true;
                prog.contexts.push_back(context_def());
            } else {
                fail("expected a top-level item", {"'def'", "'var'", "'return'"});
            }
        }
        prog.directive = directive();
        expect(Tok::End);
        return prog;
    }

private:
    const Token& cur() const { return toks_[pos_]; }
    const Token& peek(size_t ahead = 1) const {
        size_t k = pos_ + ahead;
        return k < toks_.size() ? toks_[k] : toks_.back();
    }
    Token take() { return toks_[pos_++]; }

    bool at(Tok kind) const { return cur().kind == kind; }
    bool at_keyword(const char* text) const {
        return cur().kind == Tok::Ident && cur().text == text;
    }

    [[noreturn]] void fail(const std::string& msg,
                           std::vector<std::string> expected) const {
        throw Error(DiagCode::SyntaxError, msg + ", found '" + describe(cur()) + "'",
                    cur().loc, std::move(expected));
    }
    static std::string describe(const Token& t) {
        return t.kind == Tok::End ? "end of input" : t.text;
    }

    Token expect(Tok kind) {
        if (!at(kind))
            fail(std::string("expected ") + token_name(kind), {token_name(kind)});
        return take();
    }
    void keyword(const char* text) {
        if (!at_keyword(text))
            fail(std::string("expected '") + text + "'",
                 {std::string("'") + text + "'"});
        take();
    }

    std::vector<std::string> ident_list() {
        std::vector<std::string> names;
        names.push_back(expect(Tok::Ident).text);
        while (at(Tok::Comma)) {
            take();
            names.push_back(expect(Tok::Ident).text);
        }
        return names;
    }

    Rational number() {
        Token t = expect(Tok::Number);
        return rational_from_decimal(t.text);
    }

    Rational flip_expr() {
        keyword("flip");
        expect(Tok::LParen);
        Rational bias = number();
        expect(Tok::RParen);
        return bias;
    }

    ComponentDef component_def() {
        ComponentDef def;
        def.loc = cur().loc;
        keyword("def");
        def.name = expect(Tok::Ident).text;
        expect(Tok::Assign);
        keyword("component");
        expect(Tok::LParen);
        def.variables = ident_list();
        expect(Tok::RParen);
        return def;
    }

    ContextDef context_def() {
        ContextDef ctx;
        ctx.loc = cur().loc;
        keyword("var");
        ctx.name = expect(Tok::Ident).text;
        expect(Tok::Assign);
        keyword("context");
        expect(Tok::LParen);
        expect(Tok::RParen);
        expect(Tok::LBrace);
        while (at_keyword("var")) statement(ctx);
        if (!at_keyword("return"))
            fail("expected a statement or the context's return",
                 {"'var'", "'return'"});
        return_stmt(ctx);
        expect(Tok::RBrace);
        expect(Tok::Semicolon);
        return ctx;
    }

    void statement(ContextDef& ctx) {
        SourceLoc loc = cur().loc;
        keyword("var");
        std::string name = expect(Tok::Ident).text;
        expect(Tok::Assign);
        if (at(Tok::LBracket)) {
            take();
            auto vars = ident_list();
            expect(Tok::RBracket);
            JointList jl;
            jl.name = name;
            jl.vars = std::move(vars);
            jl.stmts_before = ctx.statements.size();
            jl.loc = loc;
            ctx.joint_lists.push_back(std::move(jl));
            return;
        }
        if (at_keyword("flip")) {
            ctx.statements.push_back(Stmt::flip(name, flip_expr(), loc));
            return;
        }
        if (at(Tok::Ident)) {
            std::string condition = take().text;
            expect(Tok::Question);
            if (!at_keyword("flip"))
                fail("conditionals select between two flips; deeper nesting is "
                     "not supported",
                     {"'flip'"});
            Rational if_true = flip_expr();
            expect(Tok::Colon);
            if (!at_keyword("flip"))
                fail("conditionals select between two flips; deeper nesting is "
                     "not supported",
                     {"'flip'"});
            Rational if_false = flip_expr();
            ctx.statements.push_back(
                Stmt::cond(name, condition, if_true, if_false, loc));
            return;
        }
        fail("expected a random expression or a joint list",
             {"'flip'", "identifier", "'['"});
    }

    void return_stmt(ContextDef& ctx) {
        keyword("return");
        expect(Tok::LBrace);
        keyword("Infer");
        expect(Tok::LParen);
        expect(Tok::LBrace);
        keyword("samples");
        expect(Tok::Colon);
        Token count = expect(Tok::Number);
        if (count.text.find('.') != std::string::npos)
            throw Error(DiagCode::SyntaxError, "sample count must be an integer",
                        count.loc, {"integer"});
        ctx.samples = std::stoull(count.text);
        expect(Tok::RBrace);
        expect(Tok::Comma);
        ctx.joint_name = expect(Tok::Ident).text;
        expect(Tok::RParen);
        expect(Tok::RBrace);
    }

    ModelDirective directive() {
        ModelDirective dir;
        dir.loc = cur().loc;
        keyword("return");
        expect(Tok::LBrace);
        keyword("model");
        expect(Tok::LParen);
        if (at(Tok::LBrace)) {
            take();
            keyword("design");
            expect(Tok::Colon);
            Token str = expect(Tok::String);
            parse_design(str, dir);
            expect(Tok::Comma);
            dir.context_names = ident_list();
            expect(Tok::RBrace);
        } else {
            dir.context_names = ident_list();
        }
        expect(Tok::RParen);
        expect(Tok::RBrace);
        return dir;
    }

    /// design ::= "no-signal" | "order" | "signal(" IDENT "->" IDENT ")"
    void parse_design(const Token& str, ModelDirective& dir) {
        const std::string& s = str.text;
        if (s == "no-signal") {
            dir.design = Design::NoSignal;
            return;
        }
        if (s == "order") {
            dir.design = Design::Order;
            return;
        }
        if (s.rfind("signal(", 0) == 0 && s.back() == ')') {
            std::string inner = s.substr(7, s.size() - 8);
            size_t arrow = inner.find("->");
            if (arrow != std::string::npos) {
                dir.design = Design::Signal;
                dir.signal_from = inner.substr(0, arrow);
                dir.signal_to = inner.substr(arrow + 2);
                if (!dir.signal_from.empty() && !dir.signal_to.empty()) return;
            }
        }
        throw Error(DiagCode::SyntaxError, "unknown design '" + s + "'", str.loc,
                    {"'no-signal'", "'order'", "'signal(A->B)'"});
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

}  // namespace

Program parse(const std::string& source) {
    return Parser(lex(source)).run();
}

}  // namespace pprog
