#include "lexer.hpp"

namespace pprog {

const char* token_name(Tok kind) {
    switch (kind) {
        case Tok::Ident: return "identifier";
        case Tok::Number: return "number";
        case Tok::String: return "quoted string";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::LBrace: return "'{'";
        case Tok::RBrace: return "'}'";
        case Tok::LBracket: return "'['";
        case Tok::RBracket: return "']'";
        case Tok::Comma: return "','";
        case Tok::Colon: return "':'";
        case Tok::Semicolon: return "';'";
        case Tok::Question: return "'?'";
        case Tok::Assign: return "'='";
        case Tok::Arrow: return "'->'";
        case Tok::End: return "end of input";
    }
    return "?";
}

namespace {

bool ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool ident_char(char c) {
    return ident_start(c) || (c >= '0' && c <= '9');
}
bool digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::vector<Token> lex(const std::string& source) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    const size_t n = source.size();

    auto advance = [&](size_t count) {
        for (size_t k = 0; k < count; ++k) {
            if (source[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    auto push = [&](Tok kind, std::string text, SourceLoc loc) {
        out.push_back(Token{kind, std::move(text), loc});
    };

    while (i < n) {
        char c = source[i];
        SourceLoc loc{line, col};
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < n && source[i] != '\n') advance(1);
            continue;
        }
        if (ident_start(c)) {
            size_t start = i;
            while (i < n && ident_char(source[i])) advance(1);
            push(Tok::Ident, source.substr(start, i - start), loc);
            continue;
        }
        if (digit(c)) {
            size_t start = i;
            while (i < n && digit(source[i])) advance(1);
            if (i < n && source[i] == '.' && i + 1 < n && digit(source[i + 1])) {
                advance(1);
                while (i < n && digit(source[i])) advance(1);
            }
            push(Tok::Number, source.substr(start, i - start), loc);
            continue;
        }
        if (c == '\'') {
            advance(1);
            size_t start = i;
            while (i < n && source[i] != '\'' && source[i] != '\n') advance(1);
            if (i >= n || source[i] != '\'')
                throw Error(DiagCode::SyntaxError, "unterminated design string", loc,
                            {"'"});
            push(Tok::String, source.substr(start, i - start), loc);
            advance(1);
            continue;
        }
        if (c == '-' && i + 1 < n && source[i + 1] == '>') {
            advance(2);
            push(Tok::Arrow, "->", loc);
            continue;
        }
        Tok kind;
        switch (c) {
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case '{': kind = Tok::LBrace; break;
            case '}': kind = Tok::RBrace; break;
            case '[': kind = Tok::LBracket; break;
            case ']': kind = Tok::RBracket; break;
            case ',': kind = Tok::Comma; break;
            case ':': kind = Tok::Colon; break;
            case ';': kind = Tok::Semicolon; break;
            case '?': kind = Tok::Question; break;
            case '=': kind = Tok::Assign; break;
            default:
                throw Error(DiagCode::SyntaxError,
                            std::string("unexpected character '") + c + "'", loc);
        }
        advance(1);
        push(kind, std::string(1, c), loc);
    }
    out.push_back(Token{Tok::End, "", SourceLoc{line, col}});
    return out;
}

}  // namespace pprog
