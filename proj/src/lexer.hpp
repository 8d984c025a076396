#ifndef PPROG_SRC_LEXER_HPP
#define PPROG_SRC_LEXER_HPP

#include "pprog/diagnostics.hpp"

#include <string>
#include <vector>

namespace pprog {

enum class Tok {
    Ident,
    Number,
    String,  // contents of a single-quoted 'design' literal
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Comma,
    Colon,
    Semicolon,
    Question,
    Assign,
    Arrow,
    End,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    SourceLoc loc;
};

const char* token_name(Tok kind);

/// Tokenizes P-program source. `#` comments run to end of line. The only
/// quoting construct is the single-quoted design string.
std::vector<Token> lex(const std::string& source);

}  // namespace pprog

#endif
