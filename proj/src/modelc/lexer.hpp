#pragma once

#include <string>
#include <vector>

#include "fairgame/modelc_ast.hpp"

namespace fairgame::modelc {

enum class TokenKind { Ident, IntLit, RealLit, Punct, End };

struct Token {
    TokenKind kind = TokenKind::End;
    SourcePos pos;
    std::string text;       // identifier spelling or punctuation
    long long int_value = 0;
    double real_value = 0.0;
};

// Tokenizes the whole input up front. `//` comments run to end of line.
// Throws ModelError on stray characters or malformed numbers.
std::vector<Token> tokenize(const std::string& text);

}  // namespace fairgame::modelc
