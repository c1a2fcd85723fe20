#include "lexer.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>

#include "fairgame/errors.hpp"

namespace fairgame::modelc {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    size_t i = 0;
    int line = 1;
    int column = 1;

    const auto advance = [&](size_t count) {
        for (size_t k = 0; k < count; ++k) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
            ++i;
        }
    };

    while (i < text.size()) {
        const char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }

        Token token;
        token.pos = {line, column};

        if (ident_start(c)) {
            size_t j = i;
            while (j < text.size() && ident_char(text[j])) ++j;
            token.kind = TokenKind::Ident;
            token.text = text.substr(i, j - i);
            advance(j - i);
            out.push_back(std::move(token));
            continue;
        }

        if (digit(c)) {
            size_t j = i;
            bool real = false;
            while (j < text.size() && digit(text[j])) ++j;
            // A '.' continues the number only when not part of the '..' range
            // punctuation and followed by a digit.
            if (j + 1 < text.size() && text[j] == '.' && text[j + 1] != '.' && digit(text[j + 1])) {
                real = true;
                ++j;
                while (j < text.size() && digit(text[j])) ++j;
            }
            if (j < text.size() && (text[j] == 'e' || text[j] == 'E')) {
                size_t k = j + 1;
                if (k < text.size() && (text[k] == '+' || text[k] == '-')) ++k;
                if (k < text.size() && digit(text[k])) {
                    real = true;
                    j = k;
                    while (j < text.size() && digit(text[j])) ++j;
                }
            }
            const std::string spelling = text.substr(i, j - i);
            if (real) {
                token.kind = TokenKind::RealLit;
                token.real_value = std::strtod(spelling.c_str(), nullptr);
            } else {
                token.kind = TokenKind::IntLit;
                errno = 0;
                token.int_value = std::strtoll(spelling.c_str(), nullptr, 10);
                if (errno == ERANGE) {
                    throw ModelError("integer literal out of range", line, column);
                }
            }
            token.text = spelling;
            advance(j - i);
            out.push_back(std::move(token));
            continue;
        }

        static const char* kTwoChar[] = {"->", "..", "<=", ">=", "!="};
        bool matched = false;
        for (const char* p : kTwoChar) {
            if (c == p[0] && i + 1 < text.size() && text[i + 1] == p[1]) {
                token.kind = TokenKind::Punct;
                token.text = p;
                advance(2);
                out.push_back(std::move(token));
                matched = true;
                break;
            }
        }
        if (matched) continue;

        static const std::string kSingle = "+-*/%=<>&|!()[]:;,'.";
        if (kSingle.find(c) != std::string::npos) {
            token.kind = TokenKind::Punct;
            token.text = std::string(1, c);
            advance(1);
            out.push_back(std::move(token));
            continue;
        }

        throw ModelError(std::string("unexpected character '") + c + "'", line, column);
    }

    Token end;
    end.kind = TokenKind::End;
    end.pos = {line, column};
    out.push_back(std::move(end));
    return out;
}

}  // namespace fairgame::modelc
