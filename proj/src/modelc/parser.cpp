#include <algorithm>
#include <set>

#include "fairgame/errors.hpp"
#include "fairgame/modelc.hpp"
#include "lexer.hpp"

namespace fairgame::modelc {

namespace {

// Recursive-descent parser over the token stream. Operator precedence,
// loosest to tightest: | then & then comparisons (non-associative) then
// additive then multiplicative then unary - and !.
class Parser {
  public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    ModelAst parse_model() {
        ModelAst ast;
        while (!at_end()) {
            if (peek_ident("const")) {
                parse_const(ast);
            } else if (peek_ident("player1") || peek_ident("player2")) {
                parse_players(ast);
            } else if (peek_ident("module")) {
                parse_module(ast);
            } else if (peek_ident("rewards")) {
                parse_rewards(ast);
            } else {
                fail("expected a declaration (const, player1, player2, module, rewards)");
            }
        }
        check_declarations(ast);
        return ast;
    }

  private:
    std::vector<Token> tokens_;
    size_t pos_ = 0;

    const Token& peek(size_t ahead = 0) const {
        const size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
        return tokens_[i];
    }
    bool at_end() const { return peek().kind == TokenKind::End; }
    const Token& advance() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const std::string& message) const {
        const Token& t = peek();
        std::string where = t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
        throw ModelError(message + " before " + where, t.pos.line, t.pos.column);
    }

    bool peek_ident(const char* word, size_t ahead = 0) const {
        const Token& t = peek(ahead);
        return t.kind == TokenKind::Ident && t.text == word;
    }
    bool peek_punct(const char* punct, size_t ahead = 0) const {
        const Token& t = peek(ahead);
        return t.kind == TokenKind::Punct && t.text == punct;
    }

    void expect_ident(const char* word) {
        if (!peek_ident(word)) fail(std::string("expected '") + word + "'");
        advance();
    }
    void expect_punct(const char* punct) {
        if (!peek_punct(punct)) fail(std::string("expected '") + punct + "'");
        advance();
    }
    std::string expect_name(const char* what) {
        if (peek().kind != TokenKind::Ident) fail(std::string("expected ") + what);
        return advance().text;
    }

    static bool is_keyword(const std::string& name) {
        static const std::set<std::string> kKeywords = {
            "const", "int",    "double",     "player1", "player2", "module",
            "endmodule", "rewards", "endrewards", "init",    "true",    "false"};
        return kKeywords.count(name) > 0;
    }

    // const int NAME = e; | const double NAME = e; | const int[][] NAME = [[..],..];
    void parse_const(ModelAst& ast) {
        const SourcePos at = peek().pos;
        expect_ident("const");
        bool is_real = false;
        if (peek_ident("double")) {
            advance();
            is_real = true;
        } else if (peek_ident("int")) {
            advance();
            if (peek_punct("[")) {
                expect_punct("[");
                expect_punct("]");
                expect_punct("[");
                expect_punct("]");
                parse_table(ast, at);
                return;
            }
        } else {
            fail("expected 'int' or 'double' after 'const'");
        }

        ConstDecl decl;
        decl.pos = at;
        decl.is_real = is_real;
        decl.name = expect_name("a constant name");
        expect_punct("=");
        decl.value = parse_expr();
        expect_punct(";");
        ast.constants.push_back(std::move(decl));
    }

    void parse_table(ModelAst& ast, SourcePos pos) {
        TableDecl decl;
        decl.pos = pos;
        decl.name = expect_name("a table name");
        expect_punct("=");
        expect_punct("[");
        while (true) {
            expect_punct("[");
            std::vector<long long> row;
            while (true) {
                row.push_back(parse_table_entry());
                if (peek_punct(",")) {
                    advance();
                    continue;
                }
                break;
            }
            expect_punct("]");
            decl.rows.push_back(std::move(row));
            if (peek_punct(",")) {
                advance();
                continue;
            }
            break;
        }
        expect_punct("]");
        expect_punct(";");
        for (const auto& row : decl.rows) {
            if (row.size() != decl.rows.front().size()) {
                throw ModelError("table '" + decl.name + "' rows have unequal lengths", pos.line,
                                 pos.column);
            }
        }
        ast.tables.push_back(std::move(decl));
    }

    long long parse_table_entry() {
        bool negative = false;
        if (peek_punct("-")) {
            advance();
            negative = true;
        }
        if (peek().kind != TokenKind::IntLit) fail("expected an integer table entry");
        const long long v = advance().int_value;
        return negative ? -v : v;
    }

    void parse_players(ModelAst& ast) {
        const bool first = peek_ident("player1");
        advance();
        expect_punct("[");
        std::vector<std::string>& labels = first ? ast.player1_labels : ast.player2_labels;
        // An empty list is fine; games where one player owns nothing are
        // ordinary MDPs and the language can express them directly.
        while (!peek_punct("]")) {
            labels.push_back(expect_name("an action label"));
            if (peek_punct(",")) {
                advance();
                continue;
            }
            break;
        }
        expect_punct("]");
        expect_punct(";");
    }

    void parse_module(ModelAst& ast) {
        expect_ident("module");
        ast.module_name = expect_name("a module name");
        while (!peek_ident("endmodule")) {
            if (at_end()) fail("expected 'endmodule'");
            if (peek_punct("[")) {
                parse_command(ast);
            } else {
                parse_variable(ast);
            }
        }
        expect_ident("endmodule");
    }

    // name : [e..e] init e;
    void parse_variable(ModelAst& ast) {
        VarDecl decl;
        decl.pos = peek().pos;
        decl.name = expect_name("a variable name");
        if (is_keyword(decl.name)) {
            throw ModelError("'" + decl.name + "' is reserved", decl.pos.line, decl.pos.column);
        }
        expect_punct(":");
        expect_punct("[");
        decl.lo = parse_expr();
        expect_punct("..");
        decl.hi = parse_expr();
        expect_punct("]");
        expect_ident("init");
        decl.init = parse_expr();
        expect_punct(";");
        ast.variables.push_back(std::move(decl));
    }

    // [lbl] guard -> p : upd (+ p : upd)* ;
    void parse_command(ModelAst& ast) {
        Command cmd;
        cmd.pos = peek().pos;
        expect_punct("[");
        cmd.label = expect_name("an action label");
        expect_punct("]");
        cmd.guard = parse_expr();
        expect_punct("->");
        while (true) {
            Branch branch;
            branch.probability = parse_expr();
            expect_punct(":");
            branch.update = parse_update();
            cmd.branches.push_back(std::move(branch));
            if (peek_punct("+")) {
                advance();
                continue;
            }
            break;
        }
        expect_punct(";");
        ast.commands.push_back(std::move(cmd));
    }

    // true | (v'=e) & (v'=e) & ...
    Update parse_update() {
        Update update;
        update.pos = peek().pos;
        if (peek_ident("true")) {
            advance();
            return update;
        }
        while (true) {
            expect_punct("(");
            const SourcePos at = peek().pos;
            std::string name = expect_name("a variable name");
            expect_punct("'");
            expect_punct("=");
            ExprPtr value = parse_expr();
            expect_punct(")");
            for (const auto& [existing, unused] : update.assigns) {
                if (existing == name) {
                    throw ModelError("variable '" + name + "' assigned twice in one update",
                                     at.line, at.column);
                }
            }
            update.assigns.emplace_back(std::move(name), std::move(value));
            if (peek_punct("&")) {
                advance();
                continue;
            }
            break;
        }
        return update;
    }

    void parse_rewards(ModelAst& ast) {
        expect_ident("rewards");
        while (!peek_ident("endrewards")) {
            if (at_end()) fail("expected 'endrewards'");
            RewardItem item;
            item.pos = peek().pos;
            item.guard = parse_expr();
            expect_punct(":");
            item.value = parse_expr();
            expect_punct(";");
            ast.rewards.push_back(std::move(item));
        }
        expect_ident("endrewards");
    }

    ExprPtr parse_expr() { return parse_or(); }

    ExprPtr make_binary(const std::string& op, ExprPtr lhs, ExprPtr rhs, SourcePos pos) {
        auto node = std::make_shared<Expr>();
        node->kind = Expr::Kind::Binary;
        node->pos = pos;
        node->op2 = op;
        node->lhs = std::move(lhs);
        node->rhs = std::move(rhs);
        return node;
    }

    ExprPtr parse_or() {
        ExprPtr lhs = parse_and();
        while (peek_punct("|")) {
            const SourcePos pos = advance().pos;
            lhs = make_binary("|", std::move(lhs), parse_and(), pos);
        }
        return lhs;
    }

    ExprPtr parse_and() {
        ExprPtr lhs = parse_comparison();
        while (peek_punct("&")) {
            const SourcePos pos = advance().pos;
            lhs = make_binary("&", std::move(lhs), parse_comparison(), pos);
        }
        return lhs;
    }

    ExprPtr parse_comparison() {
        ExprPtr lhs = parse_additive();
        static const char* kOps[] = {"=", "!=", "<=", ">=", "<", ">"};
        for (const char* op : kOps) {
            if (peek_punct(op)) {
                const SourcePos pos = advance().pos;
                return make_binary(op, std::move(lhs), parse_additive(), pos);
            }
        }
        return lhs;
    }

    ExprPtr parse_additive() {
        ExprPtr lhs = parse_multiplicative();
        while (peek_punct("+") || peek_punct("-")) {
            const std::string op = peek().text;
            const SourcePos pos = advance().pos;
            lhs = make_binary(op, std::move(lhs), parse_multiplicative(), pos);
        }
        return lhs;
    }

    ExprPtr parse_multiplicative() {
        ExprPtr lhs = parse_unary();
        while (peek_punct("*") || peek_punct("/") || peek_punct("%")) {
            const std::string op = peek().text;
            const SourcePos pos = advance().pos;
            lhs = make_binary(op, std::move(lhs), parse_unary(), pos);
        }
        return lhs;
    }

    ExprPtr parse_unary() {
        if (peek_punct("-") || peek_punct("!")) {
            const char op = peek().text[0];
            const SourcePos pos = advance().pos;
            auto node = std::make_shared<Expr>();
            node->kind = Expr::Kind::Unary;
            node->pos = pos;
            node->op = op;
            node->lhs = parse_unary();
            return node;
        }
        return parse_primary();
    }

    ExprPtr parse_primary() {
        const Token& t = peek();
        auto node = std::make_shared<Expr>();
        node->pos = t.pos;
        switch (t.kind) {
            case TokenKind::IntLit:
                node->kind = Expr::Kind::IntLit;
                node->int_value = t.int_value;
                advance();
                return node;
            case TokenKind::RealLit:
                node->kind = Expr::Kind::RealLit;
                node->real_value = t.real_value;
                advance();
                return node;
            case TokenKind::Ident: {
                if (t.text == "true" || t.text == "false") {
                    node->kind = Expr::Kind::BoolLit;
                    node->bool_value = t.text == "true";
                    advance();
                    return node;
                }
                node->name = advance().text;
                if (peek_punct("[")) {
                    node->kind = Expr::Kind::Index;
                    expect_punct("[");
                    node->lhs = parse_expr();
                    expect_punct("]");
                    expect_punct("[");
                    node->rhs = parse_expr();
                    expect_punct("]");
                } else {
                    node->kind = Expr::Kind::Ident;
                }
                return node;
            }
            case TokenKind::Punct:
                if (t.text == "(") {
                    advance();
                    ExprPtr inner = parse_expr();
                    expect_punct(")");
                    return inner;
                }
                break;
            case TokenKind::End:
                break;
        }
        fail("expected an expression");
    }

    void check_declarations(const ModelAst& ast) {
        std::set<std::string> names;
        const auto declare = [&](const std::string& name, SourcePos pos, const char* what) {
            if (!names.insert(name).second) {
                throw ModelError(std::string("duplicate declaration of ") + what + " '" + name +
                                     "'",
                                 pos.line, pos.column);
            }
        };
        for (const auto& c : ast.constants) declare(c.name, c.pos, "constant");
        for (const auto& t : ast.tables) declare(t.name, t.pos, "table");
        for (const auto& v : ast.variables) declare(v.name, v.pos, "variable");

        std::set<std::string> p1(ast.player1_labels.begin(), ast.player1_labels.end());
        std::set<std::string> p2(ast.player2_labels.begin(), ast.player2_labels.end());
        if (p1.size() != ast.player1_labels.size() || p2.size() != ast.player2_labels.size()) {
            throw ModelError("a player declaration repeats an action label");
        }
        for (const auto& label : p1) {
            if (p2.count(label)) {
                throw ModelError("action label '" + label + "' is owned by both players");
            }
        }
        for (const auto& cmd : ast.commands) {
            if (!p1.count(cmd.label) && !p2.count(cmd.label)) {
                throw ModelError("action label '" + cmd.label +
                                     "' is not declared by player1 or player2",
                                 cmd.pos.line, cmd.pos.column);
            }
        }
    }
};

}  // namespace

ModelAst parse(const std::string& text) { return Parser(tokenize(text)).parse_model(); }

}  // namespace fairgame::modelc
