#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace fairgame::modelc {

struct SourcePos {
    int line = 0;
    int column = 0;
};

// Expression tree of the modeling language. Nodes are immutable after
// parsing; shared_ptr keeps the AST copyable for tests.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind {
        IntLit,
        RealLit,
        BoolLit,
        Ident,    // constant or variable reference
        Index,    // table[row][col]
        Unary,    // op: '-' or '!'
        Binary,   // op2: + - * / % = != < <= > >= & |
    };

    Kind kind;
    SourcePos pos;
    long long int_value = 0;
    double real_value = 0.0;
    bool bool_value = false;
    std::string name;  // Ident name or Index table name
    char op = 0;
    std::string op2;
    ExprPtr lhs;  // Unary/Binary operand; Index row expression
    ExprPtr rhs;  // Binary operand; Index column expression
};

// Primed-assignment conjunction on the right of a probability. An empty
// assignment list is the literal `true` (state unchanged).
struct Update {
    SourcePos pos;
    std::vector<std::pair<std::string, ExprPtr>> assigns;
};

struct Branch {
    ExprPtr probability;
    Update update;
};

struct Command {
    SourcePos pos;
    std::string label;
    ExprPtr guard;
    std::vector<Branch> branches;
};

struct ConstDecl {
    SourcePos pos;
    std::string name;
    bool is_real = false;
    ExprPtr value;
};

struct TableDecl {
    SourcePos pos;
    std::string name;
    std::vector<std::vector<long long>> rows;  // rows x columns, rectangular
};

struct VarDecl {
    SourcePos pos;
    std::string name;
    ExprPtr lo;
    ExprPtr hi;
    ExprPtr init;
};

struct RewardItem {
    SourcePos pos;
    ExprPtr guard;
    ExprPtr value;
};

struct ModelAst {
    std::vector<ConstDecl> constants;
    std::vector<TableDecl> tables;
    std::vector<std::string> player1_labels;
    std::vector<std::string> player2_labels;
    std::string module_name;
    std::vector<VarDecl> variables;
    std::vector<Command> commands;
    std::vector<RewardItem> rewards;
};

}  // namespace fairgame::modelc
