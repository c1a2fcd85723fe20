#include "eval.hpp"

#include <string>

#include "fairgame/errors.hpp"

namespace fairgame::modelc {

namespace {

[[noreturn]] void fail(const Expr& expr, const std::string& message) {
    throw ModelError(message, expr.pos.line, expr.pos.column);
}

Value numeric_binary(const Expr& expr, const Value& lhs, const Value& rhs) {
    if (!lhs.is_numeric() || !rhs.is_numeric()) {
        fail(expr, "operator '" + expr.op2 + "' needs numeric operands");
    }
    const bool both_int = lhs.kind == Value::Kind::Int && rhs.kind == Value::Kind::Int;
    const char op = expr.op2[0];
    switch (op) {
        case '+':
            return both_int ? Value::of_int(lhs.i + rhs.i)
                            : Value::of_real(lhs.as_double() + rhs.as_double());
        case '-':
            return both_int ? Value::of_int(lhs.i - rhs.i)
                            : Value::of_real(lhs.as_double() - rhs.as_double());
        case '*':
            return both_int ? Value::of_int(lhs.i * rhs.i)
                            : Value::of_real(lhs.as_double() * rhs.as_double());
        case '/':
            if (rhs.as_double() == 0.0) fail(expr, "division by zero");
            return Value::of_real(lhs.as_double() / rhs.as_double());
        case '%': {
            if (!both_int) fail(expr, "'%' needs integer operands");
            if (rhs.i <= 0) fail(expr, "'%' needs a positive divisor");
            // Mathematical modulus: the result is in [0, divisor) regardless
            // of the sign of the left operand.
            return Value::of_int(((lhs.i % rhs.i) + rhs.i) % rhs.i);
        }
        default:
            fail(expr, "unknown arithmetic operator '" + expr.op2 + "'");
    }
}

Value compare(const Expr& expr, const Value& lhs, const Value& rhs) {
    if (!lhs.is_numeric() || !rhs.is_numeric()) {
        fail(expr, "comparison '" + expr.op2 + "' needs numeric operands");
    }
    const bool both_int = lhs.kind == Value::Kind::Int && rhs.kind == Value::Kind::Int;
    int sign;
    if (both_int) {
        sign = lhs.i < rhs.i ? -1 : (lhs.i > rhs.i ? 1 : 0);
    } else {
        const double a = lhs.as_double();
        const double b = rhs.as_double();
        sign = a < b ? -1 : (a > b ? 1 : 0);
    }
    bool result;
    if (expr.op2 == "=") {
        result = sign == 0;
    } else if (expr.op2 == "!=") {
        result = sign != 0;
    } else if (expr.op2 == "<") {
        result = sign < 0;
    } else if (expr.op2 == "<=") {
        result = sign <= 0;
    } else if (expr.op2 == ">") {
        result = sign > 0;
    } else {
        result = sign >= 0;
    }
    return Value::of_bool(result);
}

}  // namespace

Value eval(const Expr& expr, const EvalContext& ctx) {
    switch (expr.kind) {
        case Expr::Kind::IntLit:
            return Value::of_int(expr.int_value);
        case Expr::Kind::RealLit:
            return Value::of_real(expr.real_value);
        case Expr::Kind::BoolLit:
            return Value::of_bool(expr.bool_value);
        case Expr::Kind::Ident: {
            if (ctx.variable_index) {
                auto it = ctx.variable_index->find(expr.name);
                if (it != ctx.variable_index->end()) {
                    return Value::of_int((*ctx.valuation)[static_cast<size_t>(it->second)]);
                }
            }
            if (ctx.constants) {
                auto it = ctx.constants->find(expr.name);
                if (it != ctx.constants->end()) return it->second;
            }
            if (ctx.tables && ctx.tables->count(expr.name)) {
                fail(expr, "table '" + expr.name + "' needs two indices");
            }
            fail(expr, "unknown identifier '" + expr.name + "'");
        }
        case Expr::Kind::Index: {
            if (!ctx.tables) fail(expr, "table '" + expr.name + "' is not available here");
            auto it = ctx.tables->find(expr.name);
            if (it == ctx.tables->end()) fail(expr, "unknown table '" + expr.name + "'");
            const TableDecl& table = *it->second;
            const long long row = require_int(eval(*expr.lhs, ctx), *expr.lhs, "table row index");
            const long long col =
                require_int(eval(*expr.rhs, ctx), *expr.rhs, "table column index");
            if (row < 0 || row >= static_cast<long long>(table.rows.size())) {
                fail(expr, "row index " + std::to_string(row) + " outside table '" + expr.name +
                               "' (" + std::to_string(table.rows.size()) + " rows)");
            }
            const auto& cells = table.rows[static_cast<size_t>(row)];
            if (col < 0 || col >= static_cast<long long>(cells.size())) {
                fail(expr, "column index " + std::to_string(col) + " outside table '" +
                               expr.name + "' (" + std::to_string(cells.size()) + " columns)");
            }
            return Value::of_int(cells[static_cast<size_t>(col)]);
        }
        case Expr::Kind::Unary: {
            if (expr.op == '!') {
                const Value v = eval(*expr.lhs, ctx);
                if (v.kind != Value::Kind::Bool) fail(expr, "'!' needs a boolean operand");
                return Value::of_bool(!v.b);
            }
            const Value v = eval(*expr.lhs, ctx);
            if (!v.is_numeric()) fail(expr, "unary '-' needs a numeric operand");
            if (v.kind == Value::Kind::Int) return Value::of_int(-v.i);
            return Value::of_real(-v.d);
        }
        case Expr::Kind::Binary: {
            if (expr.op2 == "&" || expr.op2 == "|") {
                const Value lhs = eval(*expr.lhs, ctx);
                if (lhs.kind != Value::Kind::Bool) {
                    fail(expr, "'" + expr.op2 + "' needs boolean operands");
                }
                // Short circuit, so guards like (row<N) & (T[col][row]=1) can
                // protect a table access with a range check.
                if (expr.op2 == "&" && !lhs.b) return Value::of_bool(false);
                if (expr.op2 == "|" && lhs.b) return Value::of_bool(true);
                const Value rhs = eval(*expr.rhs, ctx);
                if (rhs.kind != Value::Kind::Bool) {
                    fail(expr, "'" + expr.op2 + "' needs boolean operands");
                }
                return Value::of_bool(rhs.b);
            }
            const Value lhs = eval(*expr.lhs, ctx);
            const Value rhs = eval(*expr.rhs, ctx);
            if (expr.op2 == "=" || expr.op2 == "!=" || expr.op2 == "<" || expr.op2 == "<=" ||
                expr.op2 == ">" || expr.op2 == ">=") {
                return compare(expr, lhs, rhs);
            }
            return numeric_binary(expr, lhs, rhs);
        }
    }
    fail(expr, "malformed expression node");
}

long long require_int(const Value& value, const Expr& expr, const char* what) {
    if (value.kind != Value::Kind::Int) {
        throw ModelError(std::string(what) + " must be an integer", expr.pos.line,
                         expr.pos.column);
    }
    return value.i;
}

bool require_bool(const Value& value, const Expr& expr, const char* what) {
    if (value.kind != Value::Kind::Bool) {
        throw ModelError(std::string(what) + " must be boolean", expr.pos.line, expr.pos.column);
    }
    return value.b;
}

double require_number(const Value& value, const Expr& expr, const char* what) {
    if (!value.is_numeric()) {
        throw ModelError(std::string(what) + " must be numeric", expr.pos.line, expr.pos.column);
    }
    return value.as_double();
}

}  // namespace fairgame::modelc
