#pragma once

#include <map>
#include <string>
#include <vector>

#include "fairgame/modelc_ast.hpp"

namespace fairgame::modelc {

// Dynamically typed evaluation result: int, real or bool. Arithmetic on two
// ints stays int (except '/', which is always real division); any real
// operand promotes the result.
struct Value {
    enum class Kind { Int, Real, Bool };
    Kind kind = Kind::Int;
    long long i = 0;
    double d = 0.0;
    bool b = false;

    static Value of_int(long long v) { return {Kind::Int, v, 0.0, false}; }
    static Value of_real(double v) { return {Kind::Real, 0, v, false}; }
    static Value of_bool(bool v) { return {Kind::Bool, 0, 0.0, v}; }

    bool is_numeric() const { return kind != Kind::Bool; }
    double as_double() const { return kind == Kind::Int ? static_cast<double>(i) : d; }
};

struct EvalContext {
    const std::map<std::string, Value>* constants = nullptr;
    const std::map<std::string, const TableDecl*>* tables = nullptr;
    const std::map<std::string, int>* variable_index = nullptr;
    const std::vector<long long>* valuation = nullptr;
};

Value eval(const Expr& expr, const EvalContext& ctx);

// Checked accessors, throwing ModelError at the expression's position.
long long require_int(const Value& value, const Expr& expr, const char* what);
bool require_bool(const Value& value, const Expr& expr, const char* what);
double require_number(const Value& value, const Expr& expr, const char* what);

}  // namespace fairgame::modelc
