#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mwd/gf.hpp"
#include "mwd/points_ideal.hpp"

namespace mwd {

// Expression tree over {AND, OR, NOT, var}.  Variables are 1-based.
struct BoolExpr {
    enum class Kind { Var, Not, And, Or };

    Kind kind;
    int var = 0;                         // Kind::Var
    std::shared_ptr<const BoolExpr> lhs; // Not/And/Or
    std::shared_ptr<const BoolExpr> rhs; // And/Or
};

using BoolExprPtr = std::shared_ptr<const BoolExpr>;

BoolExprPtr bvar(int var);
BoolExprPtr bnot(BoolExprPtr e);
BoolExprPtr band(BoolExprPtr a, BoolExprPtr b);
BoolExprPtr bor(BoolExprPtr a, BoolExprPtr b);

// Evaluates over {0,1}; bits[i] is the value of variable i+1.
uint32_t eval_bool(const BoolExpr& e, const std::vector<uint32_t>& bits);

// Number of times each variable 1..nvars occurs in the expression.
std::vector<int> var_occurrences(const BoolExpr& e, int nvars);

std::string bool_str(const BoolExpr& e);

struct FanoutFreeFunction {
    int id;
    int support_size;           // k: the function reads its first k inputs
    Polynomial polynomial;      // over F_2 in variables x1..xk
    BoolExprPtr boolean_form;
    bool example_only = false;  // not part of the fanout-free table
};

// Evaluates f on the first k coordinates of an ambient F_2 point.
uint32_t evaluate(const FanoutFreeFunction& f, const Point& point);
uint32_t evaluate_boolean(const FanoutFreeFunction& f, const Point& point);

// The nine fanout-free functions of up to four variables, ids 1..9,
// one representative per equivalence class under variable relabeling.
const std::vector<FanoutFreeFunction>& table2_catalog();

// f(x1,x2,x3) = 1 + x2 + x2x3, id 10; kept for the worked data sets.
const FanoutFreeFunction& example_function();

// Catalog plus the example function.
const std::vector<FanoutFreeFunction>& full_catalog();

// Lookup by id (1..10); null when absent.
const FanoutFreeFunction* find_function(int id);

// Lookup by polynomial text, e.g. "x1x2+x3x4+x1x2x3x4"; null when absent.
const FanoutFreeFunction* find_function(const std::string& polynomial_text);

} // namespace mwd
