#include "mwd/boolean_catalog.hpp"

#include "mwd/errors.hpp"

namespace mwd {

BoolExprPtr bvar(int var) {
    auto e = std::make_shared<BoolExpr>();
    e->kind = BoolExpr::Kind::Var;
    e->var = var;
    return e;
}

BoolExprPtr bnot(BoolExprPtr operand) {
    auto e = std::make_shared<BoolExpr>();
    e->kind = BoolExpr::Kind::Not;
    e->lhs = std::move(operand);
    return e;
}

static BoolExprPtr binary(BoolExpr::Kind kind, BoolExprPtr a, BoolExprPtr b) {
    auto e = std::make_shared<BoolExpr>();
    e->kind = kind;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

BoolExprPtr band(BoolExprPtr a, BoolExprPtr b) {
    return binary(BoolExpr::Kind::And, std::move(a), std::move(b));
}

BoolExprPtr bor(BoolExprPtr a, BoolExprPtr b) {
    return binary(BoolExpr::Kind::Or, std::move(a), std::move(b));
}

uint32_t eval_bool(const BoolExpr& e, const std::vector<uint32_t>& bits) {
    switch (e.kind) {
    case BoolExpr::Kind::Var:
        return bits[static_cast<size_t>(e.var - 1)];
    case BoolExpr::Kind::Not:
        return 1u - eval_bool(*e.lhs, bits);
    case BoolExpr::Kind::And:
        return eval_bool(*e.lhs, bits) & eval_bool(*e.rhs, bits);
    case BoolExpr::Kind::Or:
        return eval_bool(*e.lhs, bits) | eval_bool(*e.rhs, bits);
    }
    return 0;
}

static void count_vars(const BoolExpr& e, std::vector<int>& counts) {
    switch (e.kind) {
    case BoolExpr::Kind::Var:
        if (e.var >= 1 && e.var <= static_cast<int>(counts.size()))
            ++counts[static_cast<size_t>(e.var - 1)];
        return;
    case BoolExpr::Kind::Not:
        count_vars(*e.lhs, counts);
        return;
    case BoolExpr::Kind::And:
    case BoolExpr::Kind::Or:
        count_vars(*e.lhs, counts);
        count_vars(*e.rhs, counts);
        return;
    }
}

std::vector<int> var_occurrences(const BoolExpr& e, int nvars) {
    std::vector<int> counts(static_cast<size_t>(nvars), 0);
    count_vars(e, counts);
    return counts;
}

// AND binds tighter than OR; chains of the same connective print flat.
static void print_expr(const BoolExpr& e, BoolExpr::Kind parent,
                       std::string& out) {
    switch (e.kind) {
    case BoolExpr::Kind::Var:
        out += "x" + std::to_string(e.var);
        return;
    case BoolExpr::Kind::Not:
        out += "NOT ";
        if (e.lhs->kind == BoolExpr::Kind::Var) {
            print_expr(*e.lhs, e.kind, out);
        } else {
            out += "(";
            print_expr(*e.lhs, BoolExpr::Kind::Var, out);
            out += ")";
        }
        return;
    case BoolExpr::Kind::And:
    case BoolExpr::Kind::Or: {
        bool parens = parent == BoolExpr::Kind::Not ||
                      ((parent == BoolExpr::Kind::And ||
                        parent == BoolExpr::Kind::Or) &&
                       parent != e.kind);
        if (parens) out += "(";
        print_expr(*e.lhs, e.kind, out);
        out += e.kind == BoolExpr::Kind::And ? " AND " : " OR ";
        print_expr(*e.rhs, e.kind, out);
        if (parens) out += ")";
        return;
    }
    }
}

std::string bool_str(const BoolExpr& e) {
    std::string out;
    print_expr(e, BoolExpr::Kind::Var, out);
    return out;
}

static uint32_t checked_eval(const FanoutFreeFunction& f, const Point& point,
                             bool boolean) {
    if (point.dimension() < f.support_size)
        throw input_error("point has " + std::to_string(point.dimension()) +
                          " coordinates but the function reads " +
                          std::to_string(f.support_size));
    std::vector<uint32_t> bits;
    bits.reserve(static_cast<size_t>(f.support_size));
    for (int i = 0; i < f.support_size; ++i) {
        if (point[i] > 1)
            throw input_error("coordinate " + std::to_string(i + 1) +
                              " is not a value over F_2");
        bits.push_back(point[i]);
    }
    if (boolean) return eval_bool(*f.boolean_form, bits);
    return evaluate(PrimeField(2), f.polynomial, Point(std::move(bits)));
}

uint32_t evaluate(const FanoutFreeFunction& f, const Point& point) {
    return checked_eval(f, point, false);
}

uint32_t evaluate_boolean(const FanoutFreeFunction& f, const Point& point) {
    return checked_eval(f, point, true);
}

static FanoutFreeFunction make_function(int id, int support_size,
                                        const std::string& polynomial_text,
                                        BoolExprPtr boolean_form,
                                        bool example_only = false) {
    FanoutFreeFunction f;
    f.id = id;
    f.support_size = support_size;
    f.polynomial =
        parse_polynomial(polynomial_text, support_size, PrimeField(2));
    f.boolean_form = std::move(boolean_form);
    f.example_only = example_only;
    return f;
}

const std::vector<FanoutFreeFunction>& table2_catalog() {
    static const std::vector<FanoutFreeFunction> catalog = [] {
        auto x1 = [] { return bvar(1); };
        auto x2 = [] { return bvar(2); };
        auto x3 = [] { return bvar(3); };
        auto x4 = [] { return bvar(4); };
        std::vector<FanoutFreeFunction> fns;
        fns.push_back(make_function(1, 1, "x1", x1()));
        fns.push_back(make_function(2, 2, "x1x2", band(x1(), x2())));
        fns.push_back(
            make_function(3, 3, "x1x2x3", band(x1(), band(x2(), x3()))));
        fns.push_back(make_function(4, 3, "x1x2+x1x3+x1x2x3",
                                    band(x1(), bor(x2(), x3()))));
        fns.push_back(make_function(5, 4, "x1x2x3x4",
                                    band(x1(), band(x2(), band(x3(), x4())))));
        fns.push_back(make_function(6, 4, "x1x2x3+x4+x1x2x3x4",
                                    bor(band(x1(), band(x2(), x3())), x4())));
        fns.push_back(make_function(
            7, 4, "x1x2x3x4+x1x2x3+x1x2x4+x1x2+x3x4+x3+x4",
            bor(band(x1(), x2()), bor(x3(), x4()))));
        fns.push_back(make_function(8, 4, "x1x2+x3x4+x1x2x3x4",
                                    bor(band(x1(), x2()), band(x3(), x4()))));
        fns.push_back(make_function(9, 4, "x1x2x4+x3x4+x1x2x3x4",
                                    band(bor(band(x1(), x2()), x3()), x4())));
        return fns;
    }();
    return catalog;
}

const FanoutFreeFunction& example_function() {
    static const FanoutFreeFunction f = make_function(
        10, 3, "1+x2+x2x3", bor(bnot(bvar(2)), bvar(3)), true);
    return f;
}

const std::vector<FanoutFreeFunction>& full_catalog() {
    static const std::vector<FanoutFreeFunction> all = [] {
        auto fns = table2_catalog();
        fns.push_back(example_function());
        return fns;
    }();
    return all;
}

const FanoutFreeFunction* find_function(int id) {
    for (const auto& f : full_catalog())
        if (f.id == id) return &f;
    return nullptr;
}

const FanoutFreeFunction* find_function(const std::string& polynomial_text) {
    for (const auto& f : full_catalog()) {
        try {
            if (parse_polynomial(polynomial_text, f.support_size,
                                 PrimeField(2)) == f.polynomial)
                return &f;
        } catch (const input_error&) {
            // not parseable in this arity; keep looking
        }
    }
    return nullptr;
}

} // namespace mwd
