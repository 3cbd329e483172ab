#include "cloudsim/expression.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace cloudsim {

namespace {

enum class Op {
    Const,
    Var,  // slot selects x/y/p/t
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Neg,
    Sin,
    Cos,
    Exp,
    Sqrt,
    Abs,
};

}  // namespace

struct Expression::Node {
    Op op;
    double value = 0.0;
    int slot = 0;
    std::shared_ptr<const Node> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    NodePtr parse() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != text_.size()) error("unexpected trailing input");
        return e;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    [[noreturn]] void error(const std::string& what) const {
        throw std::invalid_argument("expression \"" + text_ + "\" at offset " +
                                    std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t'))
            ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static NodePtr make(Op op, NodePtr a = nullptr, NodePtr b = nullptr) {
        auto n = std::make_shared<Expression::Node>();
        n->op = op;
        n->a = std::move(a);
        n->b = std::move(b);
        return n;
    }

    static NodePtr constant(double v) {
        auto n = std::make_shared<Expression::Node>();
        n->op = Op::Const;
        n->value = v;
        return n;
    }

    NodePtr expr() {  // addition level
        NodePtr lhs = term();
        for (;;) {
            if (accept('+'))
                lhs = make(Op::Add, lhs, term());
            else if (accept('-'))
                lhs = make(Op::Sub, lhs, term());
            else
                return lhs;
        }
    }

    NodePtr term() {  // multiplication level
        NodePtr lhs = unary();
        for (;;) {
            if (accept('*'))
                lhs = make(Op::Mul, lhs, unary());
            else if (accept('/'))
                lhs = make(Op::Div, lhs, unary());
            else
                return lhs;
        }
    }

    NodePtr unary() {
        if (accept('-')) return make(Op::Neg, unary());
        return power();
    }

    NodePtr power() {  // right-associative
        NodePtr base = atom();
        if (accept('^')) return make(Op::Pow, base, unary());
        return base;
    }

    NodePtr atom() {
        skip_ws();
        if (pos_ >= text_.size()) error("unexpected end of input");
        const char c = text_[pos_];

        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            if (!accept(')')) error("expected ')'");
            return e;
        }
        if ((c >= '0' && c <= '9') || c == '.') return number();
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) return name();
        error(std::string("unexpected character '") + c + "'");
    }

    NodePtr number() {
        const char* begin = text_.c_str() + pos_;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) error("malformed number");
        pos_ += static_cast<std::size_t>(end - begin);
        return constant(v);
    }

    NodePtr name() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
                (text_[pos_] >= 'A' && text_[pos_] <= 'Z')))
            ++pos_;
        const std::string id = text_.substr(start, pos_ - start);

        if (id == "pi") return constant(std::numbers::pi);
        if (id.size() == 1) {
            const int slot = [&] {
                switch (id[0]) {
                    case 'x': return 0;
                    case 'y': return 1;
                    case 'p': return 2;
                    case 't': return 3;
                    default: return -1;
                }
            }();
            if (slot >= 0) {
                auto n = std::make_shared<Expression::Node>();
                n->op = Op::Var;
                n->slot = slot;
                return n;
            }
        }

        Op op;
        if (id == "sin")
            op = Op::Sin;
        else if (id == "cos")
            op = Op::Cos;
        else if (id == "exp")
            op = Op::Exp;
        else if (id == "sqrt")
            op = Op::Sqrt;
        else if (id == "abs")
            op = Op::Abs;
        else {
            pos_ = start;
            error("unknown identifier '" + id + "'");
        }
        if (!accept('(')) error("expected '(' after " + id);
        NodePtr arg = expr();
        if (!accept(')')) error("expected ')'");
        return make(op, arg);
    }
};

double eval_node(const Expression::Node& n, const double* vars) {
    switch (n.op) {
        case Op::Const: return n.value;
        case Op::Var: return vars[n.slot];
        case Op::Add: return eval_node(*n.a, vars) + eval_node(*n.b, vars);
        case Op::Sub: return eval_node(*n.a, vars) - eval_node(*n.b, vars);
        case Op::Mul: return eval_node(*n.a, vars) * eval_node(*n.b, vars);
        case Op::Div: return eval_node(*n.a, vars) / eval_node(*n.b, vars);
        case Op::Pow:
            return std::pow(eval_node(*n.a, vars), eval_node(*n.b, vars));
        case Op::Neg: return -eval_node(*n.a, vars);
        case Op::Sin: return std::sin(eval_node(*n.a, vars));
        case Op::Cos: return std::cos(eval_node(*n.a, vars));
        case Op::Exp: return std::exp(eval_node(*n.a, vars));
        case Op::Sqrt: return std::sqrt(eval_node(*n.a, vars));
        case Op::Abs: return std::abs(eval_node(*n.a, vars));
    }
    return 0.0;  // unreachable
}

}  // namespace

Expression Expression::parse(const std::string& text) {
    Expression e;
    e.root_ = Parser(text).parse();
    e.text_ = text;
    return e;
}

double Expression::eval(double x, double y, double p, double t) const {
    if (!root_) throw std::logic_error("Expression: eval before parse");
    const double vars[4] = {x, y, p, t};
    return eval_node(*root_, vars);
}

}  // namespace cloudsim
