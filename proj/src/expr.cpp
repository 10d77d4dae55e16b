#include "fmetric/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <vector>

#include "fmetric/errors.hpp"

namespace fmetric {

struct Expression::Node {
    enum class Op { Const, X, Y, Neg, Add, Sub, Mul, Div, Pow, Call } op = Op::Const;
    double value = 0.0;
    std::string fn;
    std::vector<std::shared_ptr<const Node>> args;

    double eval(double x, double y) const {
        switch (op) {
            case Op::Const: return value;
            case Op::X: return x;
            case Op::Y: return y;
            case Op::Neg: return -args[0]->eval(x, y);
            case Op::Add: return args[0]->eval(x, y) + args[1]->eval(x, y);
            case Op::Sub: return args[0]->eval(x, y) - args[1]->eval(x, y);
            case Op::Mul: return args[0]->eval(x, y) * args[1]->eval(x, y);
            case Op::Div: return args[0]->eval(x, y) / args[1]->eval(x, y);
            case Op::Pow: return std::pow(args[0]->eval(x, y), args[1]->eval(x, y));
            case Op::Call: return call(x, y);
        }
        return 0.0;
    }

    double call(double x, double y) const {
        const double a = args[0]->eval(x, y);
        if (args.size() == 2) {
            const double b = args[1]->eval(x, y);
            if (fn == "min") return std::min(a, b);
            if (fn == "max") return std::max(a, b);
            return std::pow(a, b);
        }
        if (fn == "abs") return std::abs(a);
        if (fn == "exp") return std::exp(a);
        if (fn == "log") return std::log(a);
        if (fn == "sqrt") return std::sqrt(a);
        if (fn == "sin") return std::sin(a);
        if (fn == "cos") return std::cos(a);
        return std::tan(a);
    }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Op = Expression::Node::Op;

NodePtr make(Op op, std::vector<NodePtr> args = {}, double value = 0.0, std::string fn = {}) {
    auto n = std::make_shared<Expression::Node>();
    n->op = op;
    n->args = std::move(args);
    n->value = value;
    n->fn = std::move(fn);
    return n;
}

int arity(std::string_view fn) {
    for (auto f : {"abs", "exp", "log", "sqrt", "sin", "cos", "tan"}) {
        if (fn == f) return 1;
    }
    for (auto f : {"min", "max", "pow"}) {
        if (fn == f) return 2;
    }
    return 0;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr parse() {
        auto n = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected character");
        return n;
    }

    bool uses_x = false;
    bool uses_y = false;

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("expression '" + std::string(text_) + "': " + what + " at position " +
                         std::to_string(pos_));
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr expr() {
        auto lhs = term();
        for (;;) {
            if (accept('+')) lhs = make(Op::Add, {lhs, term()});
            else if (accept('-')) lhs = make(Op::Sub, {lhs, term()});
            else return lhs;
        }
    }

    NodePtr term() {
        auto lhs = unary();
        for (;;) {
            if (accept('*')) lhs = make(Op::Mul, {lhs, unary()});
            else if (accept('/')) lhs = make(Op::Div, {lhs, unary()});
            else return lhs;
        }
    }

    NodePtr unary() {
        if (accept('-')) return make(Op::Neg, {unary()});
        if (accept('+')) return unary();
        return power();
    }

    NodePtr power() {
        auto base = primary();
        if (accept('^')) return make(Op::Pow, {base, unary()});
        return base;
    }

    NodePtr primary() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        if (accept('(')) {
            auto n = expr();
            if (!accept(')')) fail("expected ')'");
            return n;
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        fail(std::string("unexpected '") + c + "'");
    }

    NodePtr number() {
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
        if (ec != std::errc()) fail("malformed number");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return make(Op::Const, {}, v);
    }

    NodePtr identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_')) {
            ++pos_;
        }
        const std::string name(text_.substr(start, pos_ - start));
        if (name == "x") {
            uses_x = true;
            return make(Op::X);
        }
        if (name == "y") {
            uses_y = true;
            return make(Op::Y);
        }
        if (name == "e") return make(Op::Const, {}, std::numbers::e);
        if (name == "pi") return make(Op::Const, {}, std::numbers::pi);
        const int n = arity(name);
        if (n == 0) {
            pos_ = start;
            fail("unknown identifier '" + name + "'");
        }
        if (!accept('(')) fail("expected '(' after " + name);
        std::vector<NodePtr> args{expr()};
        for (int i = 1; i < n; ++i) {
            if (!accept(',')) fail(name + " takes " + std::to_string(n) + " arguments");
            args.push_back(expr());
        }
        if (!accept(')')) fail("expected ')'");
        return make(Op::Call, std::move(args), 0.0, name);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Expression Expression::parse(std::string_view text) {
    Parser p(text);
    Expression e;
    e.root_ = p.parse();
    e.text_ = std::string(text);
    e.uses_x_ = p.uses_x;
    e.uses_y_ = p.uses_y;
    return e;
}

double Expression::operator()(double x, double y) const { return root_->eval(x, y); }

}  // namespace fmetric
