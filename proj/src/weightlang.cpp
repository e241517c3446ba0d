#include "cesdual/weightlang.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace cesdual::weightlang {

namespace {

struct Parser {
    std::string_view src;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& expected) {
        std::ostringstream msg;
        msg << "syntax error at byte " << pos << ": expected " << expected;
        throw ParseError(msg.str(), pos, expected);
    }

    bool eat(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) { ++pos; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        for (;;) {
            if (eat('+')) e = binary(BinOp::Add, e, parse_term());
            else if (eat('-')) e = binary(BinOp::Sub, e, parse_term());
            else return e;
        }
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_factor();
        for (;;) {
            if (eat('*')) e = binary(BinOp::Mul, e, parse_factor());
            else if (eat('/')) e = binary(BinOp::Div, e, parse_factor());
            else return e;
        }
    }

    // "^" binds tighter than unary minus: -2^2 is -(2^2).
    ExprPtr parse_factor() {
        if (eat('-')) {
            auto u = std::make_shared<Expr>();
            u->kind = Expr::Kind::Unary;
            u->un_op = UnOp::Neg;
            u->lhs = parse_factor();
            return u;
        }
        ExprPtr base = parse_base();
        if (eat('^')) return binary(BinOp::Pow, base, parse_factor()); // right-assoc
        return base;
    }

    ExprPtr parse_base() {
        skip_ws();
        if (pos >= src.size()) fail("number, identifier or '('");
        char c = src[pos];
        if (c == '(') {
            ++pos;
            ExprPtr e = parse_expr();
            if (!eat(')')) fail("')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
        fail("number, identifier or '('");
    }

    ExprPtr parse_number() {
        std::size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos < src.size() && src[pos] == '.') {
            ++pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        }
        if (pos == start || (pos == start + 1 && src[start] == '.')) fail("decimal literal");
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Constant;
        e->value = std::stod(std::string(src.substr(start, pos - start)));
        return e;
    }

    ExprPtr parse_ident() {
        std::size_t start = pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            ++pos;
        std::string name(src.substr(start, pos - start));

        if (peek() == '(') {
            eat('(');
            ExprPtr arg = parse_expr();
            if (!eat(')')) fail("')'");
            auto e = std::make_shared<Expr>();
            if (name == "exp" || name == "log" || name == "loglog") {
                e->kind = Expr::Kind::Unary;
                e->un_op = name == "exp" ? UnOp::Exp : name == "log" ? UnOp::Log : UnOp::LogLog;
                e->lhs = arg;
            } else {
                e->kind = Expr::Kind::Call;
                e->name = name;
                e->lhs = arg;
            }
            return e;
        }

        auto e = std::make_shared<Expr>();
        if (name == "i" || name == "n") {
            e->kind = Expr::Kind::Variable;
            e->var = name[0];
        } else if (name == "exp" || name == "log" || name == "loglog") {
            fail("'(' after function name '" + name + "'");
        } else {
            e->kind = Expr::Kind::Parameter;
            e->name = name;
        }
        return e;
    }

    static ExprPtr binary(BinOp op, ExprPtr l, ExprPtr r) {
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Binary;
        e->bin_op = op;
        e->lhs = std::move(l);
        e->rhs = std::move(r);
        return e;
    }
};

const char* un_name(UnOp op) {
    switch (op) {
        case UnOp::Neg: return "-";
        case UnOp::Exp: return "exp";
        case UnOp::Log: return "log";
        case UnOp::LogLog: return "loglog";
    }
    return "?";
}

char bin_name(BinOp op) {
    switch (op) {
        case BinOp::Add: return '+';
        case BinOp::Sub: return '-';
        case BinOp::Mul: return '*';
        case BinOp::Div: return '/';
        case BinOp::Pow: return '^';
    }
    return '?';
}

[[noreturn]] void domain_error(const std::string& what, const Expr& e) {
    throw EvalError("domain error: " + what + " in `" + pretty_print(e) + "`",
                    pretty_print(e));
}

} // namespace

ExprPtr parse(std::string_view source) {
    Parser p{source};
    ExprPtr e = p.parse_expr();
    p.skip_ws();
    if (p.pos != source.size()) p.fail("end of input");
    return e;
}

std::string pretty_print(const Expr& e) {
    std::ostringstream out;
    out.precision(17);
    switch (e.kind) {
        case Expr::Kind::Constant: out << e.value; break;
        case Expr::Kind::Variable: out << e.var; break;
        case Expr::Kind::Parameter: out << e.name; break;
        case Expr::Kind::Unary:
            if (e.un_op == UnOp::Neg) out << "(-" << pretty_print(*e.lhs) << ")";
            else out << un_name(e.un_op) << "(" << pretty_print(*e.lhs) << ")";
            break;
        case Expr::Kind::Binary:
            out << "(" << pretty_print(*e.lhs) << bin_name(e.bin_op)
                << pretty_print(*e.rhs) << ")";
            break;
        case Expr::Kind::Call:
            out << e.name << "(" << pretty_print(*e.lhs) << ")";
            break;
    }
    return out.str();
}

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Expr::Kind::Constant: return a.value == b.value;
        case Expr::Kind::Variable: return a.var == b.var;
        case Expr::Kind::Parameter: return a.name == b.name;
        case Expr::Kind::Unary:
            return a.un_op == b.un_op && structurally_equal(*a.lhs, *b.lhs);
        case Expr::Kind::Binary:
            return a.bin_op == b.bin_op && structurally_equal(*a.lhs, *b.lhs) &&
                   structurally_equal(*a.rhs, *b.rhs);
        case Expr::Kind::Call:
            return a.name == b.name && structurally_equal(*a.lhs, *b.lhs);
    }
    return false;
}

double eval(const Expr& e, const EvalContext& ctx) {
    switch (e.kind) {
        case Expr::Kind::Constant: return e.value;
        case Expr::Kind::Variable: return e.var == 'i' ? ctx.i : ctx.n;
        case Expr::Kind::Parameter: {
            if (ctx.params) {
                auto it = ctx.params->find(e.name);
                if (it != ctx.params->end()) return it->second;
            }
            throw EvalError("unbound parameter `" + e.name + "`", e.name);
        }
        case Expr::Kind::Unary: {
            double x = eval(*e.lhs, ctx);
            switch (e.un_op) {
                case UnOp::Neg: return -x;
                case UnOp::Exp: return std::exp(x); // overflows to +inf
                case UnOp::Log:
                    if (!(x > 0)) domain_error("log of non-positive value", e);
                    return std::log(x);
                case UnOp::LogLog:
                    if (!(x > 1)) domain_error("loglog of value <= 1", e);
                    return std::log(std::log(x));
            }
            return 0;
        }
        case Expr::Kind::Binary: {
            double a = eval(*e.lhs, ctx);
            double b = eval(*e.rhs, ctx);
            switch (e.bin_op) {
                case BinOp::Add: return a + b;
                case BinOp::Sub: return a - b;
                case BinOp::Mul: return a * b;
                case BinOp::Div:
                    if (b == 0) domain_error("division by zero", e);
                    return a / b;
                case BinOp::Pow: {
                    if (a == 0 && b == 0) domain_error("0^0", e);
                    if (a < 0 && b != std::floor(b))
                        domain_error("negative base with non-integer exponent", e);
                    return std::pow(a, b);
                }
            }
            return 0;
        }
        case Expr::Kind::Call: {
            double x = eval(*e.lhs, ctx);
            if (e.name == "identity") return x;
            if (ctx.sequences) {
                auto it = ctx.sequences->find(e.name);
                if (it != ctx.sequences->end()) {
                    double idx = std::floor(x + 0.5);
                    if (std::abs(x - idx) > 1e-9 || idx < 1 ||
                        idx > static_cast<double>(it->second.size()))
                        domain_error("sequence index out of range", e);
                    return it->second[static_cast<std::size_t>(idx) - 1];
                }
            }
            throw EvalError("unknown sequence `" + e.name +
                                "`; valid names: identity plus user tables",
                            e.name);
        }
    }
    return 0;
}

std::pair<std::vector<std::string>, std::vector<std::string>>
free_identifiers(const Expr& e) {
    std::set<std::string> params, calls;
    auto walk = [&](auto&& self, const Expr& node) -> void {
        switch (node.kind) {
            case Expr::Kind::Parameter: params.insert(node.name); break;
            case Expr::Kind::Call:
                if (node.name != "identity") calls.insert(node.name);
                self(self, *node.lhs);
                break;
            case Expr::Kind::Unary: self(self, *node.lhs); break;
            case Expr::Kind::Binary:
                self(self, *node.lhs);
                self(self, *node.rhs);
                break;
            default: break;
        }
    };
    walk(walk, e);
    return {{params.begin(), params.end()}, {calls.begin(), calls.end()}};
}

} // namespace cesdual::weightlang
