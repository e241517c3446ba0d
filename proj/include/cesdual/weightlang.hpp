// Expression language for weight definitions.
//
// Weight families are written as closed-form expressions for log a_n(i) in
// the two index variables i and n, free parameters, and named sequences.
// Grammar (EBNF):
//
//   expr   := term (("+"|"-") term)* ;
//   term   := factor (("*"|"/") factor)* ;
//   factor := base ("^" factor)? ;
//   base   := number | ident | ident "(" expr ")" | "(" expr ")" | "-" base ;
//
// Reserved function names: exp, log, loglog.  Reserved variables: i, n.
// "^" is right-associative and binds tighter than unary minus.

#ifndef CESDUAL_WEIGHTLANG_HPP
#define CESDUAL_WEIGHTLANG_HPP

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cesdual::weightlang {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class UnOp { Neg, Exp, Log, LogLog };
enum class BinOp { Add, Sub, Mul, Div, Pow };

struct Expr {
    enum class Kind { Constant, Variable, Parameter, Unary, Binary, Call };

    Kind kind;
    double value = 0.0;   // Constant
    char var = 0;         // Variable: 'i' or 'n'
    std::string name;     // Parameter or Call
    UnOp un_op = UnOp::Neg;
    BinOp bin_op = BinOp::Add;
    ExprPtr lhs, rhs;     // Unary/Call use lhs only
};

struct ParseError : std::runtime_error {
    ParseError(std::string msg, std::size_t offset, std::string expected)
        : std::runtime_error(std::move(msg)), offset(offset),
          expected(std::move(expected)) {}
    std::size_t offset;   // byte offset into the source
    std::string expected; // expected-token description
};

struct EvalError : std::runtime_error {
    EvalError(std::string msg, std::string subexpr)
        : std::runtime_error(std::move(msg)), subexpr(std::move(subexpr)) {}
    std::string subexpr;  // pretty-printed offending subexpression
};

ExprPtr parse(std::string_view source);

// Fully parenthesized form; parse(pretty_print(e)) is structurally equal to e.
std::string pretty_print(const Expr& e);

bool structurally_equal(const Expr& a, const Expr& b);

struct EvalContext {
    double i = 1;
    double n = 1;
    const std::map<std::string, double>* params = nullptr;
    const std::map<std::string, std::vector<double>>* sequences = nullptr;
};

// Evaluates in double precision with explicit +/-inf propagation; an overflow
// of the final result is reported as +inf.  Domain violations (log of a
// non-positive value, loglog of a value <= 1, 0^0, division by zero, a
// sequence index outside its table) raise EvalError naming the subexpression.
double eval(const Expr& e, const EvalContext& ctx);

// Free identifiers: .first = parameters, .second = named-sequence calls.
// Built-in names (i, n, exp, log, loglog, identity) are excluded.
std::pair<std::vector<std::string>, std::vector<std::string>>
free_identifiers(const Expr& e);

} // namespace cesdual::weightlang

#endif
