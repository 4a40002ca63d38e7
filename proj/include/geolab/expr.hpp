#pragma once

#include "geolab/errors.hpp"
#include "geolab/exterior.hpp"

#include <memory>
#include <string>
#include <vector>

namespace geolab {

// Source position, 1-based.
struct Pos {
    int line = 1;
    int col = 1;
};

// Parse-time errors. The what() string carries "line:col: message" so a
// caller that only prints the exception still shows the position.
class ParseError : public Error {
public:
    ParseError(const Pos& pos, const std::string& msg)
        : Error(std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": " + msg),
          pos_(pos) {}
    const Pos& pos() const { return pos_; }

private:
    Pos pos_;
};

class SyntaxError : public ParseError {
public:
    using ParseError::ParseError;
};
class UnboundName : public ParseError {
public:
    using ParseError::ParseError;
};
class TypeMismatch : public ParseError {
public:
    using ParseError::ParseError;
};
class ArityError : public ParseError {
public:
    using ParseError::ParseError;
};

// Expression tree. `Hat` is the `^` operator; it resolves to wedge or to an
// integer power only during evaluation, the tree itself is untyped.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Tag { Int, Name, Basis, Diff, Neg, Add, Sub, Mul, Div, Hat };

    Tag tag;
    Pos pos;
    long value = 0;           // Int
    std::string name;         // Name, Basis
    std::vector<ExprPtr> kids;

    static ExprPtr make_int(Pos p, long v);
    static ExprPtr make_name(Pos p, std::string n);
    static ExprPtr make_basis(Pos p, std::string n);
    static ExprPtr make_unary(Tag t, Pos p, ExprPtr a);
    static ExprPtr make_binary(Tag t, Pos p, ExprPtr a, ExprPtr b);
};

// Structural equality, positions ignored.
bool expr_equal(const ExprPtr& a, const ExprPtr& b);

// Canonical printing; parse(print(e)) reproduces e node for node.
std::string print_expr(const ExprPtr& e);

// A value an expression can take. Degree-0 results stay Scalar; `form` and
// `vector` statements coerce afterwards.
struct ExprValue {
    enum class Kind { Scalar, Form, Vector };
    Kind kind;
    Scalar scalar;
    std::optional<DiffForm> form;
    std::optional<MultiVector> vector;

    static ExprValue from_scalar(Scalar s);
    static ExprValue from_form(DiffForm f);
    static ExprValue from_vector(MultiVector v);
    std::string kind_name() const;
};

// Name lookup hook for the evaluator. `resolve` returns nullptr when the
// name is not a plain binding; the evaluator then tries coordinates and the
// literal `i` before reporting UnboundName. `kind_of` lets the evaluator
// tell a name bound to a non-expression object (a tensor, a structure) apart
// from a genuinely unknown one.
struct ExprEnv {
    ChartPtr chart; // may be null before a chart statement
    const ExprValue* (*resolve)(const void* ctx, const std::string& name) = nullptr;
    const char* (*kind_of)(const void* ctx, const std::string& name) = nullptr;
    const void* ctx = nullptr;
};

// Evaluates with full type checking; throws TypeMismatch / UnboundName with
// the position of the offending node.
ExprValue eval_expr(const ExprPtr& e, const ExprEnv& env);

} // namespace geolab
