#pragma once

#include "geolab/expr.hpp"
#include "geolab/structures.hpp"
#include "geolab/endo.hpp"

#include <map>
#include <variant>

namespace geolab {

// A typed binding in a scene. Structure constructors that blow up at
// evaluation time (a singular flat map, broken almost contact axioms) leave
// a Poisoned slot behind; checks that touch it report verdict "error"
// instead of aborting the run.
struct Poisoned {
    std::string message;
};

struct Binding {
    enum class Kind {
        Scalar, Form, Vector, Tensor, Jacobi, AlmostContact, Cosymplectic, Bundle, Endo
    };

    Kind kind;
    std::variant<std::monostate, Scalar, DiffForm, MultiVector, Tensor11, JacobiPair,
                 AlmostContact, CosymplecticPair, SubBundle, EndoJ, Poisoned>
        value;

    bool poisoned() const { return std::holds_alternative<Poisoned>(value); }
};

const char* binding_kind_name(Binding::Kind k);

// Statements keep the surface syntax (expression trees, argument names) so a
// scene can be printed back and reparsed to the same AST.
struct ChartStmt {
    std::string name;
    std::vector<std::string> coords;
};

struct BindStmt {
    std::string keyword; // scalar | form | vector | bivector
    std::string name;
    ExprPtr expr;
};

struct TensorRule {
    std::string coord;
    ExprPtr expr;
    Pos pos;
};

struct TensorStmt {
    std::string name;
    std::vector<TensorRule> rules;
};

struct StructureStmt {
    std::string kind;
    std::string name;
    std::vector<std::string> args;
};

struct CheckStmt {
    std::string check;
    std::vector<std::string> args;
    std::vector<std::pair<std::string, long>> opts;
    Pos pos;
};

using Stmt = std::variant<ChartStmt, BindStmt, TensorStmt, StructureStmt, CheckStmt>;

struct Scene {
    std::vector<Stmt> stmts;
    ChartPtr chart;                        // null for a scene with no chart
    std::map<std::string, Binding> bindings;
    std::vector<const CheckStmt*> checks() const;
};

// Statement-level structural equality; source positions are ignored, so a
// reparse of print_scene output compares equal to the original.
bool scene_equal(const Scene& a, const Scene& b);

// Parses and evaluates. Throws SyntaxError / UnboundName / TypeMismatch /
// ArityError with 1-based line:column positions.
Scene parse_scene(const std::string& text);

std::string print_scene(const Scene& s);

// The registered structure kinds and check names, for error messages and
// for the docs. Sorted.
std::vector<std::string> structure_kinds();
std::vector<std::string> check_names();

} // namespace geolab
