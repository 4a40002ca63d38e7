#include "geolab/expr.hpp"

namespace geolab {

ExprPtr Expr::make_int(Pos p, long v) {
    auto e = std::make_shared<Expr>();
    e->tag = Tag::Int;
    e->pos = p;
    e->value = v;
    return e;
}

ExprPtr Expr::make_name(Pos p, std::string n) {
    auto e = std::make_shared<Expr>();
    e->tag = Tag::Name;
    e->pos = p;
    e->name = std::move(n);
    return e;
}

ExprPtr Expr::make_basis(Pos p, std::string n) {
    auto e = std::make_shared<Expr>();
    e->tag = Tag::Basis;
    e->pos = p;
    e->name = std::move(n);
    return e;
}

ExprPtr Expr::make_unary(Tag t, Pos p, ExprPtr a) {
    auto e = std::make_shared<Expr>();
    e->tag = t;
    e->pos = p;
    e->kids = {std::move(a)};
    return e;
}

ExprPtr Expr::make_binary(Tag t, Pos p, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->tag = t;
    e->pos = p;
    e->kids = {std::move(a), std::move(b)};
    return e;
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a->tag != b->tag || a->value != b->value || a->name != b->name) return false;
    if (a->kids.size() != b->kids.size()) return false;
    for (std::size_t k = 0; k < a->kids.size(); ++k)
        if (!expr_equal(a->kids[k], b->kids[k])) return false;
    return true;
}

namespace {

// Precedence levels: 1 additive, 2 multiplicative, 3 unary minus, 4 hat.
int precedence(Expr::Tag t) {
    switch (t) {
    case Expr::Tag::Add:
    case Expr::Tag::Sub: return 1;
    case Expr::Tag::Mul:
    case Expr::Tag::Div: return 2;
    case Expr::Tag::Neg: return 3;
    case Expr::Tag::Hat: return 4;
    default: return 5;
    }
}

void print_into(const ExprPtr& e, int min_prec, std::string& out) {
    int prec = precedence(e->tag);
    bool parens = prec < min_prec;
    if (parens) out += "(";
    switch (e->tag) {
    case Expr::Tag::Int:
        out += std::to_string(e->value);
        break;
    case Expr::Tag::Name:
        out += e->name;
        break;
    case Expr::Tag::Basis:
        out += "@";
        out += e->name;
        break;
    case Expr::Tag::Diff:
        out += "d(";
        print_into(e->kids[0], 0, out);
        out += ")";
        break;
    case Expr::Tag::Neg:
        out += "-";
        print_into(e->kids[0], 3, out);
        break;
    case Expr::Tag::Add:
    case Expr::Tag::Sub:
        print_into(e->kids[0], 1, out);
        out += e->tag == Expr::Tag::Add ? " + " : " - ";
        print_into(e->kids[1], 2, out);
        break;
    case Expr::Tag::Mul:
    case Expr::Tag::Div:
        print_into(e->kids[0], 2, out);
        out += e->tag == Expr::Tag::Mul ? "*" : "/";
        print_into(e->kids[1], 3, out);
        break;
    case Expr::Tag::Hat:
        print_into(e->kids[0], 4, out);
        out += "^";
        print_into(e->kids[1], 5, out);
        break;
    }
    if (parens) out += ")";
}

[[noreturn]] void type_error(const Pos& pos, const std::string& msg) {
    throw TypeMismatch(pos, msg);
}

ExprValue add_values(const Pos& pos, const char* opname, const ExprValue& a,
                     const ExprValue& b, bool subtract) {
    using K = ExprValue::Kind;
    if (a.kind != b.kind)
        type_error(pos, std::string("cannot ") + opname + " " + a.kind_name() + " and "
                            + b.kind_name());
    try {
        switch (a.kind) {
        case K::Scalar:
            return ExprValue::from_scalar(subtract ? a.scalar - b.scalar
                                                   : a.scalar + b.scalar);
        case K::Form:
            return ExprValue::from_form(subtract ? *a.form - *b.form : *a.form + *b.form);
        case K::Vector:
            return ExprValue::from_vector(subtract ? *a.vector - *b.vector
                                                   : *a.vector + *b.vector);
        }
    } catch (const Error& err) {
        type_error(pos, err.what());
    }
    throw InternalError("unreachable");
}

} // namespace

std::string print_expr(const ExprPtr& e) {
    std::string out;
    print_into(e, 0, out);
    return out;
}

ExprValue ExprValue::from_scalar(Scalar s) {
    ExprValue v;
    v.kind = Kind::Scalar;
    v.scalar = std::move(s);
    return v;
}

ExprValue ExprValue::from_form(DiffForm f) {
    ExprValue v;
    v.kind = Kind::Form;
    v.form = std::move(f);
    return v;
}

ExprValue ExprValue::from_vector(MultiVector m) {
    ExprValue v;
    v.kind = Kind::Vector;
    v.vector = std::move(m);
    return v;
}

std::string ExprValue::kind_name() const {
    switch (kind) {
    case Kind::Scalar: return "scalar";
    case Kind::Form: return "form";
    case Kind::Vector: return "vector";
    }
    return "?";
}

ExprValue eval_expr(const ExprPtr& e, const ExprEnv& env) {
    using K = ExprValue::Kind;
    switch (e->tag) {
    case Expr::Tag::Int:
        return ExprValue::from_scalar(Scalar(e->value));

    case Expr::Tag::Name: {
        if (env.chart) {
            if (auto idx = env.chart->index(e->name))
                return ExprValue::from_scalar(Scalar::variable(*idx));
        }
        if (env.resolve) {
            const ExprValue* bound = env.resolve(env.ctx, e->name);
            if (bound) return *bound;
        }
        if (env.kind_of) {
            if (const char* k = env.kind_of(env.ctx, e->name))
                throw TypeMismatch(e->pos, std::string("a ") + k
                                               + " binding cannot appear in an expression");
        }
        if (e->name == "i") return ExprValue::from_scalar(Scalar(GaussRat::i()));
        throw UnboundName(e->pos, "unbound name '" + e->name + "'");
    }

    case Expr::Tag::Basis: {
        if (!env.chart)
            throw SyntaxError(e->pos, "basis vector '@" + e->name + "' before any chart");
        auto idx = env.chart->index(e->name);
        if (!idx)
            throw UnboundName(e->pos, "'@" + e->name + "' is not a chart coordinate");
        return ExprValue::from_vector(coord_vector(env.chart, *idx));
    }

    case Expr::Tag::Diff: {
        ExprValue a = eval_expr(e->kids[0], env);
        if (!env.chart) throw SyntaxError(e->pos, "d(...) before any chart");
        try {
            if (a.kind == K::Scalar)
                return ExprValue::from_form(d(DiffForm::function(env.chart, a.scalar)));
            if (a.kind == K::Form) return ExprValue::from_form(d(*a.form));
        } catch (const Error& err) {
            type_error(e->pos, err.what());
        }
        type_error(e->pos, "d(...) expects a scalar or a form, got " + a.kind_name());
    }

    case Expr::Tag::Neg: {
        ExprValue a = eval_expr(e->kids[0], env);
        switch (a.kind) {
        case K::Scalar: return ExprValue::from_scalar(-a.scalar);
        case K::Form: return ExprValue::from_form(-*a.form);
        case K::Vector: return ExprValue::from_vector(-*a.vector);
        }
        throw InternalError("unreachable");
    }

    case Expr::Tag::Add:
    case Expr::Tag::Sub:
        return add_values(e->pos, e->tag == Expr::Tag::Add ? "add" : "subtract",
                          eval_expr(e->kids[0], env), eval_expr(e->kids[1], env),
                          e->tag == Expr::Tag::Sub);

    case Expr::Tag::Mul: {
        ExprValue a = eval_expr(e->kids[0], env);
        ExprValue b = eval_expr(e->kids[1], env);
        try {
            if (a.kind == K::Scalar && b.kind == K::Scalar)
                return ExprValue::from_scalar(a.scalar * b.scalar);
            if (a.kind == K::Scalar && b.kind == K::Form)
                return ExprValue::from_form(a.scalar * *b.form);
            if (a.kind == K::Scalar && b.kind == K::Vector)
                return ExprValue::from_vector(a.scalar * *b.vector);
            if (a.kind == K::Form && b.kind == K::Scalar)
                return ExprValue::from_form(b.scalar * *a.form);
            if (a.kind == K::Vector && b.kind == K::Scalar)
                return ExprValue::from_vector(b.scalar * *a.vector);
        } catch (const Error& err) {
            type_error(e->pos, err.what());
        }
        type_error(e->pos,
                   "cannot multiply " + a.kind_name() + " and " + b.kind_name()
                       + " (use ^ for the wedge product)");
    }

    case Expr::Tag::Div: {
        ExprValue a = eval_expr(e->kids[0], env);
        ExprValue b = eval_expr(e->kids[1], env);
        if (b.kind != K::Scalar)
            type_error(e->pos, "cannot divide by a " + b.kind_name());
        try {
            Scalar inv = Scalar(1) / b.scalar;
            switch (a.kind) {
            case K::Scalar: return ExprValue::from_scalar(a.scalar * inv);
            case K::Form: return ExprValue::from_form(inv * *a.form);
            case K::Vector: return ExprValue::from_vector(inv * *a.vector);
            }
        } catch (const Error& err) {
            type_error(e->pos, err.what());
        }
        throw InternalError("unreachable");
    }

    case Expr::Tag::Hat: {
        ExprValue a = eval_expr(e->kids[0], env);
        ExprValue b = eval_expr(e->kids[1], env);
        try {
            if (a.kind == K::Form && b.kind == K::Form)
                return ExprValue::from_form(wedge(*a.form, *b.form));
            if (a.kind == K::Vector && b.kind == K::Vector)
                return ExprValue::from_vector(wedge(*a.vector, *b.vector));
            if (a.kind == K::Scalar && b.kind == K::Scalar) {
                // Integer power; the exponent must be a literal nonnegative
                // constant.
                const ExprPtr& raw = e->kids[1];
                if (raw->tag != Expr::Tag::Int || raw->value < 0)
                    type_error(e->pos, "scalar power needs a nonnegative integer literal");
                Scalar out(1);
                for (long k = 0; k < raw->value; ++k) out = out * a.scalar;
                return ExprValue::from_scalar(out);
            }
        } catch (const Error& err) {
            type_error(e->pos, err.what());
        }
        type_error(e->pos, "cannot wedge " + a.kind_name() + " and " + b.kind_name());
    }
    }
    throw InternalError("unreachable expression tag");
}

} // namespace geolab
