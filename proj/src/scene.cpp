#include "geolab/scene.hpp"

#include <algorithm>
#include <functional>

namespace geolab {

const char* binding_kind_name(Binding::Kind k) {
    switch (k) {
    case Binding::Kind::Scalar: return "scalar";
    case Binding::Kind::Form: return "form";
    case Binding::Kind::Vector: return "vector";
    case Binding::Kind::Tensor: return "tensor11";
    case Binding::Kind::Jacobi: return "jacobi pair";
    case Binding::Kind::AlmostContact: return "almost contact structure";
    case Binding::Kind::Cosymplectic: return "cosymplectic pair";
    case Binding::Kind::Bundle: return "bundle";
    case Binding::Kind::Endo: return "endomorphism";
    }
    return "?";
}

namespace {

// ---------------------------------------------------------------- lexer

struct Token {
    enum class Type { Ident, Int, Punct, End };
    Type type = Type::End;
    std::string text;
    long num = 0;
    Pos pos;
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    Pos pos{1, 1};
    std::size_t k = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t a = 0; a < n; ++a) {
            if (text[k + a] == '\n') {
                ++pos.line;
                pos.col = 1;
            } else {
                ++pos.col;
            }
        }
        k += n;
    };
    while (k < text.size()) {
        char c = text[k];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '#') {
            std::size_t end = text.find('\n', k);
            advance((end == std::string::npos ? text.size() : end) - k);
            continue;
        }
        Token t;
        t.pos = pos;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t len = 1;
            while (k + len < text.size()
                   && (std::isalnum(static_cast<unsigned char>(text[k + len]))
                       || text[k + len] == '_'))
                ++len;
            t.type = Token::Type::Ident;
            t.text = text.substr(k, len);
            advance(len);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t len = 1;
            while (k + len < text.size()
                   && std::isdigit(static_cast<unsigned char>(text[k + len])))
                ++len;
            t.type = Token::Type::Int;
            t.text = text.substr(k, len);
            if (t.text.size() > 12)
                throw SyntaxError(pos, "integer literal too large: " + t.text);
            t.num = std::stol(t.text);
            advance(len);
        } else if (c == '-' && k + 1 < text.size() && text[k + 1] == '>') {
            t.type = Token::Type::Punct;
            t.text = "->";
            advance(2);
        } else if (std::string("(){},;=^*+-/@").find(c) != std::string::npos) {
            t.type = Token::Type::Punct;
            t.text = std::string(1, c);
            advance(1);
        } else {
            throw SyntaxError(pos, std::string("unexpected character '") + c + "'");
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.pos = pos;
    out.push_back(end);
    return out;
}

// ---------------------------------------------------------------- registry

struct StructureSig {
    std::vector<Binding::Kind> args;
    Binding::Kind result;
    // Builds the value; engine errors that depend on the actual value (a
    // singular flat map, failed axioms) are caught by the caller and poison
    // the binding instead of failing the parse.
    std::function<Binding(const std::vector<const Binding*>&)> build;
};

Binding make_binding(Binding::Kind k) {
    Binding b;
    b.kind = k;
    return b;
}

template <class T> Binding wrap(Binding::Kind k, T v) {
    Binding b;
    b.kind = k;
    b.value = std::move(v);
    return b;
}

const std::map<std::string, StructureSig>& structure_registry() {
    using K = Binding::Kind;
    static const std::map<std::string, StructureSig> reg = {
        {"jacobi",
         {{K::Vector, K::Vector}, K::Jacobi,
          [](const std::vector<const Binding*>& a) {
              return wrap(K::Jacobi, JacobiPair(std::get<MultiVector>(a[0]->value),
                                                std::get<MultiVector>(a[1]->value)));
          }}},
        {"jacobi_from_contact",
         {{K::Form}, K::Jacobi,
          [](const std::vector<const Binding*>& a) {
              return wrap(K::Jacobi, jacobi_from_contact(std::get<DiffForm>(a[0]->value)));
          }}},
        {"graph_jacobi",
         {{K::Jacobi}, K::Bundle,
          [](const std::vector<const Binding*>& a) {
              return wrap(K::Bundle, graph_jacobi(std::get<JacobiPair>(a[0]->value)));
          }}},
        {"graph_form",
         {{K::Form, K::Form}, K::Bundle,
          [](const std::vector<const Binding*>& a) {
              return wrap(K::Bundle, graph_omega_eta(std::get<DiffForm>(a[0]->value),
                                                     std::get<DiffForm>(a[1]->value)));
          }}},
        {"almost_contact",
         {{K::Tensor, K::Vector, K::Form}, K::AlmostContact,
          [](const std::vector<const Binding*>& a) {
              return wrap(K::AlmostContact,
                          AlmostContact(std::get<Tensor11>(a[0]->value),
                                        std::get<MultiVector>(a[1]->value),
                                        std::get<DiffForm>(a[2]->value)));
          }}},
        {"endo_almost_contact",
         {{K::AlmostContact}, K::Endo,
          [](const std::vector<const Binding*>& a) {
              return wrap(K::Endo,
                          gac_from_almost_contact(std::get<AlmostContact>(a[0]->value)).first);
          }}},
        {"bundle_almost_contact",
         {{K::AlmostContact}, K::Bundle,
          [](const std::vector<const Binding*>& a) {
              return wrap(K::Bundle,
                          gac_from_almost_contact(std::get<AlmostContact>(a[0]->value)).second);
          }}},
        {"cosymplectic",
         {{K::Form, K::Form}, K::Cosymplectic,
          [](const std::vector<const Binding*>& a) {
              return wrap(K::Cosymplectic,
                          CosymplecticPair(std::get<DiffForm>(a[0]->value),
                                           std::get<DiffForm>(a[1]->value)));
          }}},
        {"endo_cosymplectic",
         {{K::Cosymplectic}, K::Endo,
          [](const std::vector<const Binding*>& a) {
              return wrap(K::Endo,
                          gac_from_cosymplectic(std::get<CosymplecticPair>(a[0]->value)).first);
          }}},
        {"bundle_cosymplectic",
         {{K::Cosymplectic}, K::Bundle,
          [](const std::vector<const Binding*>& a) {
              return wrap(K::Bundle,
                          gac_from_cosymplectic(std::get<CosymplecticPair>(a[0]->value)).second);
          }}},
        {"eigenbundle_plus",
         {{K::Endo}, K::Bundle,
          [](const std::vector<const Binding*>& a) {
              return wrap(K::Bundle, eigenbundle(std::get<EndoJ>(a[0]->value), true));
          }}},
        {"eigenbundle_minus",
         {{K::Endo}, K::Bundle,
          [](const std::vector<const Binding*>& a) {
              return wrap(K::Bundle, eigenbundle(std::get<EndoJ>(a[0]->value), false));
          }}},
        {"conjugate",
         {{K::Bundle}, K::Bundle,
          [](const std::vector<const Binding*>& a) {
              return wrap(K::Bundle, std::get<SubBundle>(a[0]->value).conjugate());
          }}},
    };
    return reg;
}

const std::map<std::string, std::vector<Binding::Kind>>& check_registry() {
    using K = Binding::Kind;
    static const std::map<std::string, std::vector<Binding::Kind>> reg = {
        {"contact", {K::Form}},
        {"reeb", {K::Form}},
        {"jacobi", {K::Jacobi}},
        {"cosymplectic", {K::Cosymplectic}},
        {"almost_contact", {K::AlmostContact}},
        {"normality", {K::AlmostContact}},
        {"lemma_identities", {K::AlmostContact}},
        {"endo", {K::Endo}},
        {"gen_sasakian", {K::Endo, K::Endo}},
        {"isotropy", {K::Bundle}},
        {"integrability", {K::Bundle}},
        {"transversality", {K::Bundle}},
        {"kernel_line", {K::Bundle}},
        {"direct_sum", {K::Bundle}},
        {"spans_equal", {K::Bundle, K::Bundle}},
    };
    return reg;
}

// ---------------------------------------------------------------- parser

struct Parser {
    const std::vector<Token>& toks;
    std::size_t at = 0;
    Scene scene;
    std::map<std::string, ExprValue> expr_bindings;

    explicit Parser(const std::vector<Token>& t) : toks(t) {}

    const Token& peek() const { return toks[at]; }
    const Token& next() { return toks[at++]; }

    bool at_punct(const char* p) const {
        return peek().type == Token::Type::Punct && peek().text == p;
    }

    Token expect_punct(const char* p) {
        if (!at_punct(p))
            throw SyntaxError(peek().pos,
                              std::string("expected '") + p + "', got " + describe(peek()));
        return next();
    }

    Token expect_ident(const char* what) {
        if (peek().type != Token::Type::Ident)
            throw SyntaxError(peek().pos,
                              std::string("expected ") + what + ", got " + describe(peek()));
        return next();
    }

    static std::string describe(const Token& t) {
        switch (t.type) {
        case Token::Type::Ident: return "'" + t.text + "'";
        case Token::Type::Int: return "'" + t.text + "'";
        case Token::Type::Punct: return "'" + t.text + "'";
        case Token::Type::End: return "end of input";
        }
        return "?";
    }

    // expression grammar:
    //   additive   := multiplicative (("+"|"-") multiplicative)*
    //   multiplicative := unary (("*"|"/") unary)*
    //   unary      := "-" unary | hat
    //   hat        := atom ("^" atom)*
    //   atom       := INT | IDENT | "@" IDENT | "d" "(" additive ")" | "(" additive ")"
    ExprPtr parse_expr() { return parse_additive(); }

    ExprPtr parse_additive() {
        ExprPtr e = parse_multiplicative();
        while (at_punct("+") || at_punct("-")) {
            Token op = next();
            ExprPtr rhs = parse_multiplicative();
            e = Expr::make_binary(op.text == "+" ? Expr::Tag::Add : Expr::Tag::Sub, op.pos,
                                  std::move(e), std::move(rhs));
        }
        return e;
    }

    ExprPtr parse_multiplicative() {
        ExprPtr e = parse_unary();
        while (at_punct("*") || at_punct("/")) {
            Token op = next();
            ExprPtr rhs = parse_unary();
            e = Expr::make_binary(op.text == "*" ? Expr::Tag::Mul : Expr::Tag::Div, op.pos,
                                  std::move(e), std::move(rhs));
        }
        return e;
    }

    ExprPtr parse_unary() {
        if (at_punct("-")) {
            Token op = next();
            return Expr::make_unary(Expr::Tag::Neg, op.pos, parse_unary());
        }
        return parse_hat();
    }

    ExprPtr parse_hat() {
        ExprPtr e = parse_atom();
        while (at_punct("^")) {
            Token op = next();
            ExprPtr rhs = parse_atom();
            e = Expr::make_binary(Expr::Tag::Hat, op.pos, std::move(e), std::move(rhs));
        }
        return e;
    }

    ExprPtr parse_atom() {
        const Token& t = peek();
        if (t.type == Token::Type::Int) {
            next();
            return Expr::make_int(t.pos, t.num);
        }
        if (at_punct("@")) {
            Pos pos = next().pos;
            Token name = expect_ident("a coordinate name after '@'");
            return Expr::make_basis(pos, name.text);
        }
        if (at_punct("(")) {
            next();
            ExprPtr e = parse_expr();
            expect_punct(")");
            return e;
        }
        if (t.type == Token::Type::Ident) {
            next();
            if (t.text == "d" && at_punct("(")) {
                next();
                ExprPtr arg = parse_expr();
                expect_punct(")");
                return Expr::make_unary(Expr::Tag::Diff, t.pos, std::move(arg));
            }
            return Expr::make_name(t.pos, t.text);
        }
        throw SyntaxError(t.pos, "expected an expression, got " + describe(t));
    }

    // -------------------------------------------------------- statements

    ExprEnv env() const {
        ExprEnv e;
        e.chart = scene.chart;
        e.ctx = this;
        e.resolve = [](const void* ctx, const std::string& name) -> const ExprValue* {
            const auto* self = static_cast<const Parser*>(ctx);
            auto it = self->expr_bindings.find(name);
            return it == self->expr_bindings.end() ? nullptr : &it->second;
        };
        e.kind_of = [](const void* ctx, const std::string& name) -> const char* {
            const auto* self = static_cast<const Parser*>(ctx);
            auto it = self->scene.bindings.find(name);
            return it == self->scene.bindings.end() ? nullptr
                                                    : binding_kind_name(it->second.kind);
        };
        return e;
    }

    void require_fresh(const std::string& name, const Pos& pos) {
        if (scene.chart && scene.chart->index(name))
            throw SyntaxError(pos, "'" + name + "' collides with a chart coordinate");
        if (scene.bindings.count(name))
            throw SyntaxError(pos, "'" + name + "' is already bound");
    }

    const Binding& lookup(const std::string& name, const Pos& pos) const {
        auto it = scene.bindings.find(name);
        if (it == scene.bindings.end())
            throw UnboundName(pos, "unbound name '" + name + "'");
        return it->second;
    }

    void parse_chart_stmt(const Token& kw) {
        if (!scene.stmts.empty())
            throw SyntaxError(kw.pos, "the chart statement must come first");
        ChartStmt st;
        st.name = expect_ident("a chart name").text;
        expect_punct("(");
        while (true) {
            st.coords.push_back(expect_ident("a coordinate name").text);
            if (at_punct(",")) {
                next();
                continue;
            }
            break;
        }
        expect_punct(")");
        try {
            scene.chart = make_chart(st.coords);
        } catch (const Error& err) {
            throw SyntaxError(kw.pos, err.what());
        }
        scene.stmts.emplace_back(std::move(st));
    }

    void parse_bind_stmt(const Token& kw) {
        BindStmt st;
        st.keyword = kw.text;
        Token name = expect_ident("a binding name");
        st.name = name.text;
        require_fresh(st.name, name.pos);
        expect_punct("=");
        st.expr = parse_expr();

        ExprValue v = eval_expr(st.expr, env());
        Binding b;
        if (st.keyword == "scalar") {
            if (v.kind != ExprValue::Kind::Scalar)
                throw TypeMismatch(st.expr->pos, "scalar binding got a " + v.kind_name());
            b = wrap(Binding::Kind::Scalar, v.scalar);
        } else if (st.keyword == "form") {
            if (v.kind != ExprValue::Kind::Form)
                throw TypeMismatch(st.expr->pos, "form binding got a " + v.kind_name());
            b = wrap(Binding::Kind::Form, *v.form);
        } else if (st.keyword == "vector" || st.keyword == "bivector") {
            int want = st.keyword == "vector" ? 1 : 2;
            if (v.kind != ExprValue::Kind::Vector)
                throw TypeMismatch(st.expr->pos,
                                   st.keyword + " binding got a " + v.kind_name());
            if (v.vector->degree() != want)
                throw TypeMismatch(st.expr->pos, st.keyword + " binding got degree "
                                                     + std::to_string(v.vector->degree()));
            b = wrap(Binding::Kind::Vector, *v.vector);
        } else {
            throw InternalError("bad binding keyword");
        }
        expr_bindings.emplace(st.name, v);
        scene.bindings.emplace(st.name, std::move(b));
        scene.stmts.emplace_back(std::move(st));
    }

    void parse_tensor_stmt(const Token&) {
        TensorStmt st;
        Token name = expect_ident("a binding name");
        st.name = name.text;
        require_fresh(st.name, name.pos);
        expect_punct("{");
        Matrix m(scene.chart->dim(), scene.chart->dim());
        while (!at_punct("}")) {
            TensorRule rule;
            Token coord = expect_ident("a coordinate name");
            rule.coord = coord.text;
            rule.pos = coord.pos;
            auto idx = scene.chart->index(rule.coord);
            if (!idx)
                throw UnboundName(coord.pos,
                                  "'" + rule.coord + "' is not a chart coordinate");
            for (const TensorRule& prev : st.rules)
                if (prev.coord == rule.coord)
                    throw SyntaxError(coord.pos, "duplicate rule for '" + rule.coord + "'");
            expect_punct("->");
            rule.expr = parse_expr();
            expect_punct(";");

            ExprValue v = eval_expr(rule.expr, env());
            if (v.kind != ExprValue::Kind::Vector || v.vector->degree() != 1)
                throw TypeMismatch(rule.expr->pos,
                                   "tensor rule needs a vector field, got " + v.kind_name());
            std::vector<Scalar> col = v.vector->coeff_column();
            for (int r = 0; r < scene.chart->dim(); ++r) m.at(r, *idx) = col[r];
            st.rules.push_back(std::move(rule));
        }
        expect_punct("}");
        scene.bindings.emplace(st.name, wrap(Binding::Kind::Tensor,
                                             Tensor11(scene.chart, m)));
        scene.stmts.emplace_back(std::move(st));
    }

    void parse_structure_stmt(const Token&) {
        StructureStmt st;
        Token kind = expect_ident("a structure kind");
        st.kind = kind.text;
        auto sig = structure_registry().find(st.kind);
        if (sig == structure_registry().end())
            throw SyntaxError(kind.pos, "unknown structure kind '" + st.kind + "'");
        Token name = expect_ident("a binding name");
        st.name = name.text;
        require_fresh(st.name, name.pos);
        expect_punct("(");
        std::vector<const Binding*> args;
        std::vector<Pos> arg_pos;
        if (!at_punct(")")) {
            while (true) {
                Token arg = expect_ident("an argument name");
                st.args.push_back(arg.text);
                arg_pos.push_back(arg.pos);
                args.push_back(&lookup(arg.text, arg.pos));
                if (at_punct(",")) {
                    next();
                    continue;
                }
                break;
            }
        }
        Token close = expect_punct(")");
        if (args.size() != sig->second.args.size())
            throw ArityError(close.pos, "structure " + st.kind + " expects "
                                            + std::to_string(sig->second.args.size())
                                            + " arguments, got "
                                            + std::to_string(args.size()));
        for (std::size_t k = 0; k < args.size(); ++k)
            if (args[k]->kind != sig->second.args[k])
                throw TypeMismatch(arg_pos[k],
                                   "argument " + std::to_string(k + 1) + " of " + st.kind
                                       + " must be a "
                                       + binding_kind_name(sig->second.args[k]) + ", got "
                                       + binding_kind_name(args[k]->kind));

        Binding built = make_binding(sig->second.result);
        bool arg_poisoned = false;
        for (const Binding* a : args)
            if (a->poisoned()) {
                built.value = std::get<Poisoned>(a->value);
                arg_poisoned = true;
                break;
            }
        if (!arg_poisoned) {
            try {
                built = sig->second.build(args);
            } catch (const ChartMismatch& err) {
                throw TypeMismatch(name.pos, err.what());
            } catch (const DegreeError& err) {
                throw TypeMismatch(name.pos, err.what());
            } catch (const Error& err) {
                // Value-level failure: the scene still parses, the bad
                // binding surfaces as verdict "error" on any check using it.
                built.value = Poisoned{err.what()};
            }
        }
        scene.bindings.emplace(st.name, std::move(built));
        scene.stmts.emplace_back(std::move(st));
    }

    void parse_check_stmt(const Token& kw) {
        CheckStmt st;
        st.pos = kw.pos;
        Token name = expect_ident("a check name");
        st.check = name.text;
        auto sig = check_registry().find(st.check);
        if (sig == check_registry().end())
            throw SyntaxError(name.pos, "unknown check '" + st.check + "'");
        expect_punct("(");
        std::vector<const Binding*> args;
        std::vector<Pos> arg_pos;
        if (!at_punct(")")) {
            while (true) {
                Token arg = expect_ident("an argument name");
                st.args.push_back(arg.text);
                arg_pos.push_back(arg.pos);
                args.push_back(&lookup(arg.text, arg.pos));
                if (at_punct(",")) {
                    next();
                    continue;
                }
                break;
            }
        }
        Token close = expect_punct(")");
        if (args.size() != sig->second.size())
            throw ArityError(close.pos, "check " + st.check + " expects "
                                            + std::to_string(sig->second.size())
                                            + " arguments, got "
                                            + std::to_string(args.size()));
        for (std::size_t k = 0; k < args.size(); ++k)
            if (args[k]->kind != sig->second[k])
                throw TypeMismatch(arg_pos[k],
                                   "argument " + std::to_string(k + 1) + " of check "
                                       + st.check + " must be a "
                                       + binding_kind_name(sig->second[k]) + ", got "
                                       + binding_kind_name(args[k]->kind));
        if (at_punct("{")) {
            next();
            while (!at_punct("}")) {
                Token key = expect_ident("an option name");
                if (key.text != "samples")
                    throw SyntaxError(key.pos, "unknown check option '" + key.text + "'");
                for (const auto& [prev, unused] : st.opts)
                    if (prev == key.text)
                        throw SyntaxError(key.pos, "duplicate option '" + key.text + "'");
                expect_punct("=");
                const Token& val = peek();
                if (val.type != Token::Type::Int)
                    throw SyntaxError(val.pos, "option value must be an integer");
                next();
                st.opts.emplace_back(key.text, val.num);
                if (at_punct(",")) next();
            }
            expect_punct("}");
        }
        scene.stmts.emplace_back(std::move(st));
    }

    Scene run() {
        while (peek().type != Token::Type::End) {
            Token kw = expect_ident("a statement keyword");
            if (kw.text == "chart") {
                parse_chart_stmt(kw);
                continue;
            }
            if (!scene.chart)
                throw SyntaxError(kw.pos, "a chart statement must come first");
            if (kw.text == "scalar" || kw.text == "form" || kw.text == "vector"
                || kw.text == "bivector")
                parse_bind_stmt(kw);
            else if (kw.text == "tensor11")
                parse_tensor_stmt(kw);
            else if (kw.text == "structure")
                parse_structure_stmt(kw);
            else if (kw.text == "check")
                parse_check_stmt(kw);
            else
                throw SyntaxError(kw.pos, "expected a statement keyword, got '" + kw.text
                                              + "'");
        }
        return std::move(scene);
    }
};

struct StmtPrinter {
    std::string& out;

    void operator()(const ChartStmt& st) const {
        out += "chart " + st.name + "(";
        for (std::size_t k = 0; k < st.coords.size(); ++k) {
            if (k) out += ", ";
            out += st.coords[k];
        }
        out += ")\n";
    }
    void operator()(const BindStmt& st) const {
        out += st.keyword + " " + st.name + " = " + print_expr(st.expr) + "\n";
    }
    void operator()(const TensorStmt& st) const {
        out += "tensor11 " + st.name + " {\n";
        for (const TensorRule& r : st.rules)
            out += "    " + r.coord + " -> " + print_expr(r.expr) + ";\n";
        out += "}\n";
    }
    void operator()(const StructureStmt& st) const {
        out += "structure " + st.kind + " " + st.name + "(";
        for (std::size_t k = 0; k < st.args.size(); ++k) {
            if (k) out += ", ";
            out += st.args[k];
        }
        out += ")\n";
    }
    void operator()(const CheckStmt& st) const {
        out += "check " + st.check + "(";
        for (std::size_t k = 0; k < st.args.size(); ++k) {
            if (k) out += ", ";
            out += st.args[k];
        }
        out += ")";
        if (!st.opts.empty()) {
            out += " { ";
            for (std::size_t k = 0; k < st.opts.size(); ++k) {
                if (k) out += ", ";
                out += st.opts[k].first + " = " + std::to_string(st.opts[k].second);
            }
            out += " }";
        }
        out += "\n";
    }
};

struct StmtEq {
    bool operator()(const ChartStmt& a, const ChartStmt& b) const {
        return a.name == b.name && a.coords == b.coords;
    }
    bool operator()(const BindStmt& a, const BindStmt& b) const {
        return a.keyword == b.keyword && a.name == b.name && expr_equal(a.expr, b.expr);
    }
    bool operator()(const TensorStmt& a, const TensorStmt& b) const {
        if (a.name != b.name || a.rules.size() != b.rules.size()) return false;
        for (std::size_t k = 0; k < a.rules.size(); ++k)
            if (a.rules[k].coord != b.rules[k].coord
                || !expr_equal(a.rules[k].expr, b.rules[k].expr))
                return false;
        return true;
    }
    bool operator()(const StructureStmt& a, const StructureStmt& b) const {
        return a.kind == b.kind && a.name == b.name && a.args == b.args;
    }
    bool operator()(const CheckStmt& a, const CheckStmt& b) const {
        return a.check == b.check && a.args == b.args && a.opts == b.opts;
    }
    template <class A, class B> bool operator()(const A&, const B&) const { return false; }
};

} // namespace

std::vector<const CheckStmt*> Scene::checks() const {
    std::vector<const CheckStmt*> out;
    for (const Stmt& st : stmts)
        if (const auto* c = std::get_if<CheckStmt>(&st)) out.push_back(c);
    return out;
}

bool scene_equal(const Scene& a, const Scene& b) {
    if (a.stmts.size() != b.stmts.size()) return false;
    for (std::size_t k = 0; k < a.stmts.size(); ++k)
        if (!std::visit(StmtEq{}, a.stmts[k], b.stmts[k])) return false;
    return true;
}

Scene parse_scene(const std::string& text) {
    std::vector<Token> toks = lex(text);
    Parser p(toks);
    return p.run();
}

std::string print_scene(const Scene& s) {
    std::string out;
    for (const Stmt& st : s.stmts) std::visit(StmtPrinter{out}, st);
    return out;
}

std::vector<std::string> structure_kinds() {
    std::vector<std::string> out;
    for (const auto& [name, sig] : structure_registry()) out.push_back(name);
    return out;
}

std::vector<std::string> check_names() {
    std::vector<std::string> out;
    for (const auto& [name, sig] : check_registry()) out.push_back(name);
    return out;
}

// Exposed for the runner: argument kinds of a registered check.
const std::vector<Binding::Kind>& check_signature(const std::string& name) {
    return check_registry().at(name);
}

} // namespace geolab
