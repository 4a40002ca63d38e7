#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "geolab/runner.hpp"

using namespace geolab;

namespace {

const char* kContactScene = R"(# standard contact form
chart M(x, y, z)
form eta = d(z) - y*d(x)
check contact(eta)
)";

Scene parse(const std::string& text) { return parse_scene(text); }

template <class E> Pos error_pos(const std::string& text) {
    try {
        parse_scene(text);
    } catch (const E& err) {
        return err.pos();
    }
    FAIL("expected a parse error");
    return {};
}

} // namespace

TEST_CASE("minimal contact scene parses to one binding and one check") {
    Scene s = parse(kContactScene);
    CHECK(s.chart->dim() == 3);
    CHECK(s.bindings.size() == 1);
    CHECK(s.bindings.at("eta").kind == Binding::Kind::Form);
    REQUIRE(s.checks().size() == 1);
    CHECK(s.checks()[0]->check == "contact");
    CHECK(s.checks()[0]->args == std::vector<std::string>{"eta"});
}

TEST_CASE("a repeated wedge binds the zero form") {
    Scene s = parse("chart M(x, y)\nform w = d(x) ^ d(x)\n");
    const auto& w = std::get<DiffForm>(s.bindings.at("w").value);
    CHECK(w.degree() == 2);
    CHECK(w.is_zero());
}

TEST_CASE("unbound names carry their position") {
    Pos p = error_pos<UnboundName>("chart M(x, y)\ncheck contact(zeta)\n");
    CHECK(p.line == 2);
    CHECK(p.col == 15);
}

TEST_CASE("unknown checks and structure kinds fail at parse time") {
    Pos p = error_pos<SyntaxError>("chart M(x)\ncheck frobnicate(x)\n");
    CHECK(p.line == 2);
    CHECK(p.col == 7);
    CHECK_THROWS_AS(parse("chart M(x)\nstructure frobnicate F(x)\n"), SyntaxError);
}

TEST_CASE("the chart statement must come first and be unique") {
    CHECK_THROWS_AS(parse("form w = d(x)\n"), SyntaxError);
    CHECK_THROWS_AS(parse("chart M(x)\nchart N(y)\n"), SyntaxError);
    CHECK_THROWS_AS(parse("chart M(x, x)\n"), SyntaxError);
}

TEST_CASE("binding names cannot collide") {
    CHECK_THROWS_AS(parse("chart M(x, y)\nscalar x = 1\n"), SyntaxError);
    CHECK_THROWS_AS(parse("chart M(x)\nscalar a = 1\nform a = d(x)\n"), SyntaxError);
}

TEST_CASE("binding keywords enforce the result type") {
    CHECK_THROWS_AS(parse("chart M(x)\nscalar a = d(x)\n"), TypeMismatch);
    CHECK_THROWS_AS(parse("chart M(x)\nform w = x\n"), TypeMismatch);
    CHECK_THROWS_AS(parse("chart M(x, y)\nvector v = @x ^ @y\n"), TypeMismatch);
    CHECK_THROWS_AS(parse("chart M(x, y)\nbivector b = @x\n"), TypeMismatch);
    CHECK_THROWS_AS(parse("chart M(x, y)\nform w = d(x) + @y\n"), TypeMismatch);
    CHECK_THROWS_AS(parse("chart M(x, y)\nform w = x ^ d(x)\n"), TypeMismatch);
}

TEST_CASE("scalar expressions support powers, division and the imaginary unit") {
    Scene s = parse(
        "chart M(x, y)\n"
        "scalar a = (x + 1)^2\n"
        "scalar b = a/(x + 1)\n"
        "scalar c = i*i\n");
    CHECK(std::get<Scalar>(s.bindings.at("a").value)
          == (Scalar::variable(0) + Scalar(1)) * (Scalar::variable(0) + Scalar(1)));
    CHECK(std::get<Scalar>(s.bindings.at("b").value)
          == Scalar::variable(0) + Scalar(1));
    CHECK(std::get<Scalar>(s.bindings.at("c").value) == Scalar(-1));

    CHECK_THROWS_AS(parse("chart M(x, y)\nscalar a = x^y\n"), TypeMismatch);
}

TEST_CASE("tensor rules build the endomorphism columnwise") {
    Scene s = parse(
        "chart M(x, y, z)\n"
        "tensor11 phi {\n"
        "    x -> @y;\n"
        "    y -> -@x - y*@z;\n"
        "}\n");
    const auto& phi = std::get<Tensor11>(s.bindings.at("phi").value);
    CHECK(phi.apply(coord_vector(s.chart, 0)) == coord_vector(s.chart, 1));
    CHECK(phi.apply(coord_vector(s.chart, 2)).is_zero());

    CHECK_THROWS_AS(parse("chart M(x)\ntensor11 t { x -> @x; x -> @x; }\n"), SyntaxError);
    CHECK_THROWS_AS(parse("chart M(x)\ntensor11 t { w -> @x; }\n"), UnboundName);
    CHECK_THROWS_AS(parse("chart M(x)\ntensor11 t { x -> x; }\n"), TypeMismatch);
}

TEST_CASE("structure statements are arity and type checked") {
    CHECK_THROWS_AS(parse("chart M(x, y, z)\n"
                          "form eta = d(z)\n"
                          "structure jacobi_from_contact J(eta, eta)\n"),
                    ArityError);
    CHECK_THROWS_AS(parse("chart M(x, y, z)\n"
                          "vector v = @z\n"
                          "structure jacobi_from_contact J(v)\n"),
                    TypeMismatch);
    CHECK_THROWS_AS(parse("chart M(x, y, z)\n"
                          "form eta = d(z)\n"
                          "check spans_equal(eta)\n"),
                    ArityError);
}

TEST_CASE("degree mismatches inside a constructor are positioned type errors") {
    // jacobi wants (bivector, vector); handing the arguments swapped is a
    // degree failure, not a poisoned binding.
    CHECK_THROWS_AS(parse("chart M(x, y, z)\n"
                          "vector e = @z\n"
                          "bivector pi = @x ^ @y\n"
                          "structure jacobi J(e, pi)\n"),
                    TypeMismatch);
}

TEST_CASE("a singular flat map poisons the binding instead of failing the parse") {
    Scene s = parse(
        "chart M(x, y, z)\n"
        "form eta = d(z)\n"
        "structure jacobi_from_contact J(eta)\n"
        "structure graph_jacobi L(J)\n"
        "check jacobi(J)\n"
        "check integrability(L)\n");
    CHECK(s.bindings.at("J").poisoned());
    CHECK(s.bindings.at("L").poisoned());

    Report rep = run_checks(s, 1, 2);
    REQUIRE(rep.records.size() == 2);
    for (const CheckRecord& rec : rep.records) {
        CHECK(rec.verdict == Verdict::Error);
        REQUIRE(rec.witness.size() == 1);
        CHECK(rec.witness[0].find("singular") != std::string::npos);
    }
    CHECK(report_exit_code(rep, false) == 2);
}

TEST_CASE("round trip is a fixpoint on assorted scenes") {
    const char* scenes[] = {
        kContactScene,
        "",
        "chart M(x, y)\nscalar a = -x*(3 - y)/2\n",
        "chart M(x, y, z)\nform w = (d(x) + 2*d(y))^d(z)\ncheck contact(w)\n",
        "chart M(x, y, z)\ntensor11 phi { x -> @y; y -> -@x; }\n"
        "vector xi = @z\nform eta = d(z)\n"
        "structure almost_contact A(phi, xi, eta)\ncheck normality(A)\n",
        "chart M(x, y, z)\nbivector pi = (@x + y*@z)^@y\nvector e = @z\n"
        "structure jacobi J(pi, e)\nstructure graph_jacobi L(J)\n"
        "check integrability(L) { samples = 3 }\n",
    };
    for (const char* text : scenes) {
        Scene once = parse(text);
        Scene twice = parse(print_scene(once));
        CHECK(scene_equal(once, twice));
        // print is itself a fixpoint on reparse
        CHECK(print_scene(twice) == print_scene(once));
    }
}

TEST_CASE("printing normalizes whitespace but keeps the tree") {
    Scene messy = parse("chart M( x ,y )\n\n\nform   w=d(x)^d(y)  # comment\n");
    CHECK(print_scene(messy) == "chart M(x, y)\nform w = d(x)^d(y)\n");
}

TEST_CASE("printer parenthesizes exactly where the tree demands") {
    Scene s = parse(
        "chart M(x, y)\n"
        "scalar a = x - (y - 1)\n"
        "scalar b = -(x*y)\n"
        "scalar c = (x + y)*x\n"
        "form w = (d(x) + d(y))^(x*d(y))\n");
    std::string out = print_scene(s);
    CHECK(out.find("scalar a = x - (y - 1)") != std::string::npos);
    CHECK(out.find("scalar b = -(x*y)") != std::string::npos);
    CHECK(out.find("scalar c = (x + y)*x") != std::string::npos);
    CHECK(out.find("form w = (d(x) + d(y))^(x*d(y))") != std::string::npos);
}

TEST_CASE("run_checks is deterministic and keeps declaration order") {
    Scene s = parse(
        "chart M(x, y, z)\n"
        "form eta = d(z) - y*d(x)\n"
        "form bad = d(z)\n"
        "check contact(bad)\n"
        "check contact(eta)\n"
        "check reeb(eta)\n");
    Report a = run_checks(s, 99, 3);
    Report b = run_checks(s, 99, 3);
    CHECK(emit_report(a, true) == emit_report(b, true));
    CHECK(emit_report(a, false) == emit_report(b, false));

    REQUIRE(a.records.size() == 3);
    CHECK(a.records[0].name == "contact(bad)");
    CHECK(a.records[0].verdict == Verdict::Fail);
    CHECK(a.records[1].name == "contact(eta)");
    CHECK(a.records[1].verdict == Verdict::Pass);
    CHECK(a.records[2].certificate[0] == "xi = @z");
    CHECK(report_exit_code(a, false) == 1);
}

TEST_CASE("empty scene gives an empty report with metadata") {
    Report rep = run_checks(parse(""), 7, 2);
    CHECK(rep.records.empty());
    CHECK(emit_report(rep, true)
          == "{\n"
             "  \"meta\": {\n"
             "    \"seed\": 7,\n"
             "    \"samples\": 2,\n"
             "    \"version\": \"0.1.0\"\n"
             "  },\n"
             "  \"checks\": []\n"
             "}\n");
}

TEST_CASE("strict exit codes demote generic-pass") {
    Scene s = parse(
        "chart M(x, y, z)\n"
        "form eta = (x + 1)*d(z) - y*d(x)\n"
        "check contact(eta)\n");
    Report rep = run_checks(s, 1, 2);
    REQUIRE(rep.records.size() == 1);
    CHECK(rep.records[0].verdict == Verdict::GenericPass);
    CHECK(report_exit_code(rep, false) == 0);
    CHECK(report_exit_code(rep, true) == 1);
}

TEST_CASE("gen_sasakian scenes draw seeded sample points") {
    const char* text =
        "chart M(x, y, z)\n"
        "tensor11 phi { x -> @y; y -> -@x; }\n"
        "vector xi = @z\n"
        "form eta = d(z)\n"
        "form omega = d(x) ^ d(y)\n"
        "form metaflip = -d(z)\n"
        "structure almost_contact A(phi, xi, eta)\n"
        "structure endo_almost_contact J1(A)\n"
        "structure cosymplectic C(omega, metaflip)\n"
        "structure endo_cosymplectic J2(C)\n"
        "check endo(J1)\n"
        "check endo(J2)\n"
        "check gen_sasakian(J1, J2) { samples = 2 }\n";
    Scene s = parse(text);
    Report a = run_checks(s, 5, 4);
    Report b = run_checks(s, 5, 4);
    CHECK(emit_report(a, true) == emit_report(b, true));
    REQUIRE(a.records.size() == 3);
    CHECK(a.records[0].verdict == Verdict::Pass);
    CHECK(a.records[1].verdict == Verdict::Pass);
    CHECK(a.records[2].verdict == Verdict::GenericPass);
}

TEST_CASE("option syntax is validated") {
    CHECK_THROWS_AS(parse("chart M(x)\nform w = d(x)\ncheck contact(w) { budget = 1 }\n"),
                    SyntaxError);
    CHECK_THROWS_AS(
        parse("chart M(x)\nform w = d(x)\ncheck contact(w) { samples = x }\n"),
        SyntaxError);
    CHECK_THROWS_AS(
        parse("chart M(x)\nform w = d(x)\ncheck contact(w) { samples = 1, samples = 2 }\n"),
        SyntaxError);
}

TEST_CASE("expressions cannot mention non-expression bindings") {
    CHECK_THROWS_AS(parse("chart M(x, y)\ntensor11 t { x -> @y; }\nscalar a = t + 1\n"),
                    TypeMismatch);
}

TEST_CASE("lexer rejects stray characters with a position") {
    Pos p = error_pos<SyntaxError>("chart M(x)\nscalar a = x ? 1\n");
    CHECK(p.line == 2);
    CHECK(p.col == 14);
}
