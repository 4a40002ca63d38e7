#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "geolab/exterior.hpp"
#include "testgen.hpp"

using namespace geolab;
using testgen::Rng;

namespace {

ChartPtr chart3() {
    static ChartPtr c = make_chart({"x", "y", "z"});
    return c;
}

Scalar sx() { return Scalar::variable(0); }
Scalar sy() { return Scalar::variable(1); }
Scalar sz() { return Scalar::variable(2); }

DiffForm dx() { return coord_differential(chart3(), 0); }
DiffForm dy() { return coord_differential(chart3(), 1); }
DiffForm dz() { return coord_differential(chart3(), 2); }
MultiVector ex() { return coord_vector(chart3(), 0); }
MultiVector ey() { return coord_vector(chart3(), 1); }
MultiVector ez() { return coord_vector(chart3(), 2); }

// eta0 = dz - y dx, the standard contact form on the 3-chart.
DiffForm eta0() { return dz() - sy() * dx(); }

// pi = (@x + y@z) ^ @y, its Jacobi partner bivector.
MultiVector pi0() { return wedge(ex() + sy() * ez(), ey()); }

} // namespace

TEST_CASE("wedge is graded-commutative and associative") {
    Rng rng(101);
    for (int t = 0; t < 25; ++t) {
        int k = testgen::pick(rng, 0, 2);
        int l = testgen::pick(rng, 0, 2);
        DiffForm a = testgen::random_form(rng, chart3(), k);
        DiffForm b = testgen::random_form(rng, chart3(), l);
        DiffForm c = testgen::random_form(rng, chart3(), 1);
        DiffForm ab = wedge(a, b), ba = wedge(b, a);
        if ((k * l) % 2 != 0) CHECK(ab == -ba);
        else CHECK(ab == ba);
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    }
}

TEST_CASE("exterior derivative of the contact form") {
    CHECK(d(eta0()) == wedge(dx(), dy()));
    CHECK(d(DiffForm::function(chart3(), sx() * sy())) == sy() * dx() + sx() * dy());
}

TEST_CASE("d squares to zero and is an antiderivation") {
    Rng rng(102);
    for (int t = 0; t < 30; ++t) {
        int k = testgen::pick(rng, 0, 2);
        DiffForm a = testgen::random_form(rng, chart3(), k, 2, 2);
        CHECK(d(d(a)).is_zero());
        DiffForm b = testgen::random_form(rng, chart3(), 1, 2, 2);
        DiffForm lhs = d(wedge(a, b));
        DiffForm rhs = wedge(d(a), b) + ((k % 2 != 0) ? -wedge(a, d(b)) : wedge(a, d(b)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("interior product basics and antiderivation law") {
    CHECK(interior(ex(), wedge(dx(), dy())) == dy());
    CHECK(interior(ey(), wedge(dx(), dy())) == -dx());
    CHECK(pair1(eta0(), ez()) == Scalar(1));
    CHECK(pair1(eta0(), ex()) == -sy());
    CHECK_THROWS_AS(interior(ex(), DiffForm::function(chart3(), sx())), DegreeError);

    Rng rng(103);
    for (int t = 0; t < 25; ++t) {
        MultiVector v = testgen::random_vecfield(rng, chart3(), 1);
        int k = testgen::pick(rng, 1, 2);
        DiffForm a = testgen::random_form(rng, chart3(), k);
        DiffForm b = testgen::random_form(rng, chart3(), 1);
        DiffForm lhs = interior(v, wedge(a, b));
        DiffForm rhs = wedge(interior(v, a), b) +
                       ((k % 2 != 0) ? -wedge(a, interior(v, b)) : wedge(a, interior(v, b)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("first-slot contraction of the oracle bivector") {
    CHECK(interior_form(dx(), pi0()) == ey());
    CHECK(interior_form(dy(), pi0()) == -(ex() + sy() * ez()));
    CHECK(interior_form(dz(), pi0()) == sy() * ey());
}

TEST_CASE("lie bracket matches hand values and its axioms") {
    CHECK(lie_bracket(ex() + sy() * ez(), ey()) == -ez());
    CHECK(lie_bracket(ez(), sz() * ex()) == ex());

    Rng rng(104);
    for (int t = 0; t < 25; ++t) {
        MultiVector x = testgen::random_vecfield(rng, chart3(), 1, 2, 2);
        MultiVector y = testgen::random_vecfield(rng, chart3(), 1, 2, 2);
        MultiVector z = testgen::random_vecfield(rng, chart3(), 1, 2, 2);
        CHECK(lie_bracket(x, y) == -lie_bracket(y, x));
        MultiVector jac = lie_bracket(x, lie_bracket(y, z))
                        + lie_bracket(y, lie_bracket(z, x))
                        + lie_bracket(z, lie_bracket(x, y));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("lie derivative against Cartan identities") {
    Rng rng(105);
    for (int t = 0; t < 20; ++t) {
        MultiVector x = testgen::random_vecfield(rng, chart3(), 1, 2, 2);
        MultiVector y = testgen::random_vecfield(rng, chart3(), 1, 2, 2);
        int k = testgen::pick(rng, 0, 2);
        DiffForm a = testgen::random_form(rng, chart3(), k, 2, 2);
        CHECK(lie_derivative(x, d(a)) == d(lie_derivative(x, a)));
        DiffForm comm = lie_derivative(x, lie_derivative(y, a))
                      - lie_derivative(y, lie_derivative(x, a));
        CHECK(comm == lie_derivative(lie_bracket(x, y), a));
    }
}

TEST_CASE("schouten bracket reproduces the pinned bivector oracle") {
    MultiVector e = ez();
    MultiVector p = pi0();
    CHECK(schouten(e, p).is_zero());                       // [E, pi] = 0
    CHECK(schouten(p, p) == Scalar(2) * wedge(e, p));      // [pi, pi] = 2 E ^ pi
    CHECK(schouten(p, p).coeff({0, 1, 2}) == Scalar(2));
}

TEST_CASE("schouten degree-0 and degree-1 specializations") {
    Rng rng(106);
    for (int t = 0; t < 20; ++t) {
        MultiVector x = testgen::random_vecfield(rng, chart3(), 1, 2, 2);
        MultiVector y = testgen::random_vecfield(rng, chart3(), 1, 2, 2);
        Scalar f = testgen::random_scalar(rng, 3);
        MultiVector f0 = MultiVector::function(chart3(), f);
        CHECK(schouten(x, y) == lie_bracket(x, y));

        // [A, f] = i_df A
        MultiVector a = testgen::random_vecfield(rng, chart3(), 2, 2, 2);
        DiffForm df(chart3(), 1);
        for (int v = 0; v < 3; ++v) df.add_term({v}, f.derivative(v));
        CHECK(schouten(a, f0) == interior_form(df, a));
        // [f, B] = (-1)^b i_df B for a bivector
        CHECK(schouten(f0, a) == interior_form(df, a));
        CHECK(schouten(f0, x) == -interior_form(df, x));
        CHECK(schouten(f0, f0).is_zero());
    }
}

TEST_CASE("schouten graded antisymmetry, Leibniz, and Jacobi") {
    Rng rng(107);
    auto sgn = [](int e) { return e % 2 != 0; };
    for (int t = 0; t < 12; ++t) {
        int p = testgen::pick(rng, 1, 2);
        int q = testgen::pick(rng, 1, 2);
        int r = testgen::pick(rng, 1, 2);
        MultiVector a = testgen::random_vecfield(rng, chart3(), p, 2, 2, false);
        MultiVector b = testgen::random_vecfield(rng, chart3(), q, 2, 2, false);
        MultiVector c = testgen::random_vecfield(rng, chart3(), r, 2, 2, false);

        MultiVector anti = schouten(b, a);
        if (!sgn((p - 1) * (q - 1))) anti = -anti;
        CHECK(schouten(a, b) == anti);

        // [A, B ^ C] = (-1)^((a-1) c) [A, B] ^ C + B ^ [A, C]
        MultiVector lhs = schouten(a, wedge(b, c));
        MultiVector first = wedge(schouten(a, b), c);
        if (sgn((p - 1) * r)) first = -first;
        CHECK(lhs == first + wedge(b, schouten(a, c)));

        // [A, [B, C]] = [[A, B], C] + (-1)^((a-1)(b-1)) [B, [A, C]]
        MultiVector j1 = schouten(a, schouten(b, c));
        MultiVector j2 = schouten(schouten(a, b), c);
        MultiVector j3 = schouten(b, schouten(a, c));
        if (sgn((p - 1) * (q - 1))) j3 = -j3;
        CHECK(j1 == j2 + j3);
    }
}

TEST_CASE("nijenhuis torsion of the shear endomorphism") {
    // phi: @x -> (1+z)@y, @y -> -(1/(1+z))@x, @z -> 0
    Matrix m(3, 3);
    m.at(1, 0) = Scalar(1) + sz();
    m.at(0, 1) = -(Scalar(1) + sz()).inverse();
    Tensor11 phi(chart3(), m);
    MultiVector n = nijenhuis(phi, ex(), ez());
    CHECK(n == -(Scalar(1) + sz()).inverse() * ex());

    // phi with constant coefficients has vanishing torsion
    Matrix c(3, 3);
    c.at(1, 0) = Scalar(1);
    c.at(0, 1) = Scalar(-1);
    Tensor11 psi(chart3(), c);
    CHECK(nijenhuis(psi, ex(), ey()).is_zero());
    CHECK(nijenhuis(psi, ex(), ez()).is_zero());
}

TEST_CASE("nijenhuis torsion is tensorial and antisymmetric") {
    Rng rng(108);
    for (int t = 0; t < 15; ++t) {
        Matrix m(3, 3);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                m.at(r, c) = testgen::random_scalar(rng, 3, 1);
        Tensor11 phi(chart3(), m);
        MultiVector x = testgen::random_vecfield(rng, chart3(), 1, 2, 1);
        MultiVector y = testgen::random_vecfield(rng, chart3(), 1, 2, 1);
        Scalar f = testgen::random_scalar(rng, 3, 1);
        CHECK(nijenhuis(phi, x, y) == -nijenhuis(phi, y, x));
        CHECK(nijenhuis(phi, f * x, y) == f * nijenhuis(phi, x, y));
    }
}

TEST_CASE("tensor application and its dual are adjoint") {
    Rng rng(109);
    for (int t = 0; t < 15; ++t) {
        Matrix m(3, 3);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                m.at(r, c) = testgen::random_scalar(rng, 3, 1);
        Tensor11 phi(chart3(), m);
        MultiVector x = testgen::random_vecfield(rng, chart3(), 1);
        DiffForm a = testgen::random_form(rng, chart3(), 1);
        CHECK(pair1(phi.dual_apply(a), x) == pair1(a, phi.apply(x)));
    }
}

TEST_CASE("printing stays canonical and sparse") {
    CHECK(eta0().str() == "(-y)*d(x) + d(z)");
    CHECK(pi0().str() == "@x^@y + (-y)*@y^@z");
    CHECK(DiffForm(chart3(), 2).str() == "0");
    CHECK(wedge(eta0(), wedge(d(eta0()), dz())).is_zero());
}
