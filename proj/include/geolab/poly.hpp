#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "geolab/gaussian.hpp"

namespace geolab {

// Monomial: (variable index, exponent) pairs, sorted by variable,
// exponents strictly positive. The empty vector is the unit monomial.
using Mono = std::vector<std::pair<int, int>>;

int mono_degree(const Mono& m);
int mono_deg_in(const Mono& m, int var);
Mono mono_mul(const Mono& a, const Mono& b);
bool mono_divides(const Mono& a, const Mono& b); // does a divide b
Mono mono_div(const Mono& b, const Mono& a);     // b / a, requires divisibility

// Graded lexicographic order: compare total degree first, then the
// exponent vectors lexicographically with earlier variables more
// significant. Used for the term map and for leading-term selection.
struct GrlexLess {
    bool operator()(const Mono& a, const Mono& b) const;
};

// Sparse multivariate polynomial over Q(i). Variables are indices into a
// chart owned by the caller; the polynomial itself is chart-agnostic.
class Poly {
public:
    using Terms = std::map<Mono, GaussRat, GrlexLess>;

    Poly() = default; // zero
    explicit Poly(const GaussRat& c) {
        if (!c.is_zero()) t_.emplace(Mono{}, c);
    }

    static Poly constant(const GaussRat& c) { return Poly(c); }
    static Poly variable(int var) {
        Poly p;
        p.t_.emplace(Mono{{var, 1}}, GaussRat(1));
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }
    GaussRat constant_value() const;

    // Total degree; -1 for the zero polynomial.
    int degree() const { return t_.empty() ? -1 : mono_degree(t_.rbegin()->first); }
    int deg_in(int var) const;
    int max_var() const;

    const Terms& terms() const { return t_; }
    const Mono& leading_mono() const;
    const GaussRat& leading_coeff() const;

    void add_term(const Mono& m, const GaussRat& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);

    Poly& mul_coeff(const GaussRat& c);
    Poly pow(int n) const;

    Poly derivative(int var) const;
    Poly conj() const;
    GaussRat eval(const std::vector<GaussRat>& point) const;

    bool operator==(const Poly& o) const { return t_ == o.t_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Deterministic total order (grlex on term lists); only for containers.
    bool operator<(const Poly& o) const;

    // Canonical text, terms in descending grlex order, coordinate names
    // taken from the caller.
    std::string str(const std::vector<std::string>& names) const;

private:
    Terms t_;
};

// Monic-normalized gcd (leading grlex coefficient 1); gcd(0,0) = 0,
// nonzero constants are units so gcd(c, p) = 1.
Poly gcd(const Poly& a, const Poly& b);

// Exact quotient; throws InternalError when b does not divide a.
Poly divexact(const Poly& a, const Poly& b);

} // namespace geolab
