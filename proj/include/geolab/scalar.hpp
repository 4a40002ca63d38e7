#pragma once

#include <string>
#include <vector>

#include "geolab/poly.hpp"

namespace geolab {

// Rational function over Q(i) in canonical form: gcd(num, den) = 1, the
// denominator is monic in the grlex leading coefficient, and zero is 0/1.
// Equality of canonical forms is therefore plain component equality.
class Scalar {
public:
    Scalar() : den_(GaussRat(1)) {}  // zero
    Scalar(long v) : num_(GaussRat(v)), den_(GaussRat(1)) {}           // NOLINT
    Scalar(const GaussRat& c) : num_(c), den_(GaussRat(1)) {}          // NOLINT
    explicit Scalar(Poly p) : num_(std::move(p)), den_(GaussRat(1)) {}
    Scalar(Poly num, Poly den);

    static Scalar variable(int var) { return Scalar(Poly::variable(var)); }
    static Scalar imaginary() { return Scalar(GaussRat::i()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    GaussRat constant_value() const;

    // Size heuristic used for pivot selection in elimination.
    int complexity() const { return std::max(num_.degree(), den_.degree()); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
    friend Scalar operator-(Scalar a, const Scalar& b) { a -= b; return a; }
    friend Scalar operator*(Scalar a, const Scalar& b) { a *= b; return a; }
    friend Scalar operator/(Scalar a, const Scalar& b) { a /= b; return a; }

    Scalar inverse() const;
    Scalar pow(int n) const;
    Scalar derivative(int var) const;
    Scalar conj() const;
    GaussRat eval(const std::vector<GaussRat>& point) const;

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const {
        if (num_ != o.num_) return num_ < o.num_;
        return den_ < o.den_;
    }

    std::string str(const std::vector<std::string>& names) const;

private:
    Poly num_;
    Poly den_;
    void normalize();
};

} // namespace geolab
