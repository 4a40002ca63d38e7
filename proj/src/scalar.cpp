#include "geolab/scalar.hpp"

#include "geolab/errors.hpp"

namespace geolab {

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroDenominator("scalar with zero denominator");
    normalize();
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(GaussRat(1));
        return;
    }
    Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
    }
    const GaussRat& lc = den_.leading_coeff();
    if (!lc.is_one()) {
        GaussRat inv = lc.inverse();
        num_.mul_coeff(inv);
        den_.mul_coeff(inv);
    }
}

GaussRat Scalar::constant_value() const {
    if (!is_constant()) throw InternalError("constant_value of non-constant scalar");
    if (num_.is_zero()) return GaussRat(0);
    return num_.constant_value() / den_.constant_value();
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    out.num_ = -out.num_;
    return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    // Work over the lcm of the denominators so the final gcd stays small.
    Poly g = gcd(den_, o.den_);
    if (g.is_constant()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    } else {
        Poly da = divexact(den_, g);
        Poly db = divexact(o.den_, g);
        num_ = num_ * db + o.num_ * da;
        den_ = den_ * db;
    }
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    *this += -o;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    // Cross-reduce before multiplying; both fractions are canonical, so
    // the products below are already coprime up to the monic unit.
    Poly g1 = gcd(num_, o.den_);
    Poly g2 = gcd(o.num_, den_);
    Poly na = g1.is_constant() ? num_ : divexact(num_, g1);
    Poly db = g1.is_constant() ? o.den_ : divexact(o.den_, g1);
    Poly nb = g2.is_constant() ? o.num_ : divexact(o.num_, g2);
    Poly da = g2.is_constant() ? den_ : divexact(den_, g2);
    num_ = na * nb;
    den_ = da * db;
    if (num_.is_zero()) {
        den_ = Poly(GaussRat(1));
        return *this;
    }
    const GaussRat& lc = den_.leading_coeff();
    if (!lc.is_one()) {
        GaussRat inv = lc.inverse();
        num_.mul_coeff(inv);
        den_.mul_coeff(inv);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw DivisionByZero("scalar division by zero");
    *this *= Scalar(o.den_, o.num_);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero scalar");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    Scalar out(1);
    Scalar base = *this;
    while (n > 0) {
        if (n & 1) out *= base;
        base *= base;
        n >>= 1;
    }
    return out;
}

Scalar Scalar::derivative(int var) const {
    // (n/d)' = (n'd - nd') / d^2, then renormalize.
    Poly n = num_.derivative(var) * den_ - num_ * den_.derivative(var);
    return Scalar(std::move(n), den_ * den_);
}

Scalar Scalar::conj() const {
    return Scalar(num_.conj(), den_.conj());
}

GaussRat Scalar::eval(const std::vector<GaussRat>& point) const {
    GaussRat d = den_.eval(point);
    if (d.is_zero()) throw PoleAtPoint("denominator vanishes at evaluation point");
    return num_.eval(point) / d;
}

std::string Scalar::str(const std::vector<std::string>& names) const {
    if (den_ == Poly(GaussRat(1))) return num_.str(names);
    return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
}

} // namespace geolab
