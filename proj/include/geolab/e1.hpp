#pragma once

#include <string>
#include <vector>

#include "geolab/exterior.hpp"

namespace geolab {

// Section of TM x R.
struct VecPair {
    MultiVector x; // degree 1
    Scalar f;
};

// Element of Omega^k x Omega^(k-1). For k = 0 the second slot is the zero
// 0-form and stays zero under every operation here.
class FormPair {
public:
    FormPair(DiffForm alpha, DiffForm beta);
    static FormPair function(const ChartPtr& chart, const Scalar& f);

    const DiffForm& alpha() const { return alpha_; }
    const DiffForm& beta() const { return beta_; }
    const ChartPtr& chart() const { return alpha_.chart(); }
    int degree() const { return alpha_.degree(); }
    bool is_zero() const { return alpha_.is_zero() && beta_.is_zero(); }

    FormPair operator-() const { return FormPair(-alpha_, -beta_); }
    friend FormPair operator+(const FormPair& a, const FormPair& b) {
        return FormPair(a.alpha_ + b.alpha_, a.beta_ + b.beta_);
    }
    friend FormPair operator-(const FormPair& a, const FormPair& b) {
        return FormPair(a.alpha_ - b.alpha_, a.beta_ - b.beta_);
    }
    friend FormPair operator*(const Scalar& s, const FormPair& p) {
        return FormPair(s * p.alpha_, s * p.beta_);
    }
    bool operator==(const FormPair& o) const { return alpha_ == o.alpha_ && beta_ == o.beta_; }
    bool operator!=(const FormPair& o) const { return !(*this == o); }

    std::string str() const { return "(" + alpha_.str() + ", " + beta_.str() + ")"; }

private:
    DiffForm alpha_;
    DiffForm beta_;
};

// Derivative X . f along a vector field.
Scalar directional(const MultiVector& x, const Scalar& f);

// d~(alpha, beta) = (d alpha, (-1)^k alpha + d beta).
FormPair tilde_d(const FormPair& p);

// i~_(X,f)(alpha, beta) = (i_X alpha + (-1)^(k+1) f beta, i_X beta); k >= 1.
FormPair tilde_i(const VecPair& v, const FormPair& p);

// L~ = i~ d~ + d~ i~, with the second branch absent for k = 0.
FormPair tilde_lie(const VecPair& v, const FormPair& p);

// Section of E1 = (TM x R) + (T*M x R).
class E1Section {
public:
    E1Section(MultiVector x, Scalar f, DiffForm alpha, Scalar g);
    static E1Section zero(const ChartPtr& chart);
    static E1Section from_vec(MultiVector x, Scalar f);
    static E1Section from_form(DiffForm alpha, Scalar g);

    const MultiVector& x() const { return x_; }
    const Scalar& f() const { return f_; }
    const DiffForm& alpha() const { return alpha_; }
    const Scalar& g() const { return g_; }
    const ChartPtr& chart() const { return x_.chart(); }

    bool is_zero() const {
        return x_.is_zero() && f_.is_zero() && alpha_.is_zero() && g_.is_zero();
    }

    E1Section operator-() const { return E1Section(-x_, -f_, -alpha_, -g_); }
    friend E1Section operator+(const E1Section& a, const E1Section& b) {
        return E1Section(a.x_ + b.x_, a.f_ + b.f_, a.alpha_ + b.alpha_, a.g_ + b.g_);
    }
    friend E1Section operator-(const E1Section& a, const E1Section& b) {
        return E1Section(a.x_ - b.x_, a.f_ - b.f_, a.alpha_ - b.alpha_, a.g_ - b.g_);
    }
    friend E1Section operator*(const Scalar& s, const E1Section& e) {
        return E1Section(s * e.x_, s * e.f_, s * e.alpha_, s * e.g_);
    }
    bool operator==(const E1Section& o) const {
        return x_ == o.x_ && f_ == o.f_ && alpha_ == o.alpha_ && g_ == o.g_;
    }
    bool operator!=(const E1Section& o) const { return !(*this == o); }

    E1Section conj() const;

    // Fiber coordinates (X^1..X^d, f, a_1..a_d, g), length 2(d+1).
    std::vector<Scalar> coords() const;
    static E1Section from_coords(const ChartPtr& chart, const std::vector<Scalar>& v);

    std::string str() const;

private:
    MultiVector x_;
    Scalar f_;
    DiffForm alpha_;
    Scalar g_;
};

// <u, v> = (i_X2 a1 + i_X1 a2 + f1 g2 + f2 g1) / 2.
Scalar pairing(const E1Section& a, const E1Section& b);

// The non-skew bracket on E1 sections:
// [e1, e2] = ([X1, X2], X1.f2 - X2.f1)
//          + L~_(X1,f1)(a2, g2) - i~_(X2,f2) d~(a1, g1).
E1Section dorfman(const E1Section& a, const E1Section& b);

} // namespace geolab
