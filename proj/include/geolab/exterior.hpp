#pragma once

#include <map>
#include <string>
#include <vector>

#include "geolab/chart.hpp"
#include "geolab/linalg.hpp"
#include "geolab/scalar.hpp"

namespace geolab {

// Basis index tuple, strictly increasing. The empty tuple indexes the
// degree-0 component.
using IdxTuple = std::vector<int>;

// Sorts idx in place, returns the permutation sign, or 0 when an index
// repeats (the term dies).
int sort_with_sign(IdxTuple& idx);

// Homogeneous alternating tensor with exact scalar coefficients; IsForm
// picks covariant (differential form) vs contravariant (multivector field).
// The two instantiations only differ in printing and in which operations
// downstream code defines for them.
template <bool IsForm>
class Graded {
public:
    Graded() : degree_(0) {}
    Graded(ChartPtr chart, int degree) : chart_(std::move(chart)), degree_(degree) {
        if (!chart_) throw InternalError("graded object needs a chart");
        if (degree_ < 0) throw DegreeError("negative degree");
    }

    static Graded function(ChartPtr chart, Scalar s) {
        Graded g(std::move(chart), 0);
        g.add_term({}, std::move(s));
        return g;
    }

    static Graded basis(ChartPtr chart, int var) {
        Graded g(chart, 1);
        if (var < 0 || var >= chart->dim())
            throw InternalError("basis index outside chart");
        g.add_term({var}, Scalar(1));
        return g;
    }

    const ChartPtr& chart() const { return chart_; }
    int degree() const { return degree_; }
    const std::map<IdxTuple, Scalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    Scalar coeff(const IdxTuple& idx) const {
        auto it = t_.find(idx);
        return it == t_.end() ? Scalar() : it->second;
    }

    // Degree-0 value.
    Scalar value() const {
        if (degree_ != 0) throw DegreeError("value() on positive degree");
        return coeff({});
    }

    void add_term(IdxTuple idx, Scalar c) {
        if (static_cast<int>(idx.size()) != degree_)
            throw InternalError("term arity does not match degree");
        int sign = sort_with_sign(idx);
        if (sign == 0 || c.is_zero()) return;
        for (int v : idx)
            if (v < 0 || v >= chart_->dim())
                throw InternalError("term index outside chart");
        if (sign < 0) c = -c;
        auto it = t_.find(idx);
        if (it == t_.end()) {
            t_.emplace(std::move(idx), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    Graded operator-() const {
        Graded g(chart_, degree_);
        for (auto& [m, c] : t_) g.t_.emplace(m, -c);
        return g;
    }

    // Coefficient-wise complex conjugate.
    Graded conj() const {
        Graded g(chart_, degree_);
        for (auto& [m, c] : t_) g.t_.emplace(m, c.conj());
        return g;
    }

    Graded& operator+=(const Graded& o) {
        check_compatible(o);
        for (auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    Graded& operator-=(const Graded& o) {
        check_compatible(o);
        for (auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    friend Graded operator+(Graded a, const Graded& b) { a += b; return a; }
    friend Graded operator-(Graded a, const Graded& b) { a -= b; return a; }

    Graded& operator*=(const Scalar& s) {
        if (s.is_zero()) { t_.clear(); return *this; }
        for (auto& [m, c] : t_) c *= s;
        return *this;
    }
    friend Graded operator*(const Scalar& s, Graded g) { g *= s; return g; }

    bool operator==(const Graded& o) const {
        return degree_ == o.degree_ && *chart_ == *o.chart_ && t_ == o.t_;
    }
    bool operator!=(const Graded& o) const { return !(*this == o); }

    std::string str() const;

    // Coefficient column of a degree-1 object in the chart frame.
    std::vector<Scalar> coeff_column() const {
        if (degree_ != 1) throw DegreeError("coeff_column on degree != 1");
        std::vector<Scalar> col(static_cast<std::size_t>(chart_->dim()));
        for (auto& [m, c] : t_) col[static_cast<std::size_t>(m[0])] = c;
        return col;
    }

    static Graded from_coeff_column(const ChartPtr& chart, const std::vector<Scalar>& col) {
        Graded g(chart, 1);
        for (std::size_t v = 0; v < col.size(); ++v)
            g.add_term({static_cast<int>(v)}, col[v]);
        return g;
    }

private:
    ChartPtr chart_;
    int degree_;
    std::map<IdxTuple, Scalar> t_;

    void check_compatible(const Graded& o) const {
        require_same_chart(chart_, o.chart_);
        if (degree_ != o.degree_) throw DegreeError("degree mismatch");
    }
};

template <bool IsForm>
std::string Graded<IsForm>::str() const {
    if (t_.empty()) return "0";
    const std::vector<std::string>& names = chart_->coords();
    if (degree_ == 0) return t_.begin()->second.str(names);
    std::string out;
    bool first = true;
    for (auto& [m, c] : t_) {
        std::string basis;
        for (int v : m) {
            if (!basis.empty()) basis += "^";
            if (IsForm) basis += "d(" + names[static_cast<std::size_t>(v)] + ")";
            else basis += "@" + names[static_cast<std::size_t>(v)];
        }
        std::string term = (c == Scalar(1)) ? basis : "(" + c.str(names) + ")*" + basis;
        out += first ? term : " + " + term;
        first = false;
    }
    return out;
}

using DiffForm = Graded<true>;
using MultiVector = Graded<false>;

DiffForm coord_differential(const ChartPtr& chart, int var);
MultiVector coord_vector(const ChartPtr& chart, int var);

DiffForm wedge(const DiffForm& a, const DiffForm& b);
MultiVector wedge(const MultiVector& a, const MultiVector& b);
DiffForm wedge_pow(const DiffForm& a, int n);
MultiVector wedge_pow(const MultiVector& a, int n);

DiffForm d(const DiffForm& a);

// Contraction of a form by a vector field (degree 1). DegreeError on a
// degree-0 form or a non-degree-1 field.
DiffForm interior(const MultiVector& x, const DiffForm& a);

// First-slot contraction of a multivector by a 1-form.
MultiVector interior_form(const DiffForm& alpha, const MultiVector& p);

// eta(X) for a 1-form and a vector field.
Scalar pair1(const DiffForm& eta, const MultiVector& x);

// omega(X, Y) for a 2-form.
Scalar form_eval2(const DiffForm& omega, const MultiVector& x, const MultiVector& y);

MultiVector lie_bracket(const MultiVector& x, const MultiVector& y);
DiffForm lie_derivative(const MultiVector& x, const DiffForm& a);
MultiVector lie_derivative(const MultiVector& x, const MultiVector& q);

// Schouten bracket of multivector fields, in the convention fixed by
// [P, P] = 2 E ^ P for P = (@x + y@z)^@y, E = @z on the 3-chart (x, y, z).
MultiVector schouten(const MultiVector& a, const MultiVector& b);

// Field endomorphism of the tangent bundle: a (1,1) tensor stored as the
// matrix whose columns are the images of the frame fields.
class Tensor11 {
public:
    Tensor11(ChartPtr chart, Matrix m);
    static Tensor11 zero(const ChartPtr& chart);
    static Tensor11 identity_tensor(const ChartPtr& chart);

    const ChartPtr& chart() const { return chart_; }
    const Matrix& matrix() const { return m_; }

    MultiVector apply(const MultiVector& x) const;
    DiffForm dual_apply(const DiffForm& a) const;
    Tensor11 compose(const Tensor11& o) const;

    Tensor11 operator-() const { return Tensor11(chart_, -m_); }
    friend Tensor11 operator+(const Tensor11& a, const Tensor11& b);
    friend Tensor11 operator-(const Tensor11& a, const Tensor11& b);

    bool operator==(const Tensor11& o) const { return *chart_ == *o.chart_ && m_ == o.m_; }
    bool operator!=(const Tensor11& o) const { return !(*this == o); }

private:
    ChartPtr chart_;
    Matrix m_;
};

// Nijenhuis torsion of a (1,1) tensor on a pair of vector fields.
MultiVector nijenhuis(const Tensor11& phi, const MultiVector& x, const MultiVector& y);

} // namespace geolab
