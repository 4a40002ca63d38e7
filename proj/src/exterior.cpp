#include "geolab/exterior.hpp"

#include <algorithm>

namespace geolab {

int sort_with_sign(IdxTuple& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        std::size_t j = i;
        while (j > 0 && idx[j - 1] > idx[j]) {
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
            --j;
        }
        if (j > 0 && idx[j - 1] == idx[j]) return 0;
    }
    return sign;
}

DiffForm coord_differential(const ChartPtr& chart, int var) {
    return DiffForm::basis(chart, var);
}

MultiVector coord_vector(const ChartPtr& chart, int var) {
    return MultiVector::basis(chart, var);
}

namespace {

template <bool F>
Graded<F> wedge_impl(const Graded<F>& a, const Graded<F>& b) {
    require_same_chart(a.chart(), b.chart());
    Graded<F> out(a.chart(), a.degree() + b.degree());
    for (auto& [ma, ca] : a.terms())
        for (auto& [mb, cb] : b.terms()) {
            IdxTuple merged = ma;
            merged.insert(merged.end(), mb.begin(), mb.end());
            out.add_term(std::move(merged), ca * cb);
        }
    return out;
}

template <bool F>
Graded<F> wedge_pow_impl(const Graded<F>& a, int n) {
    if (n < 0) throw DegreeError("negative wedge power");
    if (n == 0) return Graded<F>::function(a.chart(), Scalar(1));
    Graded<F> out = a;
    for (int k = 1; k < n; ++k) out = wedge_impl(out, a);
    return out;
}

} // namespace

DiffForm wedge(const DiffForm& a, const DiffForm& b) { return wedge_impl(a, b); }
MultiVector wedge(const MultiVector& a, const MultiVector& b) { return wedge_impl(a, b); }
DiffForm wedge_pow(const DiffForm& a, int n) { return wedge_pow_impl(a, n); }
MultiVector wedge_pow(const MultiVector& a, int n) { return wedge_pow_impl(a, n); }

DiffForm d(const DiffForm& a) {
    DiffForm out(a.chart(), a.degree() + 1);
    int dim = a.chart() ? a.chart()->dim() : 0;
    for (auto& [m, c] : a.terms()) {
        for (int v = 0; v < dim; ++v) {
            Scalar dc = c.derivative(v);
            if (dc.is_zero()) continue;
            IdxTuple idx;
            idx.reserve(m.size() + 1);
            idx.push_back(v);
            idx.insert(idx.end(), m.begin(), m.end());
            out.add_term(std::move(idx), std::move(dc));
        }
    }
    return out;
}

namespace {

// Remove idx[pos]; the caller folds in the (-1)^pos sign.
IdxTuple drop_at(const IdxTuple& idx, std::size_t pos) {
    IdxTuple out;
    out.reserve(idx.size() - 1);
    for (std::size_t k = 0; k < idx.size(); ++k)
        if (k != pos) out.push_back(idx[k]);
    return out;
}

} // namespace

DiffForm interior(const MultiVector& x, const DiffForm& a) {
    require_same_chart(x.chart(), a.chart());
    if (x.degree() != 1) throw DegreeError("interior product needs a vector field");
    if (a.degree() == 0) throw DegreeError("interior product of a degree-0 form");
    DiffForm out(a.chart(), a.degree() - 1);
    for (auto& [mx, cx] : x.terms()) {
        int j = mx[0];
        for (auto& [T, c] : a.terms()) {
            auto it = std::find(T.begin(), T.end(), j);
            if (it == T.end()) continue;
            auto pos = static_cast<std::size_t>(it - T.begin());
            Scalar val = cx * c;
            if (pos % 2 == 1) val = -val;
            out.add_term(drop_at(T, pos), std::move(val));
        }
    }
    return out;
}

MultiVector interior_form(const DiffForm& alpha, const MultiVector& p) {
    require_same_chart(alpha.chart(), p.chart());
    if (alpha.degree() != 1) throw DegreeError("interior_form needs a 1-form");
    if (p.degree() == 0) throw DegreeError("interior_form of a degree-0 field");
    MultiVector out(p.chart(), p.degree() - 1);
    for (auto& [ma, ca] : alpha.terms()) {
        int j = ma[0];
        for (auto& [T, c] : p.terms()) {
            auto it = std::find(T.begin(), T.end(), j);
            if (it == T.end()) continue;
            auto pos = static_cast<std::size_t>(it - T.begin());
            Scalar val = ca * c;
            if (pos % 2 == 1) val = -val;
            out.add_term(drop_at(T, pos), std::move(val));
        }
    }
    return out;
}

Scalar pair1(const DiffForm& eta, const MultiVector& x) {
    require_same_chart(eta.chart(), x.chart());
    if (eta.degree() != 1 || x.degree() != 1)
        throw DegreeError("pair1 needs a 1-form and a vector field");
    Scalar acc;
    for (auto& [m, c] : eta.terms()) acc += c * x.coeff({m[0]});
    return acc;
}

Scalar form_eval2(const DiffForm& omega, const MultiVector& x, const MultiVector& y) {
    if (omega.degree() != 2) throw DegreeError("form_eval2 needs a 2-form");
    return pair1(interior(x, omega), y);
}

MultiVector lie_bracket(const MultiVector& x, const MultiVector& y) {
    require_same_chart(x.chart(), y.chart());
    if (x.degree() != 1 || y.degree() != 1)
        throw DegreeError("lie_bracket needs vector fields");
    int dim = x.chart()->dim();
    auto xc = x.coeff_column();
    auto yc = y.coeff_column();
    std::vector<Scalar> out(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) {
        Scalar acc;
        for (int j = 0; j < dim; ++j) {
            acc += xc[static_cast<std::size_t>(j)] * yc[static_cast<std::size_t>(k)].derivative(j);
            acc -= yc[static_cast<std::size_t>(j)] * xc[static_cast<std::size_t>(k)].derivative(j);
        }
        out[static_cast<std::size_t>(k)] = acc;
    }
    return MultiVector::from_coeff_column(x.chart(), out);
}

DiffForm lie_derivative(const MultiVector& x, const DiffForm& a) {
    if (x.degree() != 1) throw DegreeError("lie_derivative needs a vector field");
    DiffForm part = interior(x, d(a));
    if (a.degree() == 0) return part;
    return part + d(interior(x, a));
}

MultiVector lie_derivative(const MultiVector& x, const MultiVector& q) {
    require_same_chart(x.chart(), q.chart());
    if (x.degree() != 1) throw DegreeError("lie_derivative needs a vector field");
    int dim = x.chart()->dim();
    auto xc = x.coeff_column();
    MultiVector out(q.chart(), q.degree());
    for (auto& [J, b] : q.terms()) {
        Scalar xb;
        for (int j = 0; j < dim; ++j)
            xb += xc[static_cast<std::size_t>(j)] * b.derivative(j);
        out.add_term(J, std::move(xb));
        // [X, @_j] = -sum_k (d_j X^k) @_k moves each frame factor.
        for (std::size_t l = 0; l < J.size(); ++l) {
            for (int k = 0; k < dim; ++k) {
                Scalar c = -(xc[static_cast<std::size_t>(k)].derivative(J[l])) * b;
                if (c.is_zero()) continue;
                IdxTuple moved = J;
                moved[l] = k;
                out.add_term(std::move(moved), std::move(c));
            }
        }
    }
    return out;
}

namespace {

DiffForm differential_of_scalar(const ChartPtr& chart, const Scalar& f) {
    DiffForm df(chart, 1);
    for (int v = 0; v < chart->dim(); ++v)
        df.add_term({v}, f.derivative(v));
    return df;
}

// Auxiliary graded bracket: [X, Q] = L_X Q, [f, Q] = -i_df Q, extended by
// [X ^ A, B] = X ^ [A, B] + (-1)^((b-1)(a-1)) [X, B] ^ A for a = deg(X ^ A).
// The public bracket mirrors this by (-1)^((p-1)(q-1)).
MultiVector sn1(const MultiVector& a, const MultiVector& b) {
    const ChartPtr& chart = a.chart();
    int p = a.degree(), q = b.degree();
    int out_deg = std::max(p + q - 1, 0);
    MultiVector out(chart, out_deg);
    if (a.is_zero() || b.is_zero()) return out;
    if (p == 0) {
        if (q == 0) return out;
        DiffForm df = differential_of_scalar(chart, a.value());
        return -interior_form(df, b);
    }
    if (p == 1) return lie_derivative(a, b);

    for (auto& [I, c] : a.terms()) {
        MultiVector x(chart, 1);
        x.add_term({I[0]}, c);
        MultiVector rest(chart, p - 1);
        rest.add_term(drop_at(I, 0), Scalar(1));

        out += wedge(x, sn1(rest, b));
        MultiVector cross = wedge(sn1(x, b), rest);
        if (((q - 1) * (p - 1)) % 2 != 0) out -= cross;
        else out += cross;
    }
    return out;
}

} // namespace

MultiVector schouten(const MultiVector& a, const MultiVector& b) {
    require_same_chart(a.chart(), b.chart());
    MultiVector r = sn1(a, b);
    if (((a.degree() - 1) * (b.degree() - 1)) % 2 != 0) return -r;
    return r;
}

Tensor11::Tensor11(ChartPtr chart, Matrix m) : chart_(std::move(chart)), m_(std::move(m)) {
    if (!chart_) throw InternalError("tensor needs a chart");
    if (m_.rows() != chart_->dim() || m_.cols() != chart_->dim())
        throw InternalError("tensor matrix shape mismatch");
}

Tensor11 Tensor11::zero(const ChartPtr& chart) {
    return Tensor11(chart, Matrix(chart->dim(), chart->dim()));
}

Tensor11 Tensor11::identity_tensor(const ChartPtr& chart) {
    return Tensor11(chart, Matrix::identity(chart->dim()));
}

MultiVector Tensor11::apply(const MultiVector& x) const {
    require_same_chart(chart_, x.chart());
    if (x.degree() != 1) throw DegreeError("tensor applies to vector fields");
    Matrix col(chart_->dim(), 1);
    auto xc = x.coeff_column();
    for (int r = 0; r < chart_->dim(); ++r) col.at(r, 0) = xc[static_cast<std::size_t>(r)];
    Matrix res = m_ * col;
    return MultiVector::from_coeff_column(chart_, res.col(0));
}

DiffForm Tensor11::dual_apply(const DiffForm& a) const {
    require_same_chart(chart_, a.chart());
    if (a.degree() != 1) throw DegreeError("dual tensor applies to 1-forms");
    Matrix col(chart_->dim(), 1);
    auto ac = a.coeff_column();
    for (int r = 0; r < chart_->dim(); ++r) col.at(r, 0) = ac[static_cast<std::size_t>(r)];
    Matrix res = m_.transpose() * col;
    return DiffForm::from_coeff_column(chart_, res.col(0));
}

Tensor11 Tensor11::compose(const Tensor11& o) const {
    require_same_chart(chart_, o.chart_);
    return Tensor11(chart_, m_ * o.m_);
}

Tensor11 operator+(const Tensor11& a, const Tensor11& b) {
    require_same_chart(a.chart(), b.chart());
    return Tensor11(a.chart(), a.matrix() + b.matrix());
}

Tensor11 operator-(const Tensor11& a, const Tensor11& b) {
    require_same_chart(a.chart(), b.chart());
    return Tensor11(a.chart(), a.matrix() - b.matrix());
}

MultiVector nijenhuis(const Tensor11& phi, const MultiVector& x, const MultiVector& y) {
    MultiVector px = phi.apply(x);
    MultiVector py = phi.apply(y);
    return lie_bracket(px, py) + phi.apply(phi.apply(lie_bracket(x, y)))
         - phi.apply(lie_bracket(px, y)) - phi.apply(lie_bracket(x, py));
}

} // namespace geolab
