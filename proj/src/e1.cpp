#include "geolab/e1.hpp"

namespace geolab {

FormPair::FormPair(DiffForm alpha, DiffForm beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    require_same_chart(alpha_.chart(), beta_.chart());
    int k = alpha_.degree();
    if (k == 0) {
        if (beta_.degree() != 0 || !beta_.is_zero())
            throw DegreeError("degree-0 pair must have zero second slot");
    } else if (beta_.degree() != k - 1) {
        throw DegreeError("second slot must sit one degree below the first");
    }
}

FormPair FormPair::function(const ChartPtr& chart, const Scalar& f) {
    return FormPair(DiffForm::function(chart, f), DiffForm(chart, 0));
}

Scalar directional(const MultiVector& x, const Scalar& f) {
    if (x.degree() != 1) throw DegreeError("directional derivative needs a vector field");
    Scalar acc;
    for (auto& [m, c] : x.terms()) acc += c * f.derivative(m[0]);
    return acc;
}

FormPair tilde_d(const FormPair& p) {
    int k = p.degree();
    DiffForm alpha = d(p.alpha());
    DiffForm beta = (k % 2 == 0) ? p.alpha() : -p.alpha();
    if (k > 0) beta += d(p.beta());
    return FormPair(std::move(alpha), std::move(beta));
}

FormPair tilde_i(const VecPair& v, const FormPair& p) {
    require_same_chart(v.x.chart(), p.chart());
    int k = p.degree();
    if (k == 0) throw DegreeError("contraction of a degree-0 pair");
    DiffForm alpha = interior(v.x, p.alpha());
    if (!v.f.is_zero() && !p.beta().is_zero()) {
        DiffForm fb = v.f * p.beta();
        alpha += (k % 2 == 0) ? -fb : fb; // (-1)^(k+1)
    }
    DiffForm beta = (k == 1) ? DiffForm(p.chart(), 0) : interior(v.x, p.beta());
    return FormPair(std::move(alpha), std::move(beta));
}

FormPair tilde_lie(const VecPair& v, const FormPair& p) {
    FormPair out = tilde_i(v, tilde_d(p));
    if (p.degree() > 0) out = out + tilde_d(tilde_i(v, p));
    return out;
}

E1Section::E1Section(MultiVector x, Scalar f, DiffForm alpha, Scalar g)
    : x_(std::move(x)), f_(std::move(f)), alpha_(std::move(alpha)), g_(std::move(g)) {
    require_same_chart(x_.chart(), alpha_.chart());
    if (x_.degree() != 1 || alpha_.degree() != 1)
        throw DegreeError("section needs a vector field and a 1-form");
}

E1Section E1Section::zero(const ChartPtr& chart) {
    return E1Section(MultiVector(chart, 1), Scalar(), DiffForm(chart, 1), Scalar());
}

E1Section E1Section::from_vec(MultiVector x, Scalar f) {
    ChartPtr chart = x.chart();
    return E1Section(std::move(x), std::move(f), DiffForm(chart, 1), Scalar());
}

E1Section E1Section::from_form(DiffForm alpha, Scalar g) {
    ChartPtr chart = alpha.chart();
    return E1Section(MultiVector(chart, 1), Scalar(), std::move(alpha), std::move(g));
}

E1Section E1Section::conj() const {
    return E1Section(x_.conj(), f_.conj(), alpha_.conj(), g_.conj());
}

std::vector<Scalar> E1Section::coords() const {
    int dim = chart()->dim();
    std::vector<Scalar> out;
    out.reserve(2 * static_cast<std::size_t>(dim + 1));
    auto xc = x_.coeff_column();
    out.insert(out.end(), xc.begin(), xc.end());
    out.push_back(f_);
    auto ac = alpha_.coeff_column();
    out.insert(out.end(), ac.begin(), ac.end());
    out.push_back(g_);
    return out;
}

E1Section E1Section::from_coords(const ChartPtr& chart, const std::vector<Scalar>& v) {
    int dim = chart->dim();
    if (v.size() != 2 * static_cast<std::size_t>(dim + 1))
        throw InternalError("fiber coordinate length mismatch");
    std::vector<Scalar> xc(v.begin(), v.begin() + dim);
    std::vector<Scalar> ac(v.begin() + dim + 1, v.begin() + 2 * dim + 1);
    return E1Section(MultiVector::from_coeff_column(chart, xc),
                     v[static_cast<std::size_t>(dim)],
                     DiffForm::from_coeff_column(chart, ac),
                     v[static_cast<std::size_t>(2 * dim + 1)]);
}

std::string E1Section::str() const {
    const auto& names = chart()->coords();
    return "(" + x_.str() + ", " + f_.str(names) + ") + (" + alpha_.str() + ", " +
           g_.str(names) + ")";
}

Scalar pairing(const E1Section& a, const E1Section& b) {
    require_same_chart(a.chart(), b.chart());
    Scalar acc = pair1(a.alpha(), b.x()) + pair1(b.alpha(), a.x());
    acc += a.f() * b.g() + b.f() * a.g();
    return Scalar(GaussRat(mpq_class(1, 2))) * acc;
}

E1Section dorfman(const E1Section& a, const E1Section& b) {
    require_same_chart(a.chart(), b.chart());
    const ChartPtr& chart = a.chart();
    MultiVector xb = lie_bracket(a.x(), b.x());
    Scalar fb = directional(a.x(), b.f()) - directional(b.x(), a.f());

    FormPair pb(b.alpha(), DiffForm::function(chart, b.g()));
    FormPair pa(a.alpha(), DiffForm::function(chart, a.g()));
    FormPair forms = tilde_lie({a.x(), a.f()}, pb) - tilde_i({b.x(), b.f()}, tilde_d(pa));

    return E1Section(std::move(xb), std::move(fb), forms.alpha(), forms.beta().value());
}

} // namespace geolab
