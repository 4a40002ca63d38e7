#include "geolab/endo.hpp"

namespace geolab {

namespace {

void require_square(const Matrix& m, int n, const char* what) {
    if (m.rows() != n || m.cols() != n)
        throw BadInput(std::string(what) + " block must be " + std::to_string(n) + "x" +
                       std::to_string(n));
}

} // namespace

EndoJ::EndoJ(ChartPtr chart, Matrix a, Matrix b, Matrix c, Matrix d)
    : chart_(std::move(chart)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)),
      d_(std::move(d)) {
    if (!chart_) throw InternalError("endomorphism needs a chart");
    int n = chart_->dim() + 1;
    require_square(a_, n, "A");
    require_square(b_, n, "B");
    require_square(c_, n, "C");
    require_square(d_, n, "D");
}

EndoJ EndoJ::from_full(ChartPtr chart, const Matrix& m) {
    int n = chart->dim() + 1;
    if (m.rows() != 2 * n || m.cols() != 2 * n)
        throw BadInput("full endomorphism matrix must be " + std::to_string(2 * n) + "x" +
                       std::to_string(2 * n));
    return EndoJ(chart, m.block(0, 0, n, n), m.block(0, n, n, n), m.block(n, 0, n, n),
                 m.block(n, n, n, n));
}

Matrix EndoJ::full() const {
    return Matrix::vstack(Matrix::hstack(a_, b_), Matrix::hstack(c_, d_));
}

E1Section EndoJ::apply(const E1Section& e) const {
    require_same_chart(chart_, e.chart());
    std::vector<Scalar> v = e.coords();
    Matrix m = full();
    std::vector<Scalar> out(v.size());
    for (int r = 0; r < m.rows(); ++r) {
        Scalar s;
        for (int c = 0; c < m.cols(); ++c) s += m.at(r, c) * v[static_cast<std::size_t>(c)];
        out[static_cast<std::size_t>(r)] = s;
    }
    return E1Section::from_coords(chart_, out);
}

EndoJ EndoJ::operator*(const EndoJ& o) const {
    require_same_chart(chart_, o.chart_);
    return from_full(chart_, full() * o.full());
}

EndoJ EndoJ::operator-() const { return EndoJ(chart_, -a_, -b_, -c_, -d_); }

bool EndoJ::operator==(const EndoJ& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
}

Matrix pairing_matrix(int dim) {
    int n = dim + 1;
    Matrix p(2 * n, 2 * n);
    for (int k = 0; k < n; ++k) {
        p.at(k, n + k) = Scalar(1);
        p.at(n + k, k) = Scalar(1);
    }
    return p;
}

CheckResult endo_check(const EndoJ& j) {
    CheckResult out;
    out.verdict = Verdict::Pass;
    const auto& names = j.chart()->coords();
    Matrix m = j.full();
    int n = m.rows();
    Matrix p = pairing_matrix(j.chart()->dim());

    auto first_nonzero = [&](const Matrix& bad, const std::string& label) -> bool {
        for (int r = 0; r < bad.rows(); ++r)
            for (int c = 0; c < bad.cols(); ++c)
                if (!bad.at(r, c).is_zero()) {
                    out.verdict = Verdict::Fail;
                    out.witness.push_back(label + "[" + fiber_component_name(j.chart(), r) +
                                          ", " + fiber_component_name(j.chart(), c) +
                                          "] = " + bad.at(r, c).str(names));
                    return true;
                }
        return false;
    };

    Matrix sq = m * m + Matrix::identity(n);
    if (first_nonzero(sq, "(J^2 + id)")) return out;
    out.certificate.push_back("J^2 = -id");

    Matrix mt = m.transpose();
    if (first_nonzero(mt * p + p * m, "(Jt P + P J)")) return out;
    out.certificate.push_back("Jt P = -P J");

    if (first_nonzero(mt * p * m - p, "(Jt P J - P)")) return out;
    out.certificate.push_back("Jt P J = P");
    return out;
}

SubBundle eigenbundle(const EndoJ& j, bool plus_i) {
    Scalar lambda = Scalar::imaginary();
    if (!plus_i) lambda = -lambda;
    Matrix m = j.full() - Matrix::identity(j.full().rows()).scaled(lambda);
    std::vector<E1Section> gens;
    for (auto& v : null_space(m)) gens.push_back(E1Section::from_coords(j.chart(), v));
    return SubBundle(j.chart(), std::move(gens));
}

} // namespace geolab
