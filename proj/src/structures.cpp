#include "geolab/structures.hpp"

namespace geolab {

namespace {

void require_degree(const DiffForm& a, int deg, const char* what) {
    if (a.degree() != deg)
        throw DegreeError(std::string(what) + " must have degree " + std::to_string(deg));
}

void require_degree(const MultiVector& a, int deg, const char* what) {
    if (a.degree() != deg)
        throw DegreeError(std::string(what) + " must have degree " + std::to_string(deg));
}

int odd_half(const ChartPtr& chart) {
    int d = chart->dim();
    if (d % 2 == 0) throw EvenDimension("chart dimension " + std::to_string(d) + " is even");
    return (d - 1) / 2;
}

// The single coefficient of a top-degree form.
Scalar top_coefficient(const DiffForm& top) {
    if (top.terms().empty()) return Scalar();
    return top.terms().begin()->second;
}

// Volume-type certificate eta ^ p^n with a printable label.
CheckResult volume_check(const DiffForm& eta, const DiffForm& p, const std::string& label) {
    int n = odd_half(eta.chart());
    DiffForm top = wedge(eta, wedge_pow(p, n));
    CertInfo info = classify_certificate(top_coefficient(top));
    CheckResult out;
    out.verdict = info.verdict;
    out.certificate.push_back(info.describe(eta.chart()->coords(), label));
    if (out.verdict == Verdict::Fail) out.witness.push_back(label + " vanishes identically");
    return out;
}

// Frame matrix of flat: column i holds the coefficients of flat(d/dx_i).
Matrix flat_matrix(const DiffForm& eta) {
    const ChartPtr& chart = eta.chart();
    int d = chart->dim();
    Matrix m(d, d);
    for (int i = 0; i < d; ++i) {
        std::vector<Scalar> col = flat_eta(eta, coord_vector(chart, i)).coeff_column();
        for (int r = 0; r < d; ++r) m.at(r, i) = col[static_cast<std::size_t>(r)];
    }
    return m;
}

std::vector<Scalar> apply_matrix(const Matrix& m, const std::vector<Scalar>& v) {
    std::vector<Scalar> out(static_cast<std::size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) {
        Scalar s;
        for (int c = 0; c < m.cols(); ++c) s += m.at(r, c) * v[static_cast<std::size_t>(c)];
        out[static_cast<std::size_t>(r)] = s;
    }
    return out;
}

// Frame matrix of Theta(X, f) = (i_X omega + f eta, -eta(X)): columns are
// the images of (d/dx_i, 0) and (0, 1) in (alpha, g) coordinates.
Matrix theta_matrix(const CosymplecticPair& c) {
    const ChartPtr& chart = c.chart();
    int d = chart->dim();
    Matrix t(d + 1, d + 1);
    for (int i = 0; i < d; ++i) {
        auto [al, g] = theta(c, coord_vector(chart, i), Scalar());
        std::vector<Scalar> col = al.coeff_column();
        for (int r = 0; r < d; ++r) t.at(r, i) = col[static_cast<std::size_t>(r)];
        t.at(d, i) = g;
    }
    auto [al, g] = theta(c, MultiVector(chart, 1), Scalar(1));
    std::vector<Scalar> col = al.coeff_column();
    for (int r = 0; r < d; ++r) t.at(r, d) = col[static_cast<std::size_t>(r)];
    t.at(d, d) = g;
    return t;
}

} // namespace

JacobiPair::JacobiPair(MultiVector pi_, MultiVector e_) : pi(std::move(pi_)), e(std::move(e_)) {
    require_same_chart(pi.chart(), e.chart());
    require_degree(pi, 2, "pi");
    require_degree(e, 1, "E");
}

CosymplecticPair::CosymplecticPair(DiffForm omega_, DiffForm eta_)
    : omega(std::move(omega_)), eta(std::move(eta_)) {
    require_same_chart(omega.chart(), eta.chart());
    require_degree(omega, 2, "omega");
    require_degree(eta, 1, "eta");
}

CheckResult contact_check(const DiffForm& eta) {
    require_degree(eta, 1, "eta");
    return volume_check(eta, d(eta), "eta ^ (d eta)^n");
}

DiffForm flat_eta(const DiffForm& eta, const MultiVector& x) {
    require_degree(eta, 1, "eta");
    require_degree(x, 1, "X");
    return interior(x, d(eta)) + pair1(eta, x) * eta;
}

MultiVector flat_eta_inv(const DiffForm& eta, const DiffForm& alpha) {
    require_degree(alpha, 1, "alpha");
    auto inv = inverse(flat_matrix(eta));
    if (!inv) throw SingularFlat("flat map of eta is singular over the scalar field");
    return MultiVector::from_coeff_column(eta.chart(), apply_matrix(*inv, alpha.coeff_column()));
}

MultiVector reeb(const DiffForm& eta) {
    MultiVector xi = flat_eta_inv(eta, eta);
    if (!interior(xi, d(eta)).is_zero() || pair1(eta, xi) != Scalar(1))
        throw InternalError("reeb field fails its defining equations");
    return xi;
}

JacobiPair jacobi_from_contact(const DiffForm& eta) {
    require_degree(eta, 1, "eta");
    const ChartPtr& chart = eta.chart();
    int d_ = chart->dim();
    DiffForm de = d(eta);

    // Frame matrix of (X, f) -> (-i_X d eta - f eta, eta(X)).
    Matrix psi(d_ + 1, d_ + 1);
    for (int i = 0; i < d_; ++i) {
        std::vector<Scalar> col = (-interior(coord_vector(chart, i), de)).coeff_column();
        for (int r = 0; r < d_; ++r) psi.at(r, i) = col[static_cast<std::size_t>(r)];
        psi.at(d_, i) = pair1(eta, coord_vector(chart, i));
    }
    std::vector<Scalar> col = (-eta).coeff_column();
    for (int r = 0; r < d_; ++r) psi.at(r, d_) = col[static_cast<std::size_t>(r)];
    psi.at(d_, d_) = Scalar();

    auto inv = inverse(psi);
    if (!inv) throw SingularFlat("the sharp system of eta is singular over the scalar field");
    const Matrix& sharp = *inv;

    MultiVector e(chart, 1);
    for (int r = 0; r < d_; ++r)
        if (!sharp.at(r, d_).is_zero()) e.add_term({r}, sharp.at(r, d_));
    if (!sharp.at(d_, d_).is_zero())
        throw InternalError("sharp(0,1) acquired a function part");

    MultiVector pi(chart, 2);
    for (int i = 0; i < d_; ++i) {
        for (int j = i + 1; j < d_; ++j) {
            if (sharp.at(i, j) != -sharp.at(j, i))
                throw InternalError("sharp frame matrix is not antisymmetric");
            if (!sharp.at(j, i).is_zero()) pi.add_term({i, j}, sharp.at(j, i));
        }
        Scalar ei = pair1(coord_differential(chart, i), e);
        if (sharp.at(d_, i) != -ei)
            throw InternalError("sharp frame matrix disagrees with -i_E on covectors");
    }

    // Cross-check against pi(a, b) = d eta(flat^-1(a), flat^-1(b)).
    std::vector<MultiVector> flat_inv;
    flat_inv.reserve(static_cast<std::size_t>(d_));
    for (int i = 0; i < d_; ++i)
        flat_inv.push_back(flat_eta_inv(eta, coord_differential(chart, i)));
    for (int i = 0; i < d_; ++i)
        for (int j = i + 1; j < d_; ++j) {
            Scalar direct = form_eval2(de, flat_inv[static_cast<std::size_t>(i)],
                                       flat_inv[static_cast<std::size_t>(j)]);
            if (direct != sharp.at(j, i))
                throw InternalError("pi disagrees with d eta on flat-inverted covectors");
        }

    return JacobiPair(std::move(pi), std::move(e));
}

CheckResult jacobi_check(const JacobiPair& j) {
    CheckResult out;
    out.verdict = Verdict::Pass;
    MultiVector r1 = schouten(j.e, j.pi);
    if (!r1.is_zero()) {
        out.verdict = Verdict::Fail;
        out.witness.push_back("[E, pi] = " + r1.str());
    }
    MultiVector r2 = schouten(j.pi, j.pi) - Scalar(2) * wedge(j.e, j.pi);
    if (!r2.is_zero()) {
        out.verdict = Verdict::Fail;
        out.witness.push_back("[pi, pi] - 2 E^pi = " + r2.str());
    }
    if (out.verdict == Verdict::Pass) {
        out.certificate.push_back("[E, pi] = 0");
        out.certificate.push_back("[pi, pi] = 2 E^pi");
    }
    return out;
}

std::pair<MultiVector, Scalar> sharp_pi_E(const JacobiPair& j, const DiffForm& alpha,
                                          const Scalar& g) {
    require_degree(alpha, 1, "alpha");
    require_same_chart(j.chart(), alpha.chart());
    return {interior_form(alpha, j.pi) + g * j.e, -pair1(alpha, j.e)};
}

SubBundle graph_jacobi(const JacobiPair& j) {
    const ChartPtr& chart = j.chart();
    int d_ = chart->dim();
    std::vector<E1Section> gens;
    gens.reserve(static_cast<std::size_t>(d_) + 1);
    for (int i = 0; i < d_; ++i) {
        DiffForm dxi = coord_differential(chart, i);
        auto [x, f] = sharp_pi_E(j, dxi, Scalar());
        gens.push_back(E1Section::from_vec(std::move(x), std::move(f)) -
                       E1Section::from_form(dxi, Scalar()));
    }
    auto [x, f] = sharp_pi_E(j, DiffForm(chart, 1), Scalar(1));
    gens.push_back(E1Section::from_vec(std::move(x), std::move(f)) -
                   E1Section::from_form(DiffForm(chart, 1), Scalar(1)));
    return SubBundle(chart, std::move(gens));
}

SubBundle graph_omega_eta(const DiffForm& omega, const DiffForm& eta) {
    require_same_chart(omega.chart(), eta.chart());
    require_degree(omega, 2, "omega");
    require_degree(eta, 1, "eta");
    const ChartPtr& chart = omega.chart();
    int d_ = chart->dim();
    std::vector<E1Section> gens;
    gens.reserve(static_cast<std::size_t>(d_) + 1);
    for (int i = 0; i < d_; ++i) {
        MultiVector ei = coord_vector(chart, i);
        gens.push_back(E1Section::from_vec(ei, Scalar()) +
                       E1Section::from_form(interior(ei, omega), -pair1(eta, ei)));
    }
    gens.push_back(E1Section::from_vec(MultiVector(chart, 1), Scalar(1)) +
                   E1Section::from_form(eta, Scalar()));
    return SubBundle(chart, std::move(gens));
}

CheckResult transversality_check(const SubBundle& l) {
    const ChartPtr& chart = l.chart();
    const auto& names = chart->coords();
    int half = chart->dim() + 1;
    const Matrix& g = l.as_matrix();
    CheckResult out;
    out.verdict = Verdict::Pass;

    struct Side {
        const char* label;
        int col0;
    };
    for (Side side : {Side{"(X, f) block", 0}, Side{"(alpha, g) block", half}}) {
        Matrix blockm = g.block(0, side.col0, g.rows(), half);
        Rref rr = rref(blockm);
        if (rr.rank != half) {
            out.verdict = Verdict::Fail;
            out.witness.push_back(std::string(side.label) + " has rank " +
                                  std::to_string(rr.rank) + ", expected " +
                                  std::to_string(half));
            continue;
        }
        CertInfo info = classify_certificate(minor_det(blockm, rr.pivot_rows, rr.pivot_cols));
        out.verdict = combine(out.verdict, info.verdict);
        out.certificate.push_back(info.describe(names, std::string(side.label) + " minor"));
    }
    return out;
}

KernelLine kernel_line(const SubBundle& l) {
    const ChartPtr& chart = l.chart();
    int d_ = chart->dim();
    const Matrix& g = l.as_matrix();
    KernelLine out;

    // Constrained coordinates: f and every alpha component.
    Matrix b(g.rows(), d_ + 1);
    for (int r = 0; r < g.rows(); ++r) {
        b.at(r, 0) = g.at(r, d_);
        for (int c = 0; c < d_; ++c) b.at(r, c + 1) = g.at(r, d_ + 1 + c);
    }
    std::vector<E1Section> sections;
    for (auto& x : null_space(b.transpose())) {
        std::vector<Scalar> coords(static_cast<std::size_t>(g.cols()));
        for (int c = 0; c < g.cols(); ++c) {
            Scalar s;
            for (int r = 0; r < g.rows(); ++r) s += x[static_cast<std::size_t>(r)] * g.at(r, c);
            coords[static_cast<std::size_t>(c)] = s;
        }
        E1Section sec = E1Section::from_coords(chart, coords);
        if (!sec.is_zero()) sections.push_back(std::move(sec));
    }

    SubBundle inter(chart, sections);
    if (inter.rank() != 1) {
        out.result.verdict = Verdict::Fail;
        out.result.witness.push_back("intersection with (TM x {0}) + ({0} x R) has rank " +
                                     std::to_string(inter.rank()) + ", expected 1");
        return out;
    }
    const E1Section& s = sections.front();
    if (!s.f().is_zero() || !s.alpha().is_zero())
        throw InternalError("kernel line section escaped the constrained block");
    if (s.g().is_zero()) {
        out.result.verdict = Verdict::Fail;
        out.result.witness.push_back("kernel line lies in TM x {0}: generator " + s.str());
        return out;
    }
    E1Section gen = (Scalar(-1) / s.g()) * s;
    CertInfo info = classify_certificate(inter.rank_certificate());
    out.result.verdict = info.verdict;
    out.result.certificate.push_back("generator " + gen.str());
    out.result.certificate.push_back(info.describe(chart->coords(), "pivot minor"));
    out.xi = gen.x();
    out.generator = std::move(gen);
    return out;
}

AlmostContact::AlmostContact(Tensor11 phi, MultiVector xi, DiffForm eta)
    : phi_(std::move(phi)), xi_(std::move(xi)), eta_(std::move(eta)) {
    require_same_chart(phi_.chart(), xi_.chart());
    require_same_chart(phi_.chart(), eta_.chart());
    require_degree(xi_, 1, "xi");
    require_degree(eta_, 1, "eta");
    const ChartPtr& chart = phi_.chart();

    axioms_.verdict = Verdict::Pass;
    Scalar unit = pair1(eta_, xi_);
    if (unit != Scalar(1)) {
        axioms_.verdict = Verdict::Fail;
        axioms_.witness.push_back("eta(xi) = " + unit.str(chart->coords()));
    }
    for (int i = 0; i < chart->dim(); ++i) {
        MultiVector ei = coord_vector(chart, i);
        MultiVector res = phi_.apply(phi_.apply(ei)) + ei - pair1(eta_, ei) * xi_;
        if (!res.is_zero()) {
            axioms_.verdict = Verdict::Fail;
            axioms_.witness.push_back("(phi^2 + id - eta (x) xi)(@" + chart->coord(i) +
                                      ") = " + res.str());
        }
    }
    if (axioms_.verdict == Verdict::Pass) {
        // phi(xi) = 0 and eta o phi = 0 follow from the axioms.
        if (!phi_.apply(xi_).is_zero()) throw InternalError("phi(xi) != 0 under valid axioms");
        for (int i = 0; i < chart->dim(); ++i)
            if (!pair1(eta_, phi_.apply(coord_vector(chart, i))).is_zero())
                throw InternalError("eta o phi != 0 under valid axioms");
        axioms_.certificate.push_back("eta(xi) = 1");
        axioms_.certificate.push_back("phi^2 = -id + eta (x) xi on the frame");
        axioms_.certificate.push_back("phi(xi) = 0 and eta o phi = 0");
    }
}

CheckResult almost_contact_check(const AlmostContact& a) { return a.axioms(); }

std::pair<EndoJ, SubBundle> gac_from_almost_contact(const AlmostContact& a) {
    if (a.axioms().verdict != Verdict::Pass)
        throw NotAlmostContact("the (phi, xi, eta) axioms do not hold");
    const ChartPtr& chart = a.chart();
    int d_ = chart->dim();

    Matrix ablock(d_ + 1, d_ + 1);
    std::vector<Scalar> xi_col = a.xi().coeff_column();
    for (int i = 0; i < d_; ++i) {
        for (int r = 0; r < d_; ++r) ablock.at(r, i) = a.phi().matrix().at(r, i);
        ablock.at(d_, i) = pair1(a.eta(), coord_vector(chart, i));
        ablock.at(i, d_) = -xi_col[static_cast<std::size_t>(i)];
    }
    Matrix zero(d_ + 1, d_ + 1);
    EndoJ j(chart, ablock, zero, zero, -ablock.transpose());

    Scalar imag = Scalar::imaginary();
    std::vector<E1Section> fgens;
    fgens.reserve(static_cast<std::size_t>(d_) + 1);
    for (int i = 0; i < d_; ++i) {
        MultiVector ei = coord_vector(chart, i);
        fgens.push_back(
            E1Section::from_vec(a.phi().apply(ei) + imag * ei, pair1(a.eta(), ei)));
    }
    fgens.push_back(E1Section::from_vec(-a.xi(), imag));
    SubBundle f(chart, std::move(fgens));
    return {j, span_union(f, annihilator(f))};
}

CheckResult lemma_identities_check(const AlmostContact& a) {
    if (a.axioms().verdict != Verdict::Pass)
        throw NotAlmostContact("the (phi, xi, eta) axioms do not hold");
    const ChartPtr& chart = a.chart();
    int d_ = chart->dim();
    DiffForm de = d(a.eta());
    CheckResult out;
    out.verdict = Verdict::Pass;

    for (int i = 0; i < d_; ++i) {
        MultiVector ei = coord_vector(chart, i);
        Scalar s1 = form_eval2(de, ei, a.xi());
        if (!s1.is_zero()) {
            out.verdict = Verdict::Fail;
            out.witness.push_back("d eta(@" + chart->coord(i) + ", xi) = " +
                                  s1.str(chart->coords()));
        }
        MultiVector br = lie_bracket(a.phi().apply(ei), a.xi());
        Scalar s2 = pair1(a.eta(), br);
        if (!s2.is_zero()) {
            out.verdict = Verdict::Fail;
            out.witness.push_back("eta([phi @" + chart->coord(i) + ", xi]) = " +
                                  s2.str(chart->coords()));
        }
        MultiVector r3 = br - a.phi().apply(lie_bracket(ei, a.xi()));
        if (!r3.is_zero()) {
            out.verdict = Verdict::Fail;
            out.witness.push_back("([phi @" + chart->coord(i) + ", xi] - phi [@" +
                                  chart->coord(i) + ", xi]) = " + r3.str());
        }
        for (int k = 0; k < d_; ++k) {
            MultiVector ek = coord_vector(chart, k);
            Scalar r4 = form_eval2(de, a.phi().apply(ei), ek) -
                        form_eval2(de, a.phi().apply(ek), ei);
            if (!r4.is_zero()) {
                out.verdict = Verdict::Fail;
                out.witness.push_back("d eta(phi @" + chart->coord(i) + ", @" +
                                      chart->coord(k) + ") - d eta(phi @" + chart->coord(k) +
                                      ", @" + chart->coord(i) + ") = " +
                                      r4.str(chart->coords()));
            }
        }
    }
    if (out.verdict == Verdict::Pass)
        out.certificate.push_back("four compatibility identities hold on the frame");
    return out;
}

CheckResult normality_check(const AlmostContact& a) {
    if (a.axioms().verdict != Verdict::Pass)
        throw NotAlmostContact("the (phi, xi, eta) axioms do not hold");
    const ChartPtr& chart = a.chart();
    int d_ = chart->dim();
    DiffForm de = d(a.eta());
    CheckResult out;
    out.verdict = Verdict::Pass;

    for (int i = 0; i < d_; ++i)
        for (int k = i + 1; k < d_; ++k) {
            MultiVector ei = coord_vector(chart, i);
            MultiVector ek = coord_vector(chart, k);
            MultiVector res = nijenhuis(a.phi(), ei, ek) + form_eval2(de, ei, ek) * a.xi();
            if (!res.is_zero()) {
                out.verdict = Verdict::Fail;
                out.witness.push_back("(N_phi + d eta (x) xi)(@" + chart->coord(i) + ", @" +
                                      chart->coord(k) + ") = " + res.str());
            }
        }
    if (out.verdict == Verdict::Pass) {
        CheckResult lemma = lemma_identities_check(a);
        if (lemma.verdict != Verdict::Pass)
            throw InternalError("compatibility identities fail on a normal structure");
        out.certificate.push_back("N_phi + d eta (x) xi = 0 on the frame");
        out.certificate.insert(out.certificate.end(), lemma.certificate.begin(),
                               lemma.certificate.end());
    }
    return out;
}

CheckResult cosymplectic_check(const CosymplecticPair& c) {
    return volume_check(c.eta, c.omega, "eta ^ omega^n");
}

std::pair<DiffForm, Scalar> theta(const CosymplecticPair& c, const MultiVector& x,
                                  const Scalar& f) {
    require_degree(x, 1, "X");
    require_same_chart(c.chart(), x.chart());
    return {interior(x, c.omega) + f * c.eta, -pair1(c.eta, x)};
}

std::pair<EndoJ, SubBundle> gac_from_cosymplectic(const CosymplecticPair& c) {
    if (cosymplectic_check(c).verdict == Verdict::Fail)
        throw SingularTheta("eta ^ omega^n vanishes identically");
    const ChartPtr& chart = c.chart();
    int d_ = chart->dim();
    Matrix t = theta_matrix(c);
    auto tinv = inverse(t);
    if (!tinv) throw SingularTheta("Theta is singular over the scalar field");

    Matrix zero(d_ + 1, d_ + 1);
    EndoJ j(chart, zero, -*tinv, t, zero);

    Scalar imag = Scalar::imaginary();
    std::vector<E1Section> gens;
    gens.reserve(static_cast<std::size_t>(d_) + 1);
    for (int i = 0; i < d_; ++i) {
        MultiVector ei = coord_vector(chart, i);
        auto [al, g] = theta(c, ei, Scalar());
        gens.push_back(E1Section::from_vec(ei, Scalar()) -
                       imag * E1Section::from_form(std::move(al), std::move(g)));
    }
    auto [al, g] = theta(c, MultiVector(chart, 1), Scalar(1));
    gens.push_back(E1Section::from_vec(MultiVector(chart, 1), Scalar(1)) -
                   imag * E1Section::from_form(std::move(al), std::move(g)));
    return {j, SubBundle(chart, std::move(gens))};
}

MultiVector cosymplectic_reeb(const CosymplecticPair& c) {
    const ChartPtr& chart = c.chart();
    int d_ = chart->dim();
    auto tinv = inverse(theta_matrix(c));
    if (!tinv) throw SingularTheta("Theta is singular over the scalar field");
    std::vector<Scalar> rhs(static_cast<std::size_t>(d_) + 1);
    rhs[static_cast<std::size_t>(d_)] = Scalar(-1);
    std::vector<Scalar> sol = apply_matrix(*tinv, rhs);
    if (!sol[static_cast<std::size_t>(d_)].is_zero())
        throw InternalError("cosymplectic reeb solution has a function part");
    sol.pop_back();
    MultiVector xi = MultiVector::from_coeff_column(chart, sol);
    if (!interior(xi, c.omega).is_zero() || pair1(c.eta, xi) != Scalar(1))
        throw InternalError("cosymplectic reeb fails its defining equations");
    return xi;
}

CheckResult gen_sasakian_check(const EndoJ& j1, const EndoJ& j2,
                               const std::vector<std::vector<GaussRat>>& sample_points) {
    if (endo_check(j1).verdict != Verdict::Pass || endo_check(j2).verdict != Verdict::Pass)
        throw NotAlmostComplex("both inputs must pass endo_check");
    require_same_chart(j1.chart(), j2.chart());
    const ChartPtr& chart = j1.chart();
    const auto& names = chart->coords();
    CheckResult out;
    out.verdict = Verdict::Pass;

    Matrix m1 = j1.full();
    Matrix m2 = j2.full();
    Matrix comm = m1 * m2 - m2 * m1;
    if (!comm.is_zero()) {
        out.verdict = Verdict::Fail;
        for (int r = 0; r < comm.rows() && out.witness.empty(); ++r)
            for (int c = 0; c < comm.cols(); ++c)
                if (!comm.at(r, c).is_zero()) {
                    out.witness.push_back("(J1 J2 - J2 J1)[" +
                                          fiber_component_name(chart, r) + ", " +
                                          fiber_component_name(chart, c) +
                                          "] = " + comm.at(r, c).str(names));
                    break;
                }
        return out;
    }
    out.certificate.push_back("J1 J2 = J2 J1");

    // Gram form of G = -J1 J2: (e1, e2) -> <G e1, e2>, i.e. (G^t P) / 2.
    Matrix g = (m1 * m2).scaled(Scalar(-1));
    Matrix gram = (g.transpose() * pairing_matrix(chart->dim())).scaled(Scalar(1) / Scalar(2));
    if (gram != gram.transpose()) {
        out.verdict = Verdict::Fail;
        out.witness.push_back("Gram form of -J1 J2 is not symmetric");
        return out;
    }
    out.certificate.push_back("Gram form of -J1 J2 is symmetric");

    int n = gram.rows();
    std::vector<Scalar> minors;
    minors.reserve(static_cast<std::size_t>(n));
    std::vector<int> idx;
    for (int k = 0; k < n; ++k) {
        idx.push_back(k);
        minors.push_back(minor_det(gram, idx, idx));
    }

    int usable = 0;
    for (const auto& pt : sample_points) {
        std::string where = "(";
        for (std::size_t k = 0; k < pt.size(); ++k)
            where += (k ? ", " : "") + pt[k].str();
        where += ")";
        bool pole = false;
        for (int k = 0; k < n && !pole; ++k) {
            GaussRat v;
            try {
                v = minors[static_cast<std::size_t>(k)].eval(pt);
            } catch (const PoleAtPoint&) {
                pole = true;
                break;
            }
            if (v.im() != 0)
                throw InternalError("Gram minor is not real at a sample point");
            if (v.re() <= 0) {
                out.verdict = Verdict::Fail;
                out.witness.push_back("leading minor " + std::to_string(k + 1) + " at " +
                                      where + " = " + v.str());
                return out;
            }
        }
        if (pole) {
            out.certificate.push_back("sample " + where + " skipped (pole)");
            continue;
        }
        ++usable;
        out.certificate.push_back("all leading minors positive at " + where);
    }
    if (usable == 0) {
        out.verdict = Verdict::Error;
        out.witness.push_back("no pole-free sample points");
        return out;
    }
    // Positivity was only inspected at sample points.
    out.verdict = Verdict::GenericPass;

    for (const auto& [label, j] : {std::pair<const char*, const EndoJ&>{"J1", j1},
                                   std::pair<const char*, const EndoJ&>{"J2", j2}}) {
        CheckResult integ = integrability_check(eigenbundle(j, true));
        out.certificate.push_back(std::string(label) + " eigenbundle integrability: " +
                                  verdict_str(integ.verdict));
    }
    return out;
}

} // namespace geolab
