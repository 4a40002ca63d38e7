#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "geolab/endo.hpp"
#include "geolab/subbundle.hpp"

namespace geolab {

// Bivector + vector field candidate for a Jacobi structure. Whether the
// pair actually is Jacobi is a checked property, not an invariant.
struct JacobiPair {
    MultiVector pi;
    MultiVector e;
    JacobiPair(MultiVector pi_, MultiVector e_);
    const ChartPtr& chart() const { return pi.chart(); }
};

// (phi, xi, eta) candidate. Construction runs the two axioms on the frame
// and records the outcome; it never throws, so failing candidates can be
// inspected through almost_contact_check.
class AlmostContact {
public:
    AlmostContact(Tensor11 phi, MultiVector xi, DiffForm eta);

    const Tensor11& phi() const { return phi_; }
    const MultiVector& xi() const { return xi_; }
    const DiffForm& eta() const { return eta_; }
    const ChartPtr& chart() const { return phi_.chart(); }
    const CheckResult& axioms() const { return axioms_; }

private:
    Tensor11 phi_;
    MultiVector xi_;
    DiffForm eta_;
    CheckResult axioms_;
};

struct CosymplecticPair {
    DiffForm omega;
    DiffForm eta;
    CosymplecticPair(DiffForm omega_, DiffForm eta_);
    const ChartPtr& chart() const { return omega.chart(); }
};

// eta ^ (d eta)^n != 0 on a (2n+1)-chart; the certificate is the single
// top coefficient.
CheckResult contact_check(const DiffForm& eta);

// flat(X) = i_X d eta + eta(X) eta, and its inverse over the scalar field.
DiffForm flat_eta(const DiffForm& eta, const MultiVector& x);
MultiVector flat_eta_inv(const DiffForm& eta, const DiffForm& alpha);

// Reeb field of a contact form: i_xi d eta = 0, eta(xi) = 1.
MultiVector reeb(const DiffForm& eta);

// Jacobi pair of a contact form, solved from the frame matrix of
// (X, f) -> (-i_X d eta - f eta, eta(X)), whose inverse is the sharp map;
// cross-validated against pi(a, b) = d eta(flat^-1 a, flat^-1 b).
JacobiPair jacobi_from_contact(const DiffForm& eta);

// [E, pi] = 0 and [pi, pi] = 2 E ^ pi, exact.
CheckResult jacobi_check(const JacobiPair& j);

// (pi, E)#(alpha, g) = (pi#(alpha) + g E, -i_E alpha).
std::pair<MultiVector, Scalar> sharp_pi_E(const JacobiPair& j, const DiffForm& alpha,
                                          const Scalar& g);

// Span of the sharp graph, oriented so that for a contact form it
// coincides with graph_omega_eta(d eta, eta) as a span: the source
// covector enters with a minus sign.
SubBundle graph_jacobi(const JacobiPair& j);

// L_(omega, eta) = {(X, f) + (i_X omega + f eta, -i_X eta)}.
SubBundle graph_omega_eta(const DiffForm& omega, const DiffForm& eta);

// L meets neither summand: both coordinate blocks of the generator matrix
// have the full rank dim+1, each certified by a pivot minor.
CheckResult transversality_check(const SubBundle& l);

// L cap ((TM x {0}) + ({0} x R)): passes iff that intersection is a line
// that normalizes to (xi, 0) + (0, -1); xi is returned.
struct KernelLine {
    CheckResult result;
    std::optional<E1Section> generator;
    std::optional<MultiVector> xi;
};
KernelLine kernel_line(const SubBundle& l);

// Frame check of eta(xi) = 1 and phi^2 = -id + eta (x) xi, then the two
// consequences phi(xi) = 0 and eta o phi = 0.
CheckResult almost_contact_check(const AlmostContact& a);

// J(X, f) = (phi X - f xi, eta(X)) as the A block, D = -A^t, B = C = 0;
// the bundle is F + Ann(F) with F spanned by J(frame) + i (frame).
std::pair<EndoJ, SubBundle> gac_from_almost_contact(const AlmostContact& a);

// N_phi(X, Y) + d eta(X, Y) xi = 0 on all frame pairs; when normal, the
// four compatibility identities are also verified (see
// lemma_identities_check).
CheckResult normality_check(const AlmostContact& a);

// d eta(X, xi) = 0; eta([phi X, xi]) = 0; [phi X, xi] = phi [X, xi];
// d eta(phi X, Y) = d eta(phi Y, X) -- all on the coordinate frame.
CheckResult lemma_identities_check(const AlmostContact& a);

// eta ^ omega^n != 0 on a (2n+1)-chart.
CheckResult cosymplectic_check(const CosymplecticPair& c);

// Theta(X, f) = (i_X omega + f eta, -eta(X)).
std::pair<DiffForm, Scalar> theta(const CosymplecticPair& c, const MultiVector& x,
                                  const Scalar& f);

// J = [[0, -T^-1], [T, 0]] for T the frame matrix of Theta; the bundle is
// spanned by (X, f) - i Theta(X, f) over the frame.
std::pair<EndoJ, SubBundle> gac_from_cosymplectic(const CosymplecticPair& c);

// Reeb field of a cosymplectic pair: i_xi omega = 0, eta(xi) = 1.
MultiVector cosymplectic_reeb(const CosymplecticPair& c);

// Commutation J1 J2 = J2 J1 and symmetry of the Gram form of G = -J1 J2,
// both exact; positivity of G via leading principal minors at the given
// sample points only (never an everywhere claim). Integrability of the two
// +i eigenbundles is reported in the certificate without joining the
// verdict.
CheckResult gen_sasakian_check(const EndoJ& j1, const EndoJ& j2,
                               const std::vector<std::vector<GaussRat>>& sample_points);

} // namespace geolab
