#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geolab/certificates.hpp"
#include "geolab/e1.hpp"
#include "geolab/linalg.hpp"

namespace geolab {

// Name of a fiber coordinate of E1: X.<coord>, f, alpha.<coord>, g.
std::string fiber_component_name(const ChartPtr& chart, int index);

// Sub-bundle of (complexified) E1 given by a finite generator list. The
// generators need not be independent; rank data comes from elimination
// over the exact scalar field and is certified by a pivot minor.
class SubBundle {
public:
    SubBundle(ChartPtr chart, std::vector<E1Section> gens);

    const ChartPtr& chart() const { return chart_; }
    const std::vector<E1Section>& generators() const { return gens_; }
    int fiber_dim() const { return 2 * (chart_->dim() + 1); }

    // Rows are generator fiber coordinates.
    const Matrix& as_matrix() const;

    int rank() const;
    // Determinant of the pivot minor backing rank(); 1 for the zero span.
    Scalar rank_certificate() const;

    SubBundle conjugate() const;

    RowSolve membership(const E1Section& e) const;
    bool contains(const E1Section& e) const { return membership(e).ok; }

private:
    ChartPtr chart_;
    std::vector<E1Section> gens_;
    mutable std::optional<Matrix> matrix_;
    mutable std::optional<Rref> rref_;
    const Rref& elim() const;
};

// Every pairing of two generators vanishes and the span has the maximal
// isotropic rank dim+1.
CheckResult isotropy_check(const SubBundle& l);

// The span is closed under the bracket: every [g_i, g_j] lies back in the
// span. Witness on failure: the pair and a nonzero residual component.
CheckResult integrability_check(const SubBundle& l);

// span(E) + span(conj E) is all of the complexified fiber, with the rank
// split dim+1 / dim+1.
CheckResult direct_sum_check(const SubBundle& e);

// Both spans contain each other's generators (equality as sub-sheaves).
CheckResult spans_equal_check(const SubBundle& a, const SubBundle& b);

// Annihilator of a family of (X, f) sections inside T*M x R: all (alpha, g)
// with alpha(X) + f g = 0 against every generator. Input generators must
// have zero form part.
SubBundle annihilator(const SubBundle& f);

// Direct sum of generator lists (same chart).
SubBundle span_union(const SubBundle& a, const SubBundle& b);

} // namespace geolab
