#pragma once

#include <string>

#include "geolab/subbundle.hpp"

namespace geolab {

// Bundle endomorphism of E1 in block form [[A, B], [C, D]] against the
// splitting (TM x R) + (T*M x R); each block is (dim+1) x (dim+1).
class EndoJ {
public:
    EndoJ(ChartPtr chart, Matrix a, Matrix b, Matrix c, Matrix d);
    static EndoJ from_full(ChartPtr chart, const Matrix& m);

    const ChartPtr& chart() const { return chart_; }
    const Matrix& a() const { return a_; }
    const Matrix& b() const { return b_; }
    const Matrix& c() const { return c_; }
    const Matrix& d() const { return d_; }
    Matrix full() const;

    E1Section apply(const E1Section& e) const;

    EndoJ operator*(const EndoJ& o) const;
    EndoJ operator-() const;
    bool operator==(const EndoJ& o) const;

private:
    ChartPtr chart_;
    Matrix a_, b_, c_, d_;
};

// Matrix of twice the canonical pairing: [[0, I], [I, 0]].
Matrix pairing_matrix(int dim);

// J is a generalized almost complex structure: J^2 = -id and J is
// anti-self-adjoint for the pairing (JtP = -PJ, hence JtPJ = P).
CheckResult endo_check(const EndoJ& j);

// Eigenbundle of J for the eigenvalue +i (plus_i) or -i.
SubBundle eigenbundle(const EndoJ& j, bool plus_i);

} // namespace geolab
