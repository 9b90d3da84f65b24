#pragma once

#include "symcoh/cohomology.hpp"
#include "symcoh/report.hpp"

namespace symcoh {

// Exact operator identities checked as matrix equations on the blade basis of
// every degree: the sl(2) relations, the L/Lambda commutators, the properties
// of del+ and del-, the d^Lambda decompositions, the restricted formulas on
// primitive forms, symplectic star laws and the agreement of both routes for
// del+-, d^Lambda. A failure names the first blade where the two sides differ.
CheckReport run_identity_suite(const InvariantComplex& cx);

// Matrix of the bigraded scalar f on the degree-k blade basis.
RationalMatrix bigraded_scalar_matrix(const InvariantComplex& cx, int k, const BigradedScalar& f);

} // namespace symcoh
