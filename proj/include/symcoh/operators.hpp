#pragma once

#include "symcoh/cealgebra.hpp"
#include "symcoh/symplectic.hpp"

namespace symcoh {

// d, d^Lambda and the primitive decomposition d = del+ + L del- on the invariant
// complex of a Lie algebra carrying an invariant symplectic form.
class SymplecticOperators {
public:
    // Throws NotSymplecticError: NotClosed when d omega != 0.
    SymplecticOperators(LieAlgebra algebra, SymplecticStructure structure);

    const LieAlgebra& algebra() const { return algebra_; }
    const SymplecticStructure& structure() const { return structure_; }
    int dim() const { return algebra_.dim(); }
    int half_dim() const { return algebra_.half_dim(); }

    Form d(const Form& a) const { return algebra_.d(a); }

    // d Lambda - Lambda d
    Form d_lambda(const Form& a) const;
    // (-1)^{k+1} *_s d *_s on each degree-k piece
    Form d_lambda_via_star(const Form& a) const;

    // Projection route: Lefschetz-decompose, split d B_s = B0_{s+1} + L B1_{s-1},
    // keep (1/r!) L^r B0 (del+) or (1/r!) L^r B1 (del-).
    Form del_plus(const Form& a) const;
    Form del_minus(const Form& a) const;

    // Closed-formula route:
    //   del+ = (H+2R+1)^{-1} [(H+R+1) d + L d^Lambda]
    //   del- = -((H+2R+1)(H+R))^{-1} [(H+R) d^Lambda - Lambda d]
    // On components with r + s = n the del- formula divides by zero and the
    // projection route is used instead.
    Form del_plus_closed_form(const Form& a) const;
    Form del_minus_closed_form(const Form& a) const;

    Form del_plus_del_minus(const Form& a) const { return del_plus(del_minus(a)); }
    Form dd_lambda(const Form& a) const { return d(d_lambda(a)); }

private:
    struct Split {
        Form plus;
        Form minus;
    };
    Split split(const Form& a) const;

    LieAlgebra algebra_;
    SymplecticStructure structure_;
};

// Parse and validate an (algebra, omega) pair in one step.
SymplecticOperators make_operators(const LieAlgebra& algebra, const Form& omega);

} // namespace symcoh
