#include "symcoh/operators.hpp"

namespace symcoh {

SymplecticOperators::SymplecticOperators(LieAlgebra algebra, SymplecticStructure structure)
    : algebra_(std::move(algebra))
    , structure_(std::move(structure))
{
    if (structure_.dim() != algebra_.dim()) throw InputError("omega and algebra have different dimensions");
    const Form domega = algebra_.d(structure_.omega());
    if (!domega.is_zero())
        throw NotSymplecticError(NotSymplecticError::Reason::NotClosed,
                                 "omega is not closed: d omega = " + format_form(domega));
}

SymplecticOperators make_operators(const LieAlgebra& algebra, const Form& omega)
{
    if (omega.dim() != algebra.dim()) throw InputError("omega and algebra have different dimensions");
    // Report non-closedness first; degeneracy is checked by the structure itself.
    if (omega.is_homogeneous_of(2)) {
        const Form domega = algebra.d(omega);
        if (!domega.is_zero()) {
            std::string what = "omega is not closed: d omega = " + format_form(domega);
            try {
                SymplecticStructure probe(omega);
            } catch (const NotSymplecticError&) {
                what += "; omega is also degenerate";
            }
            throw NotSymplecticError(NotSymplecticError::Reason::NotClosed, what);
        }
    }
    return SymplecticOperators(algebra, SymplecticStructure(omega));
}

Form SymplecticOperators::d_lambda(const Form& a) const
{
    return d(structure_.Lambda(a)) - structure_.Lambda(d(a));
}

Form SymplecticOperators::d_lambda_via_star(const Form& a) const
{
    Form out(dim());
    for (int k = 0; k <= dim(); ++k) {
        const Form part = grade_project(a, k);
        if (part.is_zero()) continue;
        Form t = structure_.symplectic_star(d(structure_.symplectic_star(part)));
        out += (k % 2 == 1) ? t : Form(-t);
    }
    return out;
}

SymplecticOperators::Split SymplecticOperators::split(const Form& a) const
{
    const SymplecticStructure& s = structure_;
    Split out{Form(dim()), Form(dim())};
    for (const LefschetzPiece& piece : s.bigraded_decompose(a)) {
        const Form db = d(piece.primitive);
        if (db.is_zero()) continue;
        const LefschetzComponents parts = s.lefschetz_decompose(db, piece.s + 1);
        for (const auto& [r, b] : parts.primitive_by_power) {
            // Only the r = 0 and r = 1 components of d B_s can be nonzero.
            if (r > 1) throw ComplexError("d of a primitive form has a Lefschetz component with r > 1");
            Form lifted = s.lefschetz_piece({piece.r, piece.s + 1 - 2 * r, b});
            if (r == 0)
                out.plus += lifted;
            else
                out.minus += lifted;
        }
    }
    return out;
}

Form SymplecticOperators::del_plus(const Form& a) const { return split(a).plus; }

Form SymplecticOperators::del_minus(const Form& a) const { return split(a).minus; }

Form SymplecticOperators::del_plus_closed_form(const Form& a) const
{
    const SymplecticStructure& s = structure_;
    const int n = half_dim();
    const Form inner = s.apply_bigraded(d(a), [n](int r, int t) { return Rational(n - r - t + 1); }) +
                       s.L(d_lambda(a));
    return s.apply_bigraded(inner, [n](int, int t) { return Rational(1, n - t + 1); });
}

Form SymplecticOperators::del_minus_closed_form(const Form& a) const
{
    const SymplecticStructure& s = structure_;
    const int n = half_dim();
    Form out(dim());
    for (const LefschetzPiece& piece : s.bigraded_decompose(a)) {
        const Form component = s.lefschetz_piece(piece);
        if (piece.r + piece.s == n) {
            out += del_minus(component);
            continue;
        }
        const Form inner = s.apply_bigraded(d_lambda(component), [n](int r, int t) { return Rational(n - r - t); }) -
                           s.Lambda(d(component));
        out += s.apply_bigraded(inner, [n](int r, int t) {
            if (r + t == n) throw ComplexError("del- closed formula hit a zero (H+R) eigenvalue");
            return Rational(-1, (n - t + 1) * (n - r - t));
        });
    }
    return out;
}

} // namespace symcoh
