#pragma once

#include "symcoh/form.hpp"
#include "symcoh/linalg.hpp"

#include <functional>
#include <map>
#include <vector>

namespace symcoh {

// One Lefschetz component (1/r!) L^r B_s with B_s primitive.
struct LefschetzPiece {
    int r;
    int s;
    Form primitive;
};

// Lefschetz decomposition of a homogeneous k-form: primitive B_{k-2r} keyed by r.
struct LefschetzComponents {
    int degree;
    std::map<int, Form> primitive_by_power;
};

// Eigenvalue of a scalar operator on the Lefschetz piece L^{r,s}; used for
// H + R, (H + 2R + 1)^{-1} and friends.
using BigradedScalar = std::function<Rational(int r, int s)>;

// A non-degenerate 2-form on a 2n-dimensional vector space together with the
// sl(2) action (L, Lambda, H), the Lefschetz decomposition and the symplectic star.
class SymplecticStructure {
public:
    // Throws NotSymplecticError (NotTwoForm / Degenerate).
    explicit SymplecticStructure(Form omega);

    int dim() const { return dim_; }
    int half_dim() const { return dim_ / 2; }
    const Form& omega() const { return omega_; }

    // omega_{ij}: coefficient matrix with omega = 1/2 omega_{ij} e_i ^ e_j.
    const RationalMatrix& omega_matrix() const { return omega_matrix_; }
    // (omega^{-1})^{ij}: literal matrix inverse of omega_matrix().
    const RationalMatrix& inverse_matrix() const { return inverse_; }

    Form L(const Form& a) const { return wedge(omega_, a); }
    Form L_power(const Form& a, int r) const;
    Form Lambda(const Form& a) const;
    // H = sum_k (n - k) Pi^k.
    Form H(const Form& a) const;
    // Reads off the omega-power r of each Lefschetz component.
    Form R(const Form& a) const;

    // omega^n / n!
    Form volume() const;

    // Closed formula B_{k-2r} = (sum_l a_{r,l} L^l Lambda^{r+l} / l!) A_k.
    LefschetzComponents lefschetz_decompose(const Form& a, int k) const;
    // Every homogeneous piece of a, decomposed; components that vanish are omitted.
    std::vector<LefschetzPiece> bigraded_decompose(const Form& a) const;
    Form reassemble(const std::vector<LefschetzPiece>& pieces) const;
    Form lefschetz_piece(const LefschetzPiece& piece) const;

    // Decompose, scale each L^{r,s} component by f(r, s), reassemble.
    Form apply_bigraded(const Form& a, const BigradedScalar& f) const;

    bool is_primitive(const Form& a) const;
    // L^{n-s+1} B = 0 characterisation (homogeneous input).
    bool is_primitive_by_power(const Form& a) const;

    // RREF basis of ker Lambda on degree-k forms, 0 <= k <= n.
    std::vector<Form> primitive_basis(int k) const;

    // Weil relation: *_s (L^r/r!) B_s = (-1)^{s(s+1)/2} L^{n-r-s}/(n-r-s)! B_s.
    Form symplectic_star(const Form& a) const;

    // (omega^{-1})^k(A, A'): sum over blades of the k x k minors of omega^{-1}.
    Rational inverse_pairing(const Form& a, const Form& b) const;

private:
    int dim_;
    Form omega_;
    RationalMatrix omega_matrix_;
    RationalMatrix inverse_;
};

// e12 + e34 + ... + e_{2n-1,2n}
Form standard_omega(int n);

// The e1/e2-splitting recursion for the primitive basis of degree k in
// dimension 2n with the standard form:
// mu = e1^b1 + e2^b2 + (e12 - (H+1)^{-1} sum_{j>=2} e_{2j-1,2j}) ^ b3 + b4.
std::vector<Form> recursive_primitive_basis(int n, int k);

// a_{r,l} of the closed Lefschetz projection formula for a k-form in dimension 2n.
Rational lefschetz_coefficient(int n, int k, int r, int l);

Rational factorial(int m);

} // namespace symcoh
