#pragma once

#include "symcoh/cohomology.hpp"
#include "symcoh/report.hpp"

#include <vector>

namespace symcoh {

// (omega, J, g) on the 2n-dimensional vector space. Vectors are columns of
// coordinates; omega(x, y) = x^T omega y and g(x, y) = omega(x, J y).
struct CompatibleTriple {
    RationalMatrix omega;
    // Darboux frame f_1..f_2n as columns: omega(f_{2i-1}, f_{2i}) = 1, all other pairs 0.
    RationalMatrix frame;
    RationalMatrix coframe;  // frame^{-1}; its rows are the dual 1-forms
    RationalMatrix J;        // J f_{2i-1} = f_{2i}, J f_{2i} = -f_{2i-1}
    RationalMatrix metric;   // omega * J
    // Metric on 1-form coefficient vectors, metric^{-1} = frame * frame^T.
    RationalMatrix dual_metric;
};

// Symplectic Gram-Schmidt on the standard basis vectors, taken in the given
// order (1-based indices; empty means 1..2n).
CompatibleTriple build_triple(const SymplecticStructure& s, const std::vector<int>& pivot_order = {});
// Same procedure starting from the columns of an invertible matrix.
CompatibleTriple build_triple(const SymplecticStructure& s, const RationalMatrix& start);
// Starts from e_2n + e_{2n-1}, e_{2n-1} + e_{2n-2}, ..., e_1: a frame that
// differs from the default one on every fixture used here.
CompatibleTriple alternate_triple(const SymplecticStructure& s);

// J^2 = -1, g symmetric with positive leading minors, omega(Jx, Jy) = omega(x, y).
CheckReport check_triple(const CompatibleTriple& t);

enum class Side { Plus, Minus };

// Inner product, Hodge star, the operator J-cal and adjoints on the invariant
// complex. Holds a reference to the complex, which must outlive it.
class HodgeStructure {
public:
    HodgeStructure(const InvariantComplex& cx, CompatibleTriple triple);

    const InvariantComplex& complex() const { return cx_; }
    const CompatibleTriple& triple() const { return triple_; }

    // J-cal = sum i^{p-q} Pi^{p,q}, computed over Q(i) from the type
    // decomposition of each 1-form factor; `inverse` uses i^{q-p}.
    GaussianForm jay_complex(const GaussianForm& a, bool inverse = false) const;
    // Real form in, real form out (imaginary residue is checked).
    Form jay(const Form& a) const;
    Form jay_inverse(const Form& a) const;
    // The same operator as the action of J on forms: each 1-form factor alpha
    // replaced by alpha(J .).
    Form jay_induced(const Form& a) const;

    // * = J-cal *_s
    Form hodge_star(const Form& a) const;
    // From the metric: e_I ^ *b = g(e_I, b) vol for every blade e_I, vol = omega^n / n!.
    Form hodge_star_metric(const Form& a) const;

    // Integration normalised so that omega^n / n! has integral 1.
    Rational integrate(const Form& a) const;
    // (a, b) = integral of a ^ *b
    Rational inner(const Form& a, const Form& b) const;

    // Gram matrix of the inner product on the degree-k blade basis.
    const RationalMatrix& gram(int k) const;
    // Gram matrix built from minors of the dual metric, as an independent check.
    RationalMatrix gram_from_minors(int k) const;

    // Matrices on blade bases.
    RationalMatrix jay_matrix(int k) const;
    GaussianMatrix jay_matrix_complex(int k) const;
    // Eigenvalue f(r, s) on each Lefschetz piece of degree k.
    RationalMatrix bigraded_matrix(int k, const BigradedScalar& f) const;

    // Adjoint of m : degree `from` -> degree `to`; the result maps `to` -> `from`.
    RationalMatrix adjoint(const RationalMatrix& m, int from, int to) const;
    // Adjoint of the operator del+ (del-) starting in degree k.
    RationalMatrix del_adjoint(Side side, int k) const;

    // ker Laplacian on P^k, 0 <= k < n.
    Subspace harmonic_space(int k, Side side) const;
    // ker del +- cap ker (del +-)^* cap P^k.
    Subspace harmonic_by_kernels(int k, Side side) const;

    // del+- P^{k-+1} and (del+-)^* P^{k+-1} inside P^k.
    Subspace exact_part(int k, Side side) const;
    Subspace coexact_part(int k, Side side) const;

    bool orthogonal(const Subspace& a, const Subspace& b, int k) const;

private:
    Form jay_blade(Blade b) const;

    const InvariantComplex& cx_;
    CompatibleTriple triple_;
    Rational volume_integral_;
    std::vector<GaussianForm> type_10_;  // Pi^{1,0} e_i
    std::vector<GaussianForm> type_01_;  // Pi^{0,1} e_i
    std::vector<RationalMatrix> gram_;
    std::vector<RationalMatrix> gram_inverse_;
};

// Pairing matrix of PH^k_del+ x PH^k_del- given by the integral of
// omega^{n-k}/(n-k)! ^ B ^ B'.
RationalMatrix pairing_matrix(const InvariantComplex& cx, int k);

// Hodge decomposition, harmonic dimensions against cohomology, two-route
// checks for J-cal and *, J-cal conjugation identities, adjoint formula for
// del+^*, pairing non-degeneracy and metric independence.
CheckReport check_hodge_decomposition(const HodgeStructure& h, int k, Side side);
CheckReport check_jay_conjugation(const HodgeStructure& h, int k);
CheckReport run_hodge_suite(const InvariantComplex& cx);

} // namespace symcoh
