#pragma once

#include "symcoh/cohomology.hpp"
#include "symcoh/report.hpp"

#include <map>
#include <string>
#include <vector>

namespace symcoh {

// [omega]^power ^ : H^k_d -> H^{k+2 power}_d on representative classes.
struct LefschetzMap {
    int degree = 0;
    int power = 0;
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    std::size_t rank = 0;
    // Cycles whose classes span the kernel.
    std::vector<Form> kernel;

    bool injective() const { return rank == source_dim; }
    bool bijective() const { return rank == source_dim && rank == target_dim; }
};

LefschetzMap lefschetz_map(const InvariantComplex& cx, int degree, int power);

// True iff omega^{n-k} ^ is an isomorphism H^k -> H^{2n-k} for every k <= n.
bool strong_lefschetz_holds(const InvariantComplex& cx);

// The three exactness conditions of the del+ del- lemma for one d-closed primitive k-form.
struct Exactness {
    bool del_plus_exact = false;
    bool del_minus_exact = false;       // meaningful for k < n
    bool del_plus_del_minus_exact = false;  // meaningful for k > 0
};

Exactness exactness(const InvariantComplex& cx, const Form& b, int k);

struct LemmaDegree {
    int degree = 0;
    std::size_t closed_dim = 0;      // ker d cap P^k
    std::size_t plus_exact_dim = 0;  // ... cap del+ P^{k-1}
    std::size_t minus_exact_dim = 0; // ... cap del- P^{k+1}
    std::size_t both_exact_dim = 0;  // ... cap del+ del- P^k
    bool holds = true;
    // A closed primitive form that satisfies some applicable condition but not all.
    std::vector<Form> witnesses;
};

// Per-degree test of the del+ del- lemma, 0 <= k <= n.
std::vector<LemmaDegree> ddlambda_lemma(const InvariantComplex& cx);
bool ddlambda_lemma_holds(const InvariantComplex& cx);

// Complex property of every group, dim PH+ = dim PH-, the two middle groups,
// and the elliptic index.
CheckReport check_invariants(const InvariantComplex& cx);
// PH^k_del+ = H^k_d and PH^k_del- = H^k_dL for k = 0, 1 as subspaces.
CheckReport check_low_degree_equivalence(const InvariantComplex& cx);
// Strong Lefschetz at each k, plus the diagnostic [omega] ^ : H^1 -> H^3.
CheckReport check_strong_lefschetz(const InvariantComplex& cx);
// Lemma per degree, cross-checked against strong Lefschetz.
CheckReport check_ddlambda_lemma(const InvariantComplex& cx);
// Equalities with H_d cap P and H_dL cap P where the lemma holds; the lower
// bound dim PH^k_del+- >= dim(H^k_dL cap P^k) everywhere.
CheckReport check_comparison_bounds(const InvariantComplex& cx);

// dim PH^k_del+ and dim PH^k_del- (k < n) for several forms on one algebra.
struct OmegaDimensions {
    std::string omega;
    std::vector<std::size_t> plus;
    std::vector<std::size_t> minus;
};
std::vector<OmegaDimensions> omega_dependence(const LieAlgebra& algebra, const std::vector<Form>& omegas);

} // namespace symcoh
