#pragma once

#include "symcoh/linalg.hpp"
#include "symcoh/operators.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symcoh {

enum class Operator { D, DLambda, DelPlus, DelMinus, DelPlusDelMinus, L, Lambda };

// Degree shift of each operator.
int degree_shift(Operator op);

enum class GroupName { DeRham, DLambda, PPlus, PMinus, DPlusDLambda, DDLambda };

inline constexpr std::array<GroupName, 6> kAllGroups{GroupName::DeRham,  GroupName::DLambda,
                                                     GroupName::PPlus,   GroupName::PMinus,
                                                     GroupName::DPlusDLambda, GroupName::DDLambda};

// "dR", "dL", "p+", "p-", "d+dL", "ddL"
std::string_view group_key(GroupName g);
std::optional<GroupName> parse_group_key(std::string_view key);

struct CohomologyGroup {
    std::string label;
    int degree = 0;
    Subspace numerator;
    Subspace denominator;
    std::vector<Form> representatives;

    std::size_t dimension() const { return representatives.size(); }
};

// The invariant complex of a symplectic Lie algebra with every operator
// materialised on the blade basis of each degree. Everything is computed in
// the constructor, so a constructed complex is safe to share across threads.
class InvariantComplex {
public:
    explicit InvariantComplex(SymplecticOperators ops);

    const SymplecticOperators& operators() const { return ops_; }
    const SymplecticStructure& structure() const { return ops_.structure(); }
    int dim() const { return ops_.dim(); }
    int half_dim() const { return ops_.half_dim(); }

    // Blades of degree k (empty outside 0..2n).
    const std::vector<Blade>& blades(int k) const;
    std::size_t ambient(int k) const { return blades(k).size(); }

    Vector coordinates(const Form& f, int k) const;
    Form form_of(int k, const Vector& v) const;
    std::vector<Form> forms_of(int k, const Subspace& s) const;
    Subspace span_of(int k, const std::vector<Form>& forms) const;

    const Subspace& all(int k) const;
    // ker Lambda in degree k; the zero subspace for k > n.
    const Subspace& primitive(int k) const;

    // Matrix of op from degree k to degree k + shift (columns: degree-k blades).
    const RationalMatrix& matrix(Operator op, int k) const;

    Subspace kernel_on(Operator op, int k, const Subspace& domain) const;
    Subspace image_of(Operator op, int k, const Subspace& domain) const;

    // Legal degrees: dR, dL 0..2n; p+, p- 0..n-1; d+dL, ddL 0..n. Others throw InputError.
    CohomologyGroup group(GroupName g, int k) const;
    int max_degree(GroupName g) const;
    std::vector<std::size_t> dimensions(GroupName g) const;

    // (ker d cap P^k) / (d Omega^{k-1} cap P^k)
    CohomologyGroup de_rham_primitive(int k) const;
    // (ker d^Lambda cap P^k) / (d^Lambda Omega^{k+1} cap P^k)
    CohomologyGroup d_lambda_primitive(int k) const;

private:
    static CohomologyGroup make_group(std::string label, int k, Subspace z, Subspace b, const InvariantComplex& cx);
    Subspace zero(int k) const { return Subspace(ambient(k)); }

    SymplecticOperators ops_;
    std::vector<std::vector<Blade>> blades_;
    std::vector<Subspace> all_;
    std::vector<Subspace> primitive_;
    // matrices_[op][k]
    std::vector<std::vector<RationalMatrix>> matrices_;
    std::vector<Blade> empty_blades_;
    Subspace empty_space_;
};

Form apply_operator(const SymplecticOperators& ops, Operator op, const Form& a);

// True iff every form lies in the numerator and the forms project to a basis
// of the quotient. On failure, *why names the first problem.
bool represents_classes(const InvariantComplex& cx, const CohomologyGroup& g, const std::vector<Form>& forms,
                        std::string* why = nullptr);

// Alternating sum over the elliptic complex
// P^0 -> ... -> P^n -> P^n -> ... -> P^0 (del+, ..., del+ del-, ..., del-).
long elliptic_index(const InvariantComplex& cx);

} // namespace symcoh
