#pragma once

#include "symcoh/blade.hpp"
#include "symcoh/errors.hpp"
#include "symcoh/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace symcoh {

// Element of the exterior algebra over a dim-dimensional dual space, with exact
// coefficients. Zero coefficients are never stored, so equality is map equality.
template <class Scalar>
class BasicForm {
public:
    using Terms = std::map<Blade, Scalar>;

    BasicForm() = default;
    explicit BasicForm(int dim) : dim_(dim) { check_dimension(dim); }

    static BasicForm constant(int dim, const Scalar& c)
    {
        BasicForm f(dim);
        f.add_term(Blade::unit(), c);
        return f;
    }

    static BasicForm monomial(int dim, Blade b, const Scalar& c = Scalar(1))
    {
        BasicForm f(dim);
        f.add_term(b, c);
        return f;
    }

    static BasicForm generator(int dim, int index)
    {
        if (index < 1 || index > dim) throw InputError("generator index out of range");
        return monomial(dim, Blade::generator(index));
    }

    int dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Scalar coefficient(Blade b) const
    {
        auto it = terms_.find(b);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    // Degree of a homogeneous nonzero form.
    std::optional<int> degree() const
    {
        if (terms_.empty()) return std::nullopt;
        const int k = terms_.begin()->first.degree();
        for (const auto& [b, c] : terms_)
            if (b.degree() != k) return std::nullopt;
        return k;
    }

    bool is_homogeneous() const { return terms_.empty() || degree().has_value(); }

    bool is_homogeneous_of(int k) const
    {
        for (const auto& [b, c] : terms_)
            if (b.degree() != k) return false;
        return true;
    }

    void add_term(Blade b, const Scalar& c)
    {
        if (is_zero_scalar(c)) return;
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (is_zero_scalar(it->second)) terms_.erase(it);
        }
    }

    BasicForm& operator+=(const BasicForm& o)
    {
        check_same(o);
        for (const auto& [b, c] : o.terms_) add_term(b, c);
        return *this;
    }

    BasicForm& operator-=(const BasicForm& o)
    {
        check_same(o);
        for (const auto& [b, c] : o.terms_) add_term(b, -c);
        return *this;
    }

    BasicForm& operator*=(const Scalar& s)
    {
        if (is_zero_scalar(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, c] : terms_) c *= s;
        return *this;
    }

    friend BasicForm operator+(BasicForm a, const BasicForm& b) { return a += b; }
    friend BasicForm operator-(BasicForm a, const BasicForm& b) { return a -= b; }
    friend BasicForm operator*(BasicForm a, const Scalar& s) { return a *= s; }
    friend BasicForm operator*(const Scalar& s, BasicForm a) { return a *= s; }
    friend BasicForm operator-(BasicForm a) { return a *= Scalar(-1); }

    friend bool operator==(const BasicForm& a, const BasicForm& b)
    {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

private:
    static bool is_zero_scalar(const Scalar& c) { return symcoh::is_zero(c); }

    static void check_dimension(int dim)
    {
        if (dim < 0 || dim > kMaxDimension)
            throw InputError("ambient dimension " + std::to_string(dim) + " outside 0.." +
                             std::to_string(kMaxDimension));
    }

    void check_same(const BasicForm& o) const
    {
        if (o.dim_ != dim_) throw InputError("ambient dimension mismatch");
    }

    int dim_ = 0;
    Terms terms_;
};

using Form = BasicForm<Rational>;
using GaussianForm = BasicForm<GaussianRational>;

template <class Scalar>
BasicForm<Scalar> wedge(const BasicForm<Scalar>& a, const BasicForm<Scalar>& b)
{
    if (a.dim() != b.dim()) throw InputError("wedge: ambient dimension mismatch");
    BasicForm<Scalar> out(a.dim());
    for (const auto& [ba, ca] : a.terms()) {
        for (const auto& [bb, cb] : b.terms()) {
            const int sign = wedge_sign(ba, bb);
            if (sign == 0) continue;
            Scalar c = ca * cb;
            if (sign < 0) c = -c;
            out.add_term(Blade(ba.mask() | bb.mask()), c);
        }
    }
    return out;
}

// Left interior product with the dual basis vector of e_index.
template <class Scalar>
BasicForm<Scalar> contract(int index, const BasicForm<Scalar>& a)
{
    if (index < 1 || index > a.dim()) throw InputError("contract: index out of range");
    BasicForm<Scalar> out(a.dim());
    for (const auto& [b, c] : a.terms()) {
        const int sign = contraction_sign(index, b);
        if (sign == 0) continue;
        const Blade rest(b.mask() & ~Blade::generator(index).mask());
        out.add_term(rest, sign > 0 ? c : Scalar(-c));
    }
    return out;
}

template <class Scalar>
BasicForm<Scalar> grade_project(const BasicForm<Scalar>& a, int k)
{
    BasicForm<Scalar> out(a.dim());
    for (const auto& [b, c] : a.terms())
        if (b.degree() == k) out.add_term(b, c);
    return out;
}

// Wedge power a^p (p >= 0); a^0 = 1.
template <class Scalar>
BasicForm<Scalar> wedge_power(const BasicForm<Scalar>& a, int p)
{
    BasicForm<Scalar> out = BasicForm<Scalar>::constant(a.dim(), Scalar(1));
    for (int i = 0; i < p; ++i) out = wedge(out, a);
    return out;
}

GaussianForm to_gaussian(const Form& f);
// Real part; throws ComplexError if any imaginary coefficient is nonzero.
Form real_part_checked(const GaussianForm& f);

// Text grammar: signed sum of terms "[c/d*]e{i1}{i2}..." with strictly
// ascending single-character indices 1-9, a-f, or a bare rational constant.
// Printing sorts terms by blade and elides a unit coefficient.
Form parse_form(std::string_view text, int dim);
std::string format_form(const Form& f);
std::string format_blade(Blade b);

// Symplectic-form input: either the form grammar above, or the shorthand
// "16+25-34" (optional "c*" coefficients, indices without the leading 'e').
Form parse_two_form(std::string_view text, int dim);

int parse_index_char(char c);
char index_char(int index);

} // namespace symcoh
