#include "symcoh/cohomology.hpp"

namespace symcoh {

int degree_shift(Operator op)
{
    switch (op) {
    case Operator::D:
    case Operator::DelPlus: return 1;
    case Operator::DLambda:
    case Operator::DelMinus: return -1;
    case Operator::DelPlusDelMinus: return 0;
    case Operator::L: return 2;
    case Operator::Lambda: return -2;
    }
    return 0;
}

std::string_view group_key(GroupName g)
{
    switch (g) {
    case GroupName::DeRham: return "dR";
    case GroupName::DLambda: return "dL";
    case GroupName::PPlus: return "p+";
    case GroupName::PMinus: return "p-";
    case GroupName::DPlusDLambda: return "d+dL";
    case GroupName::DDLambda: return "ddL";
    }
    return "";
}

std::optional<GroupName> parse_group_key(std::string_view key)
{
    for (GroupName g : kAllGroups)
        if (group_key(g) == key) return g;
    return std::nullopt;
}

Form apply_operator(const SymplecticOperators& ops, Operator op, const Form& a)
{
    switch (op) {
    case Operator::D: return ops.d(a);
    case Operator::DLambda: return ops.d_lambda(a);
    case Operator::DelPlus: return ops.del_plus(a);
    case Operator::DelMinus: return ops.del_minus(a);
    case Operator::DelPlusDelMinus: return ops.del_plus_del_minus(a);
    case Operator::L: return ops.structure().L(a);
    case Operator::Lambda: return ops.structure().Lambda(a);
    }
    return a;
}

namespace {
constexpr std::array<Operator, 7> kOperators{Operator::D,        Operator::DLambda, Operator::DelPlus,
                                             Operator::DelMinus, Operator::DelPlusDelMinus,
                                             Operator::L,        Operator::Lambda};
}

InvariantComplex::InvariantComplex(SymplecticOperators ops)
    : ops_(std::move(ops))
{
    const int top = dim();
    for (int k = 0; k <= top; ++k) blades_.push_back(blades_of_degree(top, k));
    for (int k = 0; k <= top; ++k) all_.push_back(Subspace::full(ambient(k)));

    matrices_.resize(kOperators.size());
    for (Operator op : kOperators) {
        auto& per_degree = matrices_[static_cast<std::size_t>(op)];
        for (int k = 0; k <= top; ++k) {
            const int target = k + degree_shift(op);
            RationalMatrix m(ambient(target), ambient(k));
            if (target >= 0 && target <= top) {
                const auto& domain = blades(k);
                for (std::size_t c = 0; c < domain.size(); ++c)
                    m.set_column(c, coordinates(apply_operator(ops_, op, Form::monomial(top, domain[c])), target));
            }
            per_degree.push_back(std::move(m));
        }
    }

    for (int k = 0; k <= top; ++k) {
        if (k > half_dim())
            primitive_.push_back(zero(k));
        else
            primitive_.push_back(kernel(matrix(Operator::Lambda, k)));
    }
}

const std::vector<Blade>& InvariantComplex::blades(int k) const
{
    if (k < 0 || k > dim()) return empty_blades_;
    return blades_[static_cast<std::size_t>(k)];
}

Vector InvariantComplex::coordinates(const Form& f, int k) const
{
    if (!f.is_homogeneous_of(k)) throw InputError("coordinates: form is not of degree " + std::to_string(k));
    const auto& basis = blades(k);
    Vector v(basis.size(), Rational(0));
    for (std::size_t i = 0; i < basis.size(); ++i) v[i] = f.coefficient(basis[i]);
    return v;
}

Form InvariantComplex::form_of(int k, const Vector& v) const
{
    const auto& basis = blades(k);
    Form f(dim());
    for (std::size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], v[i]);
    return f;
}

std::vector<Form> InvariantComplex::forms_of(int k, const Subspace& s) const
{
    std::vector<Form> out;
    for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(form_of(k, s.basis_vector(i)));
    return out;
}

Subspace InvariantComplex::span_of(int k, const std::vector<Form>& forms) const
{
    std::vector<Vector> vectors;
    for (const Form& f : forms) vectors.push_back(coordinates(f, k));
    return Subspace::span(ambient(k), vectors);
}

const Subspace& InvariantComplex::all(int k) const
{
    if (k < 0 || k > dim()) return empty_space_;
    return all_[static_cast<std::size_t>(k)];
}

const Subspace& InvariantComplex::primitive(int k) const
{
    if (k < 0 || k > dim()) return empty_space_;
    return primitive_[static_cast<std::size_t>(k)];
}

const RationalMatrix& InvariantComplex::matrix(Operator op, int k) const
{
    if (k < 0 || k > dim()) throw InputError("matrix: degree out of range");
    return matrices_[static_cast<std::size_t>(op)][static_cast<std::size_t>(k)];
}

Subspace InvariantComplex::kernel_on(Operator op, int k, const Subspace& domain) const
{
    const RationalMatrix& m = matrix(op, k);
    const RationalMatrix restricted = m * domain.basis().transpose();
    const Subspace coeffs = kernel(restricted);
    std::vector<Vector> vectors;
    for (std::size_t i = 0; i < coeffs.dim(); ++i) {
        Vector v(ambient(k), Rational(0));
        for (std::size_t j = 0; j < domain.dim(); ++j) {
            const Rational& c = coeffs.basis()(i, j);
            if (is_zero(c)) continue;
            for (std::size_t x = 0; x < v.size(); ++x) v[x] += c * domain.basis()(j, x);
        }
        vectors.push_back(std::move(v));
    }
    return Subspace::span(ambient(k), vectors);
}

Subspace InvariantComplex::image_of(Operator op, int k, const Subspace& domain) const
{
    const int target = k + degree_shift(op);
    if (k < 0 || k > dim()) return zero(target);
    const RationalMatrix& m = matrix(op, k);
    return image(m * domain.basis().transpose());
}

int InvariantComplex::max_degree(GroupName g) const
{
    switch (g) {
    case GroupName::DeRham:
    case GroupName::DLambda: return dim();
    case GroupName::PPlus:
    case GroupName::PMinus: return half_dim() - 1;
    case GroupName::DPlusDLambda:
    case GroupName::DDLambda: return half_dim();
    }
    return -1;
}

CohomologyGroup InvariantComplex::make_group(std::string label, int k, Subspace z, Subspace b,
                                             const InvariantComplex& cx)
{
    if (!z.contains(b))
        throw ComplexError("group " + label + " in degree " + std::to_string(k) +
                           ": boundaries not contained in cycles");
    const Quotient q = quotient(z, b);
    CohomologyGroup g{std::move(label), k, std::move(z), std::move(b), {}};
    for (const Vector& v : q.representatives) g.representatives.push_back(cx.form_of(k, v));
    return g;
}

CohomologyGroup InvariantComplex::group(GroupName g, int k) const
{
    if (k < 0 || k > max_degree(g))
        throw InputError("group " + std::string(group_key(g)) + " is not defined in degree " + std::to_string(k));
    const std::string label(group_key(g));
    switch (g) {
    case GroupName::DeRham:
        return make_group(label, k, kernel_on(Operator::D, k, all(k)), image_of(Operator::D, k - 1, all(k - 1)), *this);
    case GroupName::DLambda:
        return make_group(label, k, kernel_on(Operator::DLambda, k, all(k)),
                          image_of(Operator::DLambda, k + 1, all(k + 1)), *this);
    case GroupName::PPlus:
        return make_group(label, k, kernel_on(Operator::DelPlus, k, primitive(k)),
                          image_of(Operator::DelPlus, k - 1, primitive(k - 1)), *this);
    case GroupName::PMinus:
        return make_group(label, k, kernel_on(Operator::DelMinus, k, primitive(k)),
                          image_of(Operator::DelMinus, k + 1, primitive(k + 1)), *this);
    case GroupName::DPlusDLambda:
        return make_group(label, k,
                          subspace_intersect(kernel_on(Operator::DelPlus, k, primitive(k)),
                                             kernel_on(Operator::DelMinus, k, primitive(k))),
                          image_of(Operator::DelPlusDelMinus, k, primitive(k)), *this);
    case GroupName::DDLambda:
        return make_group(label, k, kernel_on(Operator::DelPlusDelMinus, k, primitive(k)),
                          subspace_sum(image_of(Operator::DelPlus, k - 1, primitive(k - 1)),
                                       image_of(Operator::DelMinus, k + 1, primitive(k + 1))),
                          *this);
    }
    throw InputError("unknown group");
}

std::vector<std::size_t> InvariantComplex::dimensions(GroupName g) const
{
    std::vector<std::size_t> out;
    for (int k = 0; k <= max_degree(g); ++k) out.push_back(group(g, k).dimension());
    return out;
}

CohomologyGroup InvariantComplex::de_rham_primitive(int k) const
{
    if (k < 0 || k > half_dim()) throw InputError("H_d cap P is defined for 0 <= k <= n");
    return make_group("dR&P", k, kernel_on(Operator::D, k, primitive(k)),
                      subspace_intersect(image_of(Operator::D, k - 1, all(k - 1)), primitive(k)), *this);
}

CohomologyGroup InvariantComplex::d_lambda_primitive(int k) const
{
    if (k < 0 || k > half_dim()) throw InputError("H_dL cap P is defined for 0 <= k <= n");
    return make_group("dL&P", k, kernel_on(Operator::DLambda, k, primitive(k)),
                      subspace_intersect(image_of(Operator::DLambda, k + 1, all(k + 1)), primitive(k)), *this);
}

bool represents_classes(const InvariantComplex& cx, const CohomologyGroup& g, const std::vector<Form>& forms,
                        std::string* why)
{
    auto fail = [why](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    std::vector<Vector> vectors = g.denominator.basis_vectors();
    for (const Form& f : forms) {
        if (!f.is_homogeneous_of(g.degree)) return fail(format_form(f) + " has the wrong degree");
        Vector v = cx.coordinates(f, g.degree);
        if (!g.numerator.contains(v)) return fail(format_form(f) + " is not a cycle of " + g.label);
        vectors.push_back(std::move(v));
    }
    if (forms.size() != g.dimension())
        return fail("expected " + std::to_string(g.dimension()) + " classes, got " + std::to_string(forms.size()));
    const Subspace spanned = Subspace::span(g.numerator.ambient(), vectors);
    if (!(spanned == g.numerator)) return fail("forms do not span the quotient modulo the denominator");
    return true;
}

long elliptic_index(const InvariantComplex& cx)
{
    const int n = cx.half_dim();
    long index = 0;
    for (int k = 0; k < n; ++k) {
        const long sign = (k % 2 == 0) ? 1 : -1;
        index += sign * static_cast<long>(cx.group(GroupName::PPlus, k).dimension());
        // P^k in the lower row sits at position 2n + 1 - k.
        index -= sign * static_cast<long>(cx.group(GroupName::PMinus, k).dimension());
    }
    const long sign_n = (n % 2 == 0) ? 1 : -1;
    index += sign_n * static_cast<long>(cx.group(GroupName::DDLambda, n).dimension());
    index -= sign_n * static_cast<long>(cx.group(GroupName::DPlusDLambda, n).dimension());
    return index;
}

} // namespace symcoh
