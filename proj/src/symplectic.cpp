#include "symcoh/symplectic.hpp"

#include <algorithm>

namespace symcoh {

Rational factorial(int m)
{
    Rational out = 1;
    for (int i = 2; i <= m; ++i) out *= i;
    return out;
}

SymplecticStructure::SymplecticStructure(Form omega)
    : dim_(omega.dim())
    , omega_(std::move(omega))
{
    if (dim_ % 2 != 0 || dim_ == 0)
        throw NotSymplecticError(NotSymplecticError::Reason::Degenerate, "odd or zero ambient dimension");
    if (!omega_.is_homogeneous_of(2))
        throw NotSymplecticError(NotSymplecticError::Reason::NotTwoForm, "omega must be a homogeneous 2-form");
    const auto n = static_cast<std::size_t>(dim_);
    omega_matrix_ = RationalMatrix(n, n);
    for (const auto& [b, c] : omega_.terms()) {
        const auto idx = b.indices();
        const auto i = static_cast<std::size_t>(idx[0] - 1);
        const auto j = static_cast<std::size_t>(idx[1] - 1);
        omega_matrix_(i, j) = c;
        omega_matrix_(j, i) = -c;
    }
    if (is_zero(determinant(omega_matrix_)))
        throw NotSymplecticError(NotSymplecticError::Reason::Degenerate,
                                 "omega is degenerate (det omega_ij = 0): " + format_form(omega_));
    inverse_ = inverse(omega_matrix_);
}

Form SymplecticStructure::L_power(const Form& a, int r) const
{
    Form out = a;
    for (int i = 0; i < r; ++i) out = L(out);
    return out;
}

Form SymplecticStructure::Lambda(const Form& a) const
{
    Form out(dim_);
    const Rational half(1, 2);
    for (int i = 1; i <= dim_; ++i) {
        for (int j = 1; j <= dim_; ++j) {
            const Rational& w = inverse_(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
            if (is_zero(w)) continue;
            out += contract(i, contract(j, a)) * Rational(half * w);
        }
    }
    return out;
}

Form SymplecticStructure::H(const Form& a) const
{
    Form out(dim_);
    const int n = half_dim();
    for (const auto& [b, c] : a.terms()) out.add_term(b, c * (n - b.degree()));
    return out;
}

Form SymplecticStructure::R(const Form& a) const
{
    return apply_bigraded(a, [](int r, int) { return Rational(r); });
}

Form SymplecticStructure::volume() const
{
    return wedge_power(omega_, half_dim()) * Rational(1 / factorial(half_dim()));
}

Rational lefschetz_coefficient(int n, int k, int r, int l)
{
    const int base = n - k + 2 * r + 1;
    Rational out = Rational(base) * base;
    for (int i = 0; i <= r; ++i) out /= base - i;
    for (int j = 0; j <= l; ++j) out /= base + j;
    return (l % 2 == 0) ? out : Rational(-out);
}

LefschetzComponents SymplecticStructure::lefschetz_decompose(const Form& a, int k) const
{
    if (a.dim() != dim_) throw InputError("lefschetz_decompose: ambient dimension mismatch");
    if (!a.is_homogeneous_of(k)) throw InputError("lefschetz_decompose: input is not homogeneous of degree " + std::to_string(k));
    const int n = half_dim();
    LefschetzComponents out{k, {}};
    if (a.is_zero()) return out;

    std::vector<Form> lambda_powers{a};
    for (int m = 1; m <= k / 2; ++m) lambda_powers.push_back(Lambda(lambda_powers.back()));

    for (int r = std::max(k - n, 0); 2 * r <= k; ++r) {
        Form b(dim_);
        for (int l = 0; r + l <= k / 2; ++l) {
            const Form& lam = lambda_powers[static_cast<std::size_t>(r + l)];
            if (lam.is_zero()) continue;
            b += L_power(lam, l) * Rational(lefschetz_coefficient(n, k, r, l) / factorial(l));
        }
        if (!b.is_zero()) out.primitive_by_power.emplace(r, std::move(b));
    }
    return out;
}

std::vector<LefschetzPiece> SymplecticStructure::bigraded_decompose(const Form& a) const
{
    std::vector<LefschetzPiece> out;
    for (int k = 0; k <= dim_; ++k) {
        const Form part = grade_project(a, k);
        if (part.is_zero()) continue;
        for (auto& [r, b] : lefschetz_decompose(part, k).primitive_by_power) out.push_back({r, k - 2 * r, b});
    }
    return out;
}

Form SymplecticStructure::lefschetz_piece(const LefschetzPiece& piece) const
{
    return L_power(piece.primitive, piece.r) * Rational(1 / factorial(piece.r));
}

Form SymplecticStructure::reassemble(const std::vector<LefschetzPiece>& pieces) const
{
    Form out(dim_);
    for (const LefschetzPiece& p : pieces) out += lefschetz_piece(p);
    return out;
}

Form SymplecticStructure::apply_bigraded(const Form& a, const BigradedScalar& f) const
{
    Form out(dim_);
    for (const LefschetzPiece& p : bigraded_decompose(a)) {
        const Rational scale = f(p.r, p.s);
        if (is_zero(scale)) continue;
        out += lefschetz_piece(p) * scale;
    }
    return out;
}

bool SymplecticStructure::is_primitive(const Form& a) const { return Lambda(a).is_zero(); }

bool SymplecticStructure::is_primitive_by_power(const Form& a) const
{
    if (a.is_zero()) return true;
    const auto s = a.degree();
    if (!s) throw InputError("is_primitive_by_power: input must be homogeneous");
    if (*s > half_dim()) return false;
    return L_power(a, half_dim() - *s + 1).is_zero();
}

std::vector<Form> SymplecticStructure::primitive_basis(int k) const
{
    if (k < 0 || k > half_dim()) throw InputError("primitive_basis: degree out of range 0..n");
    const std::vector<Blade> domain = blades_of_degree(dim_, k);
    const std::vector<Blade> target = blades_of_degree(dim_, k - 2);
    RationalMatrix m(target.size(), domain.size());
    for (std::size_t c = 0; c < domain.size(); ++c) {
        const Form image = Lambda(Form::monomial(dim_, domain[c]));
        for (std::size_t r = 0; r < target.size(); ++r) m(r, c) = image.coefficient(target[r]);
    }
    const Subspace ker = kernel(m);
    std::vector<Form> out;
    for (std::size_t i = 0; i < ker.dim(); ++i) {
        Form f(dim_);
        for (std::size_t c = 0; c < domain.size(); ++c) f.add_term(domain[c], ker.basis()(i, c));
        out.push_back(std::move(f));
    }
    return out;
}

Form SymplecticStructure::symplectic_star(const Form& a) const
{
    const int n = half_dim();
    Form out(dim_);
    for (const LefschetzPiece& p : bigraded_decompose(a)) {
        const int t = n - p.r - p.s;
        const int sign = ((p.s * (p.s + 1) / 2) % 2 == 0) ? 1 : -1;
        out += L_power(p.primitive, t) * Rational(Rational(sign) / factorial(t));
    }
    return out;
}

Rational SymplecticStructure::inverse_pairing(const Form& a, const Form& b) const
{
    Rational out = 0;
    for (const auto& [ba, ca] : a.terms()) {
        for (const auto& [bb, cb] : b.terms()) {
            if (ba.degree() != bb.degree()) continue;
            const auto ia = ba.indices();
            const auto ib = bb.indices();
            RationalMatrix minor(ia.size(), ib.size());
            for (std::size_t x = 0; x < ia.size(); ++x)
                for (std::size_t y = 0; y < ib.size(); ++y)
                    minor(x, y) = inverse_(static_cast<std::size_t>(ia[x] - 1), static_cast<std::size_t>(ib[y] - 1));
            out += ca * cb * (ia.empty() ? Rational(1) : determinant(minor));
        }
    }
    return out;
}

Form standard_omega(int n)
{
    Form omega(2 * n);
    for (int j = 1; j <= n; ++j) omega += wedge(Form::generator(2 * n, 2 * j - 1), Form::generator(2 * n, 2 * j));
    return omega;
}

namespace {

// Primitive basis of degree k on the span of e_{2p-1}, ..., e_{2n}, standard form.
std::vector<Form> recursive_basis_from_pair(int n, int p, int k)
{
    const int dim = 2 * n;
    const int pairs = n - p + 1;
    if (k < 0 || k > pairs) return {};
    if (pairs == 0) return k == 0 ? std::vector<Form>{Form::constant(dim, 1)} : std::vector<Form>{};

    const Form e_odd = Form::generator(dim, 2 * p - 1);
    const Form e_even = Form::generator(dim, 2 * p);
    Form rest_omega(dim);
    for (int j = p + 1; j <= n; ++j) rest_omega += wedge(Form::generator(dim, 2 * j - 1), Form::generator(dim, 2 * j));
    // (H + 1)^{-1} on a degree-k form of this 2*pairs-dimensional block.
    const Rational shift(1, pairs - k + 1);
    const Form twisted = wedge(e_odd, e_even) - rest_omega * shift;

    std::vector<Form> out;
    for (const Form& b : recursive_basis_from_pair(n, p + 1, k - 1)) out.push_back(wedge(e_odd, b));
    for (const Form& b : recursive_basis_from_pair(n, p + 1, k - 1)) out.push_back(wedge(e_even, b));
    for (const Form& b : recursive_basis_from_pair(n, p + 1, k - 2)) out.push_back(wedge(twisted, b));
    for (const Form& b : recursive_basis_from_pair(n, p + 1, k)) out.push_back(b);
    return out;
}

} // namespace

std::vector<Form> recursive_primitive_basis(int n, int k)
{
    if (n < 1 || 2 * n > kMaxDimension) throw InputError("recursive_primitive_basis: n out of range");
    if (k < 0 || k > n) throw InputError("recursive_primitive_basis: degree out of range 0..n");
    return recursive_basis_from_pair(n, 1, k);
}

} // namespace symcoh
