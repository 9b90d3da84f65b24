#include "symcoh/hodge.hpp"

#include <algorithm>
#include <numeric>

namespace symcoh {

namespace {

Rational pair_omega(const RationalMatrix& omega, const Vector& x, const Vector& y)
{
    Rational out = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (is_zero(x[i])) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (!is_zero(y[j])) out += x[i] * omega(i, j) * y[j];
    }
    return out;
}

RationalMatrix standard_complex_structure(std::size_t dim)
{
    RationalMatrix j0(dim, dim);
    for (std::size_t i = 0; i + 1 < dim; i += 2) {
        j0(i + 1, i) = 1;   // f_{2i-1} -> f_{2i}
        j0(i, i + 1) = -1;  // f_{2i} -> -f_{2i-1}
    }
    return j0;
}

bool positive_leading_minors(const RationalMatrix& m)
{
    for (std::size_t size = 1; size <= m.rows(); ++size) {
        RationalMatrix lead(size, size);
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j) lead(i, j) = m(i, j);
        if (sgn(determinant(lead)) <= 0) return false;
    }
    return true;
}

RationalMatrix basis_columns(const Subspace& s)
{
    return s.basis().transpose();
}

// Vectors of the ambient space spanned by `domain` that m sends to zero.
Subspace kernel_within(const RationalMatrix& m, const Subspace& domain)
{
    const RationalMatrix e = basis_columns(domain);
    const Subspace k = kernel(m * e);
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < k.dim(); ++i) vs.push_back(e.apply(k.basis_vector(i)));
    return Subspace::span(domain.ambient(), vs);
}

Subspace image_within(const RationalMatrix& m, const Subspace& domain)
{
    if (domain.dim() == 0) return Subspace(m.rows());
    return image(m * basis_columns(domain));
}

template <class S>
Matrix<S> sub_matrix(const Matrix<S>& m, const std::vector<int>& rows, const std::vector<int>& cols)
{
    Matrix<S> out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out(i, j) = m(static_cast<std::size_t>(rows[i] - 1), static_cast<std::size_t>(cols[j] - 1));
    return out;
}

GaussianMatrix gaussian_identity(std::size_t n) { return GaussianMatrix::identity(n); }

std::string degree_tag(int k) { return " k=" + std::to_string(k); }

} // namespace

CompatibleTriple build_triple(const SymplecticStructure& s, const std::vector<int>& pivot_order)
{
    const std::size_t dim = static_cast<std::size_t>(s.dim());
    std::vector<int> order = pivot_order;
    if (order.empty()) {
        order.resize(dim);
        std::iota(order.begin(), order.end(), 1);
    }
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expected(dim);
    std::iota(expected.begin(), expected.end(), 1);
    if (sorted != expected) throw InputError("pivot order must be a permutation of 1..2n");

    RationalMatrix start(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) start(static_cast<std::size_t>(order[j] - 1), j) = 1;
    return build_triple(s, start);
}

CompatibleTriple build_triple(const SymplecticStructure& s, const RationalMatrix& start)
{
    const std::size_t dim = static_cast<std::size_t>(s.dim());
    if (start.rows() != dim || start.cols() != dim || rank(start) != dim)
        throw InputError("starting basis must be an invertible 2n x 2n matrix");

    CompatibleTriple t;
    t.omega = s.omega_matrix();

    std::vector<Vector> remaining;
    for (std::size_t j = 0; j < dim; ++j) remaining.push_back(start.column(j));

    t.frame = RationalMatrix(dim, dim);
    std::size_t column = 0;
    while (!remaining.empty()) {
        Vector u = remaining.front();
        std::size_t partner = 0;
        Rational pairing = 0;
        for (std::size_t j = 1; j < remaining.size(); ++j) {
            pairing = pair_omega(t.omega, u, remaining[j]);
            if (!is_zero(pairing)) {
                partner = j;
                break;
            }
        }
        if (partner == 0) throw NotSymplecticError(NotSymplecticError::Reason::Degenerate, "no Darboux partner");
        Vector w = remaining[partner];
        for (Rational& x : w) x /= pairing;

        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(partner));
        remaining.erase(remaining.begin());
        for (Vector& v : remaining) {
            const Rational vw = pair_omega(t.omega, v, w);
            const Rational vu = pair_omega(t.omega, v, u);
            for (std::size_t i = 0; i < dim; ++i) v[i] = v[i] - vw * u[i] + vu * w[i];
        }
        t.frame.set_column(column++, u);
        t.frame.set_column(column++, w);
    }

    t.coframe = inverse(t.frame);
    t.J = t.frame * standard_complex_structure(dim) * t.coframe;
    t.metric = t.omega * t.J;
    t.dual_metric = t.frame * t.frame.transpose();
    return t;
}

CheckReport check_triple(const CompatibleTriple& t)
{
    CheckReport r;
    r.suite = "hodge";
    const std::size_t dim = t.J.rows();
    const RationalMatrix id = RationalMatrix::identity(dim);
    r.add("J^2 = -1", t.J * t.J == id * Rational(-1));
    r.add("g symmetric", t.metric == t.metric.transpose());
    r.add("g positive definite", positive_leading_minors(t.metric));
    r.add("omega(Jx, Jy) = omega(x, y)", t.J.transpose() * t.omega * t.J == t.omega);
    r.add("dual metric inverts g", t.metric * t.dual_metric == id);

    RationalMatrix standard(dim, dim);
    for (std::size_t i = 0; i + 1 < dim; i += 2) {
        standard(i, i + 1) = 1;
        standard(i + 1, i) = -1;
    }
    r.add("frame is Darboux", t.frame.transpose() * t.omega * t.frame == standard);
    return r;
}

HodgeStructure::HodgeStructure(const InvariantComplex& cx, CompatibleTriple triple)
    : cx_(cx), triple_(std::move(triple))
{
    const int dim = cx_.dim();
    volume_integral_ = cx_.structure().volume().coefficient(Blade((1U << dim) - 1));

    // J acting on a 1-form: (J alpha)(v) = alpha(J v), coefficients J^T a.
    const GaussianRational half(Rational(1, 2));
    for (int i = 1; i <= dim; ++i) {
        GaussianForm e = GaussianForm::generator(dim, i);
        GaussianForm je(dim);
        for (int m = 1; m <= dim; ++m)
            je.add_term(Blade::generator(m),
                        GaussianRational(triple_.J(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(m - 1))));
        type_10_.push_back((e - je * GaussianRational::i()) * half);
        type_01_.push_back((e + je * GaussianRational::i()) * half);
    }

    for (int k = 0; k <= dim; ++k) {
        const auto& blades = cx_.blades(k);
        RationalMatrix g(blades.size(), blades.size());
        for (std::size_t a = 0; a < blades.size(); ++a) {
            const Form ea = Form::monomial(dim, blades[a]);
            for (std::size_t b = 0; b < blades.size(); ++b) g(a, b) = inner(ea, Form::monomial(dim, blades[b]));
        }
        gram_inverse_.push_back(inverse(g));
        gram_.push_back(std::move(g));
    }
}

GaussianForm HodgeStructure::jay_complex(const GaussianForm& a, bool inverse) const
{
    const int dim = cx_.dim();
    GaussianForm out(dim);
    for (const auto& [blade, c] : a.terms()) {
        const auto idx = blade.indices();
        const int k = static_cast<int>(idx.size());
        // Pi^{p,q} of the blade, collected by p.
        std::vector<GaussianForm> by_type(static_cast<std::size_t>(k) + 1, GaussianForm(dim));
        for (std::uint32_t choice = 0; choice < (1U << k); ++choice) {
            GaussianForm term = GaussianForm::constant(dim, GaussianRational(1));
            for (int j = 0; j < k; ++j) {
                const bool holomorphic = (choice >> j) & 1U;
                const auto& factor = holomorphic ? type_10_ : type_01_;
                term = wedge(term, factor[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)] - 1)]);
            }
            by_type[static_cast<std::size_t>(std::popcount(choice))] += term;
        }
        for (int p = 0; p <= k; ++p) {
            const int exponent = inverse ? (k - p) - p : p - (k - p);
            out += by_type[static_cast<std::size_t>(p)] * (i_power(exponent) * c);
        }
    }
    return out;
}

Form HodgeStructure::jay(const Form& a) const { return real_part_checked(jay_complex(to_gaussian(a))); }

Form HodgeStructure::jay_inverse(const Form& a) const
{
    return real_part_checked(jay_complex(to_gaussian(a), true));
}

Form HodgeStructure::jay_blade(Blade b) const
{
    const int dim = cx_.dim();
    Form out = Form::constant(dim, Rational(1));
    for (int i : b.indices()) {
        Form je(dim);
        for (int m = 1; m <= dim; ++m)
            je.add_term(Blade::generator(m), triple_.J(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(m - 1)));
        out = wedge(out, je);
    }
    return out;
}

Form HodgeStructure::jay_induced(const Form& a) const
{
    Form out(a.dim());
    for (const auto& [b, c] : a.terms()) out += jay_blade(b) * c;
    return out;
}

Form HodgeStructure::hodge_star(const Form& a) const { return jay(cx_.structure().symplectic_star(a)); }

Form HodgeStructure::hodge_star_metric(const Form& a) const
{
    const int dim = cx_.dim();
    const Blade top((1U << dim) - 1);
    Form out(dim);
    for (int k = 0; k <= dim; ++k) {
        const Form piece = grade_project(a, k);
        if (piece.is_zero()) continue;
        const RationalMatrix g = gram_from_minors(k);
        const auto& blades = cx_.blades(k);
        const Vector coords = cx_.coordinates(piece, k);
        const Vector paired = g.apply(coords);
        for (std::size_t i = 0; i < blades.size(); ++i) {
            if (is_zero(paired[i])) continue;
            const Blade complement(top.mask() & ~blades[i].mask());
            out.add_term(complement, paired[i] * volume_integral_ * wedge_sign(blades[i], complement));
        }
    }
    return out;
}

Rational HodgeStructure::integrate(const Form& a) const
{
    return a.coefficient(Blade((1U << cx_.dim()) - 1)) / volume_integral_;
}

Rational HodgeStructure::inner(const Form& a, const Form& b) const { return integrate(wedge(a, hodge_star(b))); }

const RationalMatrix& HodgeStructure::gram(int k) const { return gram_.at(static_cast<std::size_t>(k)); }

RationalMatrix HodgeStructure::gram_from_minors(int k) const
{
    const auto& blades = cx_.blades(k);
    RationalMatrix g(blades.size(), blades.size());
    for (std::size_t a = 0; a < blades.size(); ++a)
        for (std::size_t b = 0; b < blades.size(); ++b) {
            if (k == 0) {
                g(a, b) = 1;
                continue;
            }
            g(a, b) = determinant(sub_matrix(triple_.dual_metric, blades[a].indices(), blades[b].indices()));
        }
    return g;
}

RationalMatrix HodgeStructure::jay_matrix(int k) const
{
    const auto& blades = cx_.blades(k);
    RationalMatrix m(blades.size(), blades.size());
    for (std::size_t c = 0; c < blades.size(); ++c)
        m.set_column(c, cx_.coordinates(jay(Form::monomial(cx_.dim(), blades[c])), k));
    return m;
}

GaussianMatrix HodgeStructure::jay_matrix_complex(int k) const
{
    const auto& blades = cx_.blades(k);
    GaussianMatrix m(blades.size(), blades.size());
    for (std::size_t c = 0; c < blades.size(); ++c) {
        const GaussianForm image = jay_complex(GaussianForm::monomial(cx_.dim(), blades[c]));
        for (std::size_t r = 0; r < blades.size(); ++r) m(r, c) = image.coefficient(blades[r]);
    }
    return m;
}

RationalMatrix HodgeStructure::bigraded_matrix(int k, const BigradedScalar& f) const
{
    const auto& blades = cx_.blades(k);
    RationalMatrix m(blades.size(), blades.size());
    for (std::size_t c = 0; c < blades.size(); ++c)
        m.set_column(c, cx_.coordinates(cx_.structure().apply_bigraded(Form::monomial(cx_.dim(), blades[c]), f), k));
    return m;
}

RationalMatrix HodgeStructure::adjoint(const RationalMatrix& m, int from, int to) const
{
    return gram_inverse_.at(static_cast<std::size_t>(from)) * m.transpose() * gram(to);
}

RationalMatrix HodgeStructure::del_adjoint(Side side, int k) const
{
    const Operator op = side == Side::Plus ? Operator::DelPlus : Operator::DelMinus;
    return adjoint(cx_.matrix(op, k), k, k + degree_shift(op));
}

Subspace HodgeStructure::harmonic_space(int k, Side side) const
{
    const std::size_t amb = cx_.ambient(k);
    RationalMatrix laplacian(amb, amb);
    const Operator op = side == Side::Plus ? Operator::DelPlus : Operator::DelMinus;
    const int shift = degree_shift(op);
    // del del^* through the neighbour on the incoming side, del^* del on the outgoing side.
    const int before = k - shift;
    if (before >= 0 && before <= cx_.half_dim()) laplacian += cx_.matrix(op, before) * del_adjoint(side, before);
    const int after = k + shift;
    if (after >= 0 && after <= cx_.half_dim()) laplacian += del_adjoint(side, k) * cx_.matrix(op, k);
    return kernel_within(laplacian, cx_.primitive(k));
}

Subspace HodgeStructure::harmonic_by_kernels(int k, Side side) const
{
    const Operator op = side == Side::Plus ? Operator::DelPlus : Operator::DelMinus;
    const int before = k - degree_shift(op);
    Subspace closed = kernel_within(cx_.matrix(op, k), cx_.primitive(k));
    if (before < 0 || before > cx_.half_dim()) return closed;
    return kernel_within(del_adjoint(side, before), closed);
}

Subspace HodgeStructure::exact_part(int k, Side side) const
{
    const Operator op = side == Side::Plus ? Operator::DelPlus : Operator::DelMinus;
    const int before = k - degree_shift(op);
    if (before < 0 || before > cx_.half_dim()) return Subspace(cx_.ambient(k));
    return image_within(cx_.matrix(op, before), cx_.primitive(before));
}

Subspace HodgeStructure::coexact_part(int k, Side side) const
{
    const Operator op = side == Side::Plus ? Operator::DelPlus : Operator::DelMinus;
    const int after = k + degree_shift(op);
    if (after < 0 || after > cx_.half_dim()) return Subspace(cx_.ambient(k));
    return image_within(del_adjoint(side, k), cx_.primitive(after));
}

bool HodgeStructure::orthogonal(const Subspace& a, const Subspace& b, int k) const
{
    if (a.dim() == 0 || b.dim() == 0) return true;
    return (a.basis() * gram(k) * b.basis().transpose()).is_zero();
}

RationalMatrix pairing_matrix(const InvariantComplex& cx, int k)
{
    const int n = cx.half_dim();
    const auto& s = cx.structure();
    const auto plus = cx.group(GroupName::PPlus, k).representatives;
    const auto minus = cx.group(GroupName::PMinus, k).representatives;
    RationalMatrix m(plus.size(), minus.size());
    const Form weight = s.L_power(Form::constant(cx.dim(), Rational(1)), n - k) * Rational(1 / factorial(n - k));
    for (std::size_t a = 0; a < plus.size(); ++a) {
        const Form left = wedge(weight, plus[a]);
        for (std::size_t b = 0; b < minus.size(); ++b)
            m(a, b) = cx.operators().algebra().integrate(wedge(left, minus[b]));
    }
    return m;
}

CheckReport check_hodge_decomposition(const HodgeStructure& h, int k, Side side)
{
    CheckReport r;
    r.suite = "hodge";
    const InvariantComplex& cx = h.complex();
    const std::string tag = std::string(side == Side::Plus ? "del+" : "del-") + degree_tag(k);

    const Subspace harmonic = h.harmonic_space(k, side);
    const Subspace by_kernels = h.harmonic_by_kernels(k, side);
    r.add(tag + " ker Laplacian = ker del cap ker del^*", harmonic == by_kernels,
          std::to_string(harmonic.dim()) + " vs " + std::to_string(by_kernels.dim()));

    const auto group = cx.group(side == Side::Plus ? GroupName::PPlus : GroupName::PMinus, k);
    r.add(tag + " harmonic dimension = cohomology dimension", harmonic.dim() == group.dimension(),
          std::to_string(harmonic.dim()) + " vs " + std::to_string(group.dimension()));

    const Subspace exact = h.exact_part(k, side);
    const Subspace coexact = h.coexact_part(k, side);
    const Subspace& prim = cx.primitive(k);
    r.add(tag + " summands lie in P^k", prim.contains(harmonic) && prim.contains(exact) && prim.contains(coexact));
    r.add(tag + " harmonic orthogonal to exact", h.orthogonal(harmonic, exact, k));
    r.add(tag + " harmonic orthogonal to coexact", h.orthogonal(harmonic, coexact, k));
    r.add(tag + " exact orthogonal to coexact", h.orthogonal(exact, coexact, k));
    const std::size_t total = harmonic.dim() + exact.dim() + coexact.dim();
    r.add(tag + " dimensions sum to dim P^k", total == prim.dim(),
          std::to_string(total) + " vs " + std::to_string(prim.dim()));
    return r;
}

CheckReport check_jay_conjugation(const HodgeStructure& h, int k)
{
    CheckReport r;
    r.suite = "hodge";
    const InvariantComplex& cx = h.complex();
    const std::string tag = degree_tag(k);
    const int n = cx.half_dim();
    const SymplecticStructure& s = cx.structure();

    const BigradedScalar h_plus_r = [n](int rr, int ss) { return Rational(n - rr - ss); };
    const GaussianMatrix jk = h.jay_matrix_complex(k);
    const GaussianMatrix jk1 = h.jay_matrix_complex(k + 1);

    // J del+ = del-^* (H+R) J on degree k.
    const GaussianMatrix lhs1 = jk1 * to_gaussian(cx.matrix(Operator::DelPlus, k));
    const GaussianMatrix rhs1 =
        to_gaussian(h.del_adjoint(Side::Minus, k + 1) * h.bigraded_matrix(k, h_plus_r)) * jk;
    r.add("J del+ J^-1 = del-^* (H+R)" + tag, lhs1 == rhs1);

    // J del+^* = (H+R) del- J on degree k + 1.
    const GaussianMatrix lhs2 = jk * to_gaussian(h.del_adjoint(Side::Plus, k));
    const GaussianMatrix rhs2 = to_gaussian(h.bigraded_matrix(k, h_plus_r) * cx.matrix(Operator::DelMinus, k + 1)) * jk1;
    r.add("J del+^* J^-1 = (H+R) del-" + tag, lhs2 == rhs2);

    if (k < n) {
        const RationalMatrix j = h.jay_matrix(k);
        const Subspace plus = h.harmonic_space(k, Side::Plus);
        std::vector<Vector> images;
        for (std::size_t i = 0; i < plus.dim(); ++i) images.push_back(j.apply(plus.basis_vector(i)));
        const Subspace mapped = Subspace::span(cx.ambient(k), images);
        r.add("J maps del+ harmonic onto del- harmonic" + tag,
              mapped == h.harmonic_space(k, Side::Minus) && mapped.dim() == plus.dim());

        bool preserves = true;
        for (const Form& b : cx.forms_of(k, cx.primitive(k))) preserves = preserves && s.is_primitive(h.jay(b));
        r.add("J preserves primitivity" + tag, preserves);
    }
    return r;
}

namespace {

CheckReport check_forms_and_operators(const HodgeStructure& h)
{
    CheckReport r;
    r.suite = "hodge";
    const InvariantComplex& cx = h.complex();
    const SymplecticStructure& s = cx.structure();
    const int dim = cx.dim();
    const int n = cx.half_dim();

    r.add("J(1) = 1", h.jay(Form::constant(dim, Rational(1))) == Form::constant(dim, Rational(1)));
    r.add("J(omega) = omega", h.jay(s.omega()) == s.omega());
    r.add("*1 = vol", h.hodge_star(Form::constant(dim, Rational(1))) == s.volume());

    for (int k = 0; k <= dim; ++k) {
        const std::string tag = degree_tag(k);
        const GaussianMatrix jc = h.jay_matrix_complex(k);
        const RationalMatrix j = h.jay_matrix(k);
        const std::size_t size = cx.ambient(k);

        std::string first;
        bool induced = true, square = true, inverts = true, stars = true, involution = true;
        const Rational sign_sq = k % 2 == 0 ? 1 : -1;
        const Rational sign_star = (k * (dim - k)) % 2 == 0 ? 1 : -1;
        for (const Blade& b : cx.blades(k)) {
            const Form e = Form::monomial(dim, b);
            const Form je = h.jay(e);
            if (je != h.jay_induced(e)) {
                induced = false;
                if (first.empty()) first = format_form(e);
            }
            if (h.jay(je) != e * sign_sq) square = false;
            if (h.jay_inverse(je) != e) inverts = false;
            if (h.hodge_star(e) != h.hodge_star_metric(e)) {
                stars = false;
                if (first.empty()) first = format_form(e);
            }
            if (h.hodge_star(h.hodge_star(e)) != e * sign_star) involution = false;
        }
        r.add("J over Q(i) = induced action of J" + tag, induced, first);
        r.add("J^2 = (-1)^k" + tag, square);
        r.add("J^-1 J = 1" + tag, inverts);
        r.add("J-cal *_s = metric Hodge star" + tag, stars, first);
        r.add("** = (-1)^{k(2n-k)}" + tag, involution);

        GaussianMatrix inverse_c(size, size);
        for (std::size_t c = 0; c < size; ++c) {
            const auto& blades = cx.blades(k);
            const GaussianForm image = h.jay_complex(GaussianForm::monomial(dim, blades[c]), true);
            for (std::size_t a = 0; a < size; ++a) inverse_c(a, c) = image.coefficient(blades[a]);
        }
        r.add("sum i^{q-p} Pi^{p,q} inverts J-cal" + tag, jc * inverse_c == gaussian_identity(size));
        r.add("J-cal real on real forms" + tag, to_gaussian(j) == jc);

        const RationalMatrix& g = h.gram(k);
        r.add("Gram symmetric" + tag, g == g.transpose());
        r.add("Gram positive definite" + tag, positive_leading_minors(g));
        r.add("Gram = minors of the dual metric" + tag, g == h.gram_from_minors(k));
    }

    const BigradedScalar h_2r_1_inv = [n](int, int ss) { return Rational(1, n - ss + 1); };
    const BigradedScalar h_r_1 = [n](int rr, int ss) { return Rational(n - rr - ss + 1); };
    const BigradedScalar h_r_1_inv = [n](int rr, int ss) { return Rational(1, n - rr - ss + 1); };
    for (int k = 0; k < dim; ++k) {
        const std::string tag = degree_tag(k);
        const RationalMatrix d_adj = h.adjoint(cx.matrix(Operator::D, k), k, k + 1);
        RationalMatrix lhs = d_adj * h.bigraded_matrix(k + 1, h_r_1);
        if (k >= 1) lhs += h.adjoint(cx.matrix(Operator::DLambda, k), k, k - 1) * cx.matrix(Operator::Lambda, k + 1);
        lhs = lhs * h.bigraded_matrix(k + 1, h_2r_1_inv);
        r.add("del+^* = [d^*(H+R+1) + dL^* Lambda]/(H+2R+1)" + tag, lhs == h.del_adjoint(Side::Plus, k));

        // del-^* from degree k to k + 1.
        RationalMatrix rhs = h.adjoint(cx.matrix(Operator::DLambda, k + 1), k + 1, k);
        if (k + 2 <= dim)
            rhs -= h.adjoint(cx.matrix(Operator::D, k + 1), k + 1, k + 2) * h.bigraded_matrix(k + 2, h_r_1_inv) *
                   cx.matrix(Operator::L, k);
        rhs = rhs * h.bigraded_matrix(k, h_2r_1_inv) * Rational(-1);
        // Like the closed formula for del- itself, this one says nothing about
        // the pieces with r + s = n, so compare after discarding them.
        const RationalMatrix below_top = h.bigraded_matrix(k + 1, [n](int rr, int ss) { return Rational(rr + ss < n ? 1 : 0); });
        r.add("del-^* = -[dL^* - d^* L/(H+R+1)]/(H+2R+1) off r+s=n" + tag,
              below_top * rhs == below_top * h.del_adjoint(Side::Minus, k + 1));
    }
    return r;
}

} // namespace

CompatibleTriple alternate_triple(const SymplecticStructure& s)
{
    const std::size_t dim = static_cast<std::size_t>(s.dim());
    RationalMatrix start(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        start(dim - 1 - j, j) = 1;
        if (j + 1 < dim) start(dim - 2 - j, j) = 1;
    }
    return build_triple(s, start);
}

CheckReport run_hodge_suite(const InvariantComplex& cx)
{
    CheckReport r;
    r.suite = "hodge";
    const int n = cx.half_dim();
    const int dim = cx.dim();

    CompatibleTriple first = build_triple(cx.structure());
    r.merge(check_triple(first), "triple: ");
    const HodgeStructure h(cx, first);
    r.merge(check_forms_and_operators(h));

    for (int k = 0; k < n; ++k) {
        r.merge(check_hodge_decomposition(h, k, Side::Plus));
        r.merge(check_hodge_decomposition(h, k, Side::Minus));
    }
    for (int k = 0; k < dim; ++k) r.merge(check_jay_conjugation(h, k));

    for (int k = 0; k < n; ++k) {
        const RationalMatrix p = pairing_matrix(cx, k);
        r.add("pairing PH+ x PH- non-degenerate" + degree_tag(k), p.rows() == p.cols() && rank(p) == p.rows(),
              std::to_string(p.rows()) + "x" + std::to_string(p.cols()) + " rank " + std::to_string(rank(p)));
    }

    CompatibleTriple second = alternate_triple(cx.structure());
    r.merge(check_triple(second), "second triple: ");
    r.add("second triple has a different metric", second.metric != first.metric);
    const HodgeStructure h2(cx, second);
    for (int k = 0; k < n; ++k)
        for (Side side : {Side::Plus, Side::Minus}) {
            const std::size_t a = h.harmonic_space(k, side).dim();
            const std::size_t b = h2.harmonic_space(k, side).dim();
            r.add(std::string("harmonic dimension metric independent ") + (side == Side::Plus ? "del+" : "del-") +
                      degree_tag(k),
                  a == b, std::to_string(a) + " vs " + std::to_string(b));
        }

    const long index = elliptic_index(cx);
    r.add("elliptic complex index = 0", index == 0, "index " + std::to_string(index));
    return r;
}

} // namespace symcoh
