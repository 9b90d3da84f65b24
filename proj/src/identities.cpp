#include "symcoh/identities.hpp"

namespace symcoh {

RationalMatrix bigraded_scalar_matrix(const InvariantComplex& cx, int k, const BigradedScalar& f)
{
    const auto& blades = cx.blades(k);
    RationalMatrix m(blades.size(), blades.size());
    for (std::size_t c = 0; c < blades.size(); ++c)
        m.set_column(c, cx.coordinates(cx.structure().apply_bigraded(Form::monomial(cx.dim(), blades[c]), f), k));
    return m;
}

namespace {

class IdentityRunner {
public:
    explicit IdentityRunner(const InvariantComplex& cx) : cx_(cx), n_(cx.half_dim()), dim_(cx.dim())
    {
        report_.suite = "identities";
    }

    CheckReport run()
    {
        for (int k = 0; k <= dim_; ++k) {
            sl2(k);
            lefschetz_commutators(k);
            del_properties(k);
            d_lambda_decompositions(k);
            stars(k);
            two_routes(k);
            decomposition(k);
        }
        for (int k = 0; k <= n_; ++k) primitive_formulas(k);
        return std::move(report_);
    }

private:
    std::size_t amb(int k) const { return k < 0 || k > dim_ ? 0 : cx_.ambient(k); }

    // Operator matrix from degree k; empty shapes outside the complex.
    RationalMatrix op(Operator o, int k) const
    {
        const int to = k + degree_shift(o);
        if (k < 0 || k > dim_ || to < 0 || to > dim_) return RationalMatrix(amb(to), amb(k));
        return cx_.matrix(o, k);
    }

    RationalMatrix scalar(int k, const BigradedScalar& f) const
    {
        if (k < 0 || k > dim_) return RationalMatrix(0, 0);
        return bigraded_scalar_matrix(cx_, k, f);
    }

    RationalMatrix h(int k) const { return RationalMatrix::identity(amb(k)) * Rational(n_ - k); }
    RationalMatrix id(int k) const { return RationalMatrix::identity(amb(k)); }

    RationalMatrix l_power(int k, int r) const
    {
        RationalMatrix m = id(k);
        for (int i = 0; i < r; ++i) m = op(Operator::L, k + 2 * i) * m;
        return m;
    }

    RationalMatrix matrix_of(int from, int to, const std::function<Form(const Form&)>& f) const
    {
        RationalMatrix m(amb(to), amb(from));
        if (from < 0 || from > dim_) return m;
        const auto& blades = cx_.blades(from);
        for (std::size_t c = 0; c < blades.size(); ++c) {
            const Form image = f(Form::monomial(dim_, blades[c]));
            if (to >= 0 && to <= dim_) m.set_column(c, cx_.coordinates(image, to));
        }
        return m;
    }

    Form column_form(const RationalMatrix& m, std::size_t c, int degree) const
    {
        Form f(dim_);
        if (degree < 0 || degree > dim_) return f;
        const auto& blades = cx_.blades(degree);
        for (std::size_t r = 0; r < m.rows(); ++r) f.add_term(blades[r], m(r, c));
        return f;
    }

    // lhs, rhs map degree `from` to degree `to`; columns follow `domain` if given.
    void equal(const std::string& name, int from, int to, const RationalMatrix& lhs, const RationalMatrix& rhs,
               const std::vector<Form>* domain = nullptr)
    {
        std::string detail;
        bool ok = lhs.rows() == rhs.rows() && lhs.cols() == rhs.cols();
        if (!ok) detail = "shape mismatch";
        for (std::size_t c = 0; ok && c < lhs.cols(); ++c) {
            for (std::size_t r = 0; r < lhs.rows(); ++r) {
                if (lhs(r, c) == rhs(r, c)) continue;
                ok = false;
                const Form input = domain ? (*domain)[c] : Form::monomial(dim_, cx_.blades(from)[c]);
                detail = "on " + format_form(input) + ": lhs " + format_form(column_form(lhs, c, to)) + ", rhs " +
                         format_form(column_form(rhs, c, to));
                break;
            }
        }
        report_.add(name + " k=" + std::to_string(from), ok, detail);
    }

    void zero(const std::string& name, int from, int to, const RationalMatrix& m)
    {
        equal(name, from, to, m, RationalMatrix(m.rows(), m.cols()));
    }

    void sl2(int k)
    {
        const auto L = [&](int j) { return op(Operator::L, j); };
        const auto Lam = [&](int j) { return op(Operator::Lambda, j); };
        equal("[Lambda, L] = H", k, k, Lam(k + 2) * L(k) - L(k - 2) * Lam(k), h(k));
        equal("[H, Lambda] = 2 Lambda", k, k - 2, h(k - 2) * Lam(k) - Lam(k) * h(k), Lam(k) * Rational(2));
        equal("[H, L] = -2 L", k, k + 2, h(k + 2) * L(k) - L(k) * h(k), L(k) * Rational(-2));
    }

    void lefschetz_commutators(int k)
    {
        const int n = n_;
        for (int r = 1; r <= n; ++r) {
            const RationalMatrix lhs =
                op(Operator::Lambda, k + 2 * r) * l_power(k, r) - l_power(k - 2, r) * op(Operator::Lambda, k);
            const RationalMatrix rhs = (h(k + 2 * r - 2) + id(k + 2 * r - 2) * Rational(r - 1)) * Rational(r) *
                                       l_power(k, r - 1);
            equal("[Lambda, L^" + std::to_string(r) + "] = (H+r-1) r L^" + std::to_string(r - 1), k,
                  k + 2 * r - 2, lhs, rhs);
        }
        equal("L Lambda = (H+R+1) R", k, k, op(Operator::L, k - 2) * op(Operator::Lambda, k),
              scalar(k, [n](int r, int s) { return Rational((n - r - s + 1) * r); }));
        equal("Lambda L = (H+R)(R+1)", k, k, op(Operator::Lambda, k + 2) * op(Operator::L, k),
              scalar(k, [n](int r, int s) { return Rational((n - r - s) * (r + 1)); }));
    }

    void del_properties(int k)
    {
        const auto P = [&](int j) { return op(Operator::DelPlus, j); };
        const auto M = [&](int j) { return op(Operator::DelMinus, j); };
        const auto L = [&](int j) { return op(Operator::L, j); };
        equal("d = del+ + L del-", k, k + 1, op(Operator::D, k), P(k) + L(k - 1) * M(k));
        zero("del+ del+ = 0", k, k + 2, P(k + 1) * P(k));
        zero("del- del- = 0", k, k - 2, M(k - 1) * M(k));
        equal("L del+ del- = -L del- del+", k, k + 2, L(k) * P(k - 1) * M(k), L(k) * M(k + 1) * P(k) * Rational(-1));
        equal("[del+, L] = 0", k, k + 3, P(k + 2) * L(k), L(k + 1) * P(k));
        equal("[L del-, L] = 0", k, k + 3, L(k + 1) * M(k + 2) * L(k), L(k + 1) * L(k - 1) * M(k));
    }

    void d_lambda_decompositions(int k)
    {
        const int n = n_;
        const RationalMatrix lhs = op(Operator::DLambda, k);
        const RationalMatrix rhs =
            scalar(k - 1, [n](int r, int s) { return Rational(1, n - r - s + 1); }) * op(Operator::DelPlus, k - 2) *
                op(Operator::Lambda, k) -
            scalar(k - 1, [n](int r, int s) { return Rational(n - r - s); }) * op(Operator::DelMinus, k);
        equal("d^Lambda = (H+R+1)^-1 del+ Lambda - (H+R) del-", k, k - 1, lhs, rhs);

        equal("d d^Lambda = -(H+2R+1) del+ del-", k, k, op(Operator::D, k - 1) * op(Operator::DLambda, k),
              scalar(k, [n](int, int s) { return Rational(-(n - s + 1)); }) * op(Operator::DelPlus, k - 1) *
                  op(Operator::DelMinus, k));

        const SymplecticOperators& ops = cx_.operators();
        equal("d^Lambda = d Lambda - Lambda d = (-1)^{k+1} *_s d *_s", k, k - 1, lhs,
              matrix_of(k, k - 1, [&](const Form& a) { return ops.d_lambda_via_star(a); }));
    }

    void stars(int k)
    {
        const SymplecticStructure& s = cx_.structure();
        const auto star = [&](int j) {
            return matrix_of(j, dim_ - j, [&](const Form& a) { return s.symplectic_star(a); });
        };
        equal("*_s *_s = 1", k, k, star(dim_ - k) * star(k), id(k));
        equal("L = *_s Lambda *_s", k, k + 2, op(Operator::L, k), star(dim_ - k - 2) * op(Operator::Lambda, dim_ - k) * star(k));

        // A ^ *_s A' = (omega^{-1})^k (A, A') vol
        const Form vol = s.volume();
        const auto& blades = cx_.blades(k);
        std::string detail;
        bool ok = true;
        for (std::size_t a = 0; a < blades.size() && ok; ++a) {
            const Form ea = Form::monomial(dim_, blades[a]);
            for (std::size_t b = 0; b < blades.size() && ok; ++b) {
                const Form eb = Form::monomial(dim_, blades[b]);
                const Form lhs = wedge(ea, s.symplectic_star(eb));
                const Form rhs = vol * s.inverse_pairing(ea, eb);
                if (lhs != rhs) {
                    ok = false;
                    detail = format_form(ea) + " with " + format_form(eb) + ": " + format_form(lhs) + " vs " +
                             format_form(rhs);
                }
            }
        }
        report_.add("A ^ *_s A' = (omega^-1)^k(A, A') vol k=" + std::to_string(k), ok, detail);
    }

    void two_routes(int k)
    {
        const SymplecticOperators& ops = cx_.operators();
        equal("del+ projection = closed formula", k, k + 1, op(Operator::DelPlus, k),
              matrix_of(k, k + 1, [&](const Form& a) { return ops.del_plus_closed_form(a); }));
        equal("del- projection = closed formula", k, k - 1, op(Operator::DelMinus, k),
              matrix_of(k, k - 1, [&](const Form& a) { return ops.del_minus_closed_form(a); }));
    }

    void decomposition(int k)
    {
        const SymplecticStructure& s = cx_.structure();
        bool ok = true;
        std::string detail;
        for (const Blade& b : cx_.blades(k)) {
            const Form e = Form::monomial(dim_, b);
            const auto pieces = s.bigraded_decompose(e);
            bool good = s.reassemble(pieces) == e;
            for (const auto& p : pieces) good = good && s.is_primitive(p.primitive) && s.is_primitive_by_power(p.primitive);
            if (!good && ok) {
                ok = false;
                detail = "on " + format_form(e);
            }
        }
        report_.add("Lefschetz decomposition reassembles into primitive pieces k=" + std::to_string(k), ok, detail);
    }

    void primitive_formulas(int k)
    {
        const std::vector<Form> basis = cx_.forms_of(k, cx_.primitive(k));
        if (basis.empty()) return;
        RationalMatrix e(amb(k), basis.size());
        for (std::size_t c = 0; c < basis.size(); ++c) e.set_column(c, cx_.coordinates(basis[c], k));

        const Rational inv_h = Rational(1, n_ - k + 1);  // H^-1 on degree k - 1
        const RationalMatrix lam_d = op(Operator::Lambda, k + 1) * op(Operator::D, k) * e;
        const RationalMatrix minus = op(Operator::DelMinus, k) * e;
        equal("on P^k: del- = H^-1 Lambda d", k, k - 1, minus, lam_d * inv_h, &basis);
        equal("on P^k: del+ = d - L H^-1 Lambda d", k, k + 1, op(Operator::DelPlus, k) * e,
              op(Operator::D, k) * e - op(Operator::L, k - 1) * lam_d * inv_h, &basis);
        equal("on P^k: del+ del- = (H+1)^-1 d Lambda d", k, k, op(Operator::DelPlus, k - 1) * minus,
              op(Operator::D, k - 1) * lam_d * inv_h, &basis);
        equal("on P^k: d^Lambda = -H del-", k, k - 1, op(Operator::DLambda, k) * e,
              minus * Rational(-(n_ - k + 1)), &basis);
        if (k == n_) {
            zero("del+ kills P^n", k, k + 1, op(Operator::DelPlus, k) * e);
            const int sign = (n_ * (n_ + 1) / 2) % 2 == 0 ? 1 : -1;
            const RationalMatrix star = matrix_of(k, k, [&](const Form& a) { return cx_.structure().symplectic_star(a); });
            equal("*_s = (-1)^{n(n+1)/2} on P^n", k, k, star * e, e * Rational(sign), &basis);
        }
    }

    const InvariantComplex& cx_;
    int n_;
    int dim_;
    CheckReport report_;
};

} // namespace

CheckReport run_identity_suite(const InvariantComplex& cx) { return IdentityRunner(cx).run(); }

} // namespace symcoh
