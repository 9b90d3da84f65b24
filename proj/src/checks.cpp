#include "symcoh/checks.hpp"

namespace symcoh {

namespace {

std::string join_forms(const std::vector<Form>& forms)
{
    std::string out;
    for (const Form& f : forms) out += (out.empty() ? "" : ", ") + format_form(f);
    return out;
}

std::string k_tag(int k) { return " k=" + std::to_string(k); }

} // namespace

LefschetzMap lefschetz_map(const InvariantComplex& cx, int degree, int power)
{
    const SymplecticStructure& s = cx.structure();
    const int target_degree = degree + 2 * power;
    const CohomologyGroup source = cx.group(GroupName::DeRham, degree);
    const CohomologyGroup target = cx.group(GroupName::DeRham, target_degree);

    LefschetzMap map;
    map.degree = degree;
    map.power = power;
    map.source_dim = source.dimension();
    map.target_dim = target.dimension();

    RationalMatrix reduced(cx.ambient(target_degree), source.dimension());
    for (std::size_t i = 0; i < source.dimension(); ++i) {
        const Form image = s.L_power(source.representatives[i], power);
        const Vector v = cx.coordinates(image, target_degree);
        if (!target.numerator.contains(v)) throw ComplexError("omega^p ^ a closed form is not closed");
        reduced.set_column(i, target.denominator.reduce(v));
    }
    map.rank = rank(reduced);
    const Subspace k = kernel(reduced);
    for (std::size_t i = 0; i < k.dim(); ++i) {
        Form f(cx.dim());
        for (std::size_t j = 0; j < source.dimension(); ++j) f += source.representatives[j] * k.basis()(i, j);
        map.kernel.push_back(std::move(f));
    }
    return map;
}

bool strong_lefschetz_holds(const InvariantComplex& cx)
{
    const int n = cx.half_dim();
    for (int k = 0; k <= n; ++k)
        if (!lefschetz_map(cx, k, n - k).bijective()) return false;
    return true;
}

Exactness exactness(const InvariantComplex& cx, const Form& b, int k)
{
    const Vector v = cx.coordinates(b, k);
    Exactness e;
    e.del_plus_exact = cx.image_of(Operator::DelPlus, k - 1, cx.primitive(k - 1)).contains(v);
    e.del_minus_exact = cx.image_of(Operator::DelMinus, k + 1, cx.primitive(k + 1)).contains(v);
    e.del_plus_del_minus_exact = cx.image_of(Operator::DelPlusDelMinus, k, cx.primitive(k)).contains(v);
    return e;
}

std::vector<LemmaDegree> ddlambda_lemma(const InvariantComplex& cx)
{
    const int n = cx.half_dim();
    std::vector<LemmaDegree> out;
    for (int k = 0; k <= n; ++k) {
        const Subspace closed = cx.kernel_on(Operator::D, k, cx.primitive(k));
        const Subspace plus =
            subspace_intersect(closed, cx.image_of(Operator::DelPlus, k - 1, cx.primitive(k - 1)));
        const Subspace minus =
            subspace_intersect(closed, cx.image_of(Operator::DelMinus, k + 1, cx.primitive(k + 1)));
        const Subspace both = subspace_intersect(closed, cx.image_of(Operator::DelPlusDelMinus, k, cx.primitive(k)));

        LemmaDegree d;
        d.degree = k;
        d.closed_dim = closed.dim();
        d.plus_exact_dim = plus.dim();
        d.minus_exact_dim = minus.dim();
        d.both_exact_dim = both.dim();

        // Conditions (ii) and (iii) only apply for k < n and k > 0.
        std::vector<const Subspace*> applicable{&plus};
        if (k < n) applicable.push_back(&minus);
        if (k > 0) applicable.push_back(&both);
        for (const Subspace* a : applicable)
            for (const Subspace* b : applicable)
                if (!(*a == *b)) d.holds = false;

        if (!d.holds) {
            const Subspace any = [&] {
                Subspace s = plus;
                for (const Subspace* a : applicable) s = subspace_sum(s, *a);
                return s;
            }();
            for (std::size_t i = 0; i < any.dim(); ++i) {
                const Vector v = any.basis_vector(i);
                bool in_all = true;
                for (const Subspace* a : applicable) in_all = in_all && a->contains(v);
                if (!in_all) d.witnesses.push_back(cx.form_of(k, v));
            }
        }
        out.push_back(std::move(d));
    }
    return out;
}

bool ddlambda_lemma_holds(const InvariantComplex& cx)
{
    for (const LemmaDegree& d : ddlambda_lemma(cx))
        if (!d.holds) return false;
    return true;
}

CheckReport check_invariants(const InvariantComplex& cx)
{
    CheckReport r;
    r.suite = "invariants";
    const int n = cx.half_dim();
    for (GroupName g : kAllGroups) {
        for (int k = 0; k <= cx.max_degree(g); ++k) {
            const std::string name = std::string("denominator inside numerator ") + std::string(group_key(g)) + k_tag(k);
            try {
                const CohomologyGroup grp = cx.group(g, k);
                const bool counts = grp.dimension() == grp.numerator.dim() - grp.denominator.dim();
                r.add(name, grp.numerator.contains(grp.denominator) && counts);
            } catch (const ComplexError& e) {
                r.add(name, false, e.what());
            }
        }
    }
    for (int k = 0; k < n; ++k) {
        const std::size_t plus = cx.group(GroupName::PPlus, k).dimension();
        const std::size_t minus = cx.group(GroupName::PMinus, k).dimension();
        r.add("dim PH+ = dim PH-" + k_tag(k), plus == minus, std::to_string(plus) + " vs " + std::to_string(minus));
    }
    const std::size_t a = cx.group(GroupName::DPlusDLambda, n).dimension();
    const std::size_t b = cx.group(GroupName::DDLambda, n).dimension();
    r.add("dim PH^n_{d+dL} = dim PH^n_{ddL}", a == b, std::to_string(a) + " vs " + std::to_string(b));
    const long index = elliptic_index(cx);
    r.add("elliptic complex index = 0", index == 0, "index " + std::to_string(index));
    return r;
}

CheckReport check_low_degree_equivalence(const InvariantComplex& cx)
{
    CheckReport r;
    r.suite = "lowdegree";
    for (int k = 0; k <= 1 && k < cx.half_dim(); ++k) {
        const auto pairs = {std::pair{GroupName::PPlus, GroupName::DeRham}, std::pair{GroupName::PMinus, GroupName::DLambda}};
        for (const auto& [prim, full] : pairs) {
            const CohomologyGroup a = cx.group(prim, k);
            const CohomologyGroup b = cx.group(full, k);
            const std::string name =
                "PH " + std::string(group_key(prim)) + " = H " + std::string(group_key(full)) + k_tag(k);
            r.add(name + " dimension", a.dimension() == b.dimension(),
                  std::to_string(a.dimension()) + " vs " + std::to_string(b.dimension()));
            r.add(name + " cycles", a.numerator == b.numerator);
            r.add(name + " boundaries", a.denominator == b.denominator);
        }
    }
    return r;
}

CheckReport check_strong_lefschetz(const InvariantComplex& cx)
{
    CheckReport r;
    r.suite = "lefschetz";
    const int n = cx.half_dim();
    const SymplecticStructure& s = cx.structure();

    bool all = true;
    for (int k = 0; k <= n; ++k) {
        // Exact forms go to exact forms, so the map is defined on classes.
        const CohomologyGroup target = cx.group(GroupName::DeRham, 2 * n - k);
        bool defined = true;
        const Subspace exact = cx.group(GroupName::DeRham, k).denominator;
        for (const Form& b : cx.forms_of(k, exact))
            defined = defined && target.denominator.contains(cx.coordinates(s.L_power(b, n - k), 2 * n - k));
        r.add("omega^{n-k} maps exact forms to exact forms" + k_tag(k), defined);

        const LefschetzMap m = lefschetz_map(cx, k, n - k);
        all = all && m.bijective();
        std::string value = m.bijective() ? "isomorphism"
                                          : "not an isomorphism (rank " + std::to_string(m.rank) + ", " +
                                                std::to_string(m.source_dim) + " -> " + std::to_string(m.target_dim) + ")";
        r.note("omega^" + std::to_string(n - k) + ": H" + std::to_string(k) + "→H" + std::to_string(2 * n - k), value);
    }
    r.note("strong Lefschetz", all ? "holds" : "fails");

    if (n >= 2) {
        const LefschetzMap m = lefschetz_map(cx, 1, 1);
        const bool closed_enough = m.rank + m.kernel.size() == m.source_dim;
        r.add("[omega]^: H1→H3 rank + nullity = dim H1", closed_enough);
        r.note("[omega]^: H1→H3", m.injective() ? "H1→H3 injective"
                                                : "H1→H3 not injective, kernel spanned by " + join_forms(m.kernel));
    }
    return r;
}

CheckReport check_ddlambda_lemma(const InvariantComplex& cx)
{
    CheckReport r;
    r.suite = "ddlambda";
    const int n = cx.half_dim();
    bool holds = true;
    for (const LemmaDegree& d : ddlambda_lemma(cx)) {
        holds = holds && d.holds;
        // del+ del- exact closed forms are del+ exact and, below the middle degree, del- exact.
        bool inclusions = d.both_exact_dim <= d.plus_exact_dim || d.degree == 0;
        if (d.degree > 0 && d.degree < n) inclusions = inclusions && d.both_exact_dim <= d.minus_exact_dim;
        r.add("del+ del- exact implies del+ and del- exact" + k_tag(d.degree), inclusions);
        std::string value = d.holds ? "holds" : "fails";
        value += " (closed " + std::to_string(d.closed_dim) + ", del+ exact " + std::to_string(d.plus_exact_dim) +
                 ", del- exact " + std::to_string(d.minus_exact_dim) + ", del+del- exact " +
                 std::to_string(d.both_exact_dim) + ")";
        if (!d.witnesses.empty()) value += "; witnesses " + join_forms(d.witnesses);
        r.note("del+del- lemma" + k_tag(d.degree), value);
    }
    const bool lefschetz = strong_lefschetz_holds(cx);
    r.note("del+del- lemma", holds ? "holds" : "fails");
    r.add("del+del- lemma holds iff strong Lefschetz holds", holds == lefschetz,
          std::string("lemma ") + (holds ? "holds" : "fails") + ", strong Lefschetz " + (lefschetz ? "holds" : "fails"));
    return r;
}

CheckReport check_comparison_bounds(const InvariantComplex& cx)
{
    CheckReport r;
    r.suite = "ddlambda";
    const int n = cx.half_dim();
    const bool lemma = ddlambda_lemma_holds(cx);
    for (int k = 0; k < n; ++k) {
        const std::size_t plus = cx.group(GroupName::PPlus, k).dimension();
        const std::size_t minus = cx.group(GroupName::PMinus, k).dimension();
        const std::size_t d_prim = cx.de_rham_primitive(k).dimension();
        const std::size_t dl_prim = cx.d_lambda_primitive(k).dimension();
        r.add("dim PH+ >= dim(H_dL cap P)" + k_tag(k), plus >= dl_prim,
              std::to_string(plus) + " vs " + std::to_string(dl_prim));
        r.add("dim PH- >= dim(H_dL cap P)" + k_tag(k), minus >= dl_prim,
              std::to_string(minus) + " vs " + std::to_string(dl_prim));
        if (lemma && k >= 2) {
            r.add("lemma holds: dim PH+ = dim(H_d cap P)" + k_tag(k), plus == d_prim,
                  std::to_string(plus) + " vs " + std::to_string(d_prim));
            r.add("lemma holds: dim PH- = dim(H_dL cap P)" + k_tag(k), minus == dl_prim,
                  std::to_string(minus) + " vs " + std::to_string(dl_prim));
        }
        r.note("dim PH+ - dim(H_d cap P)" + k_tag(k), std::to_string(static_cast<long>(plus) - static_cast<long>(d_prim)));
        r.note("dim PH- - dim(H_dL cap P)" + k_tag(k),
               std::to_string(static_cast<long>(minus) - static_cast<long>(dl_prim)));
    }
    return r;
}

std::vector<OmegaDimensions> omega_dependence(const LieAlgebra& algebra, const std::vector<Form>& omegas)
{
    std::vector<OmegaDimensions> out;
    for (const Form& omega : omegas) {
        const InvariantComplex cx(make_operators(algebra, omega));
        OmegaDimensions d;
        d.omega = format_form(omega);
        for (int k = 0; k < cx.half_dim(); ++k) {
            d.plus.push_back(cx.group(GroupName::PPlus, k).dimension());
            d.minus.push_back(cx.group(GroupName::PMinus, k).dimension());
        }
        out.push_back(std::move(d));
    }
    return out;
}

} // namespace symcoh
