#include "fixtures.hpp"

#include "symcoh/checks.hpp"

#include <gtest/gtest.h>

using namespace symcoh;
using namespace symcoh::testing;

namespace {

const char* kOmegaThird = "16+25-34+13";

Form e(const std::string& text) { return parse_form(text, 6); }

std::string failure_of(const CheckReport& r)
{
    const CheckResult* f = r.first_failure();
    return f ? f->name + ": " + f->detail : "";
}

std::size_t binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    std::size_t b = 1;
    for (int i = 0; i < k; ++i) b = b * static_cast<std::size_t>(n - i) / static_cast<std::size_t>(i + 1);
    return b;
}

void expect_represents(GroupName g, int k, const std::vector<std::string>& table)
{
    const InvariantComplex& cx = nil_omega();
    std::string why;
    const auto forms = words(table, cx.structure().omega());
    EXPECT_TRUE(represents_classes(cx, cx.group(g, k), forms, &why))
        << group_key(g) << " k=" << k << ": " << why;
}

} // namespace

TEST(Groups, DimensionRows)
{
    const InvariantComplex& cx = nil_omega();
    using V = std::vector<std::size_t>;
    EXPECT_EQ(cx.dimensions(GroupName::DeRham), (V{1, 3, 5, 6, 5, 3, 1}));
    EXPECT_EQ(cx.dimensions(GroupName::DLambda), (V{1, 3, 5, 6, 5, 3, 1}));
    EXPECT_EQ(cx.dimensions(GroupName::PPlus), (V{1, 3, 5}));
    EXPECT_EQ(cx.dimensions(GroupName::PMinus), (V{1, 3, 5}));
    EXPECT_EQ(cx.dimensions(GroupName::DPlusDLambda), (V{1, 3, 7, 6}));
    // No tabulated row for ddL; the middle degree agrees with d+dL.
    EXPECT_EQ(cx.dimensions(GroupName::DDLambda), (V{1, 3, 7, 6}));
}

TEST(Groups, SecondFormDimensions)
{
    const InvariantComplex& cx = nil_omega_prime();
    using V = std::vector<std::size_t>;
    EXPECT_EQ(cx.dimensions(GroupName::PPlus), (V{1, 3, 4}));
    EXPECT_EQ(cx.dimensions(GroupName::PMinus), (V{1, 3, 4}));
    EXPECT_EQ(cx.dimensions(GroupName::DPlusDLambda), (V{1, 3, 5, 4}));
    EXPECT_EQ(cx.dimensions(GroupName::DDLambda), (V{1, 3, 5, 4}));
}

TEST(Groups, TorusDimensions)
{
    const InvariantComplex& cx = torus();
    for (int k = 0; k <= 3; ++k) {
        const std::size_t prim = binomial(6, k) - binomial(6, k - 2);
        EXPECT_EQ(cx.group(GroupName::DDLambda, k).dimension(), prim);
        EXPECT_EQ(cx.group(GroupName::DPlusDLambda, k).dimension(), prim);
    }
    for (int k = 0; k <= 6; ++k) EXPECT_EQ(cx.group(GroupName::DeRham, k).dimension(), binomial(6, k));
}

TEST(Groups, IllegalDegreesAreInputErrors)
{
    const InvariantComplex& cx = nil_omega();
    EXPECT_THROW(cx.group(GroupName::PPlus, 3), InputError);
    EXPECT_THROW(cx.group(GroupName::PMinus, -1), InputError);
    EXPECT_THROW(cx.group(GroupName::DDLambda, 4), InputError);
    EXPECT_THROW(cx.group(GroupName::DeRham, 7), InputError);
    EXPECT_NO_THROW(cx.group(GroupName::DPlusDLambda, 3));
}

TEST(Groups, RepresentativesLieInNumerator)
{
    for (const InvariantComplex* cx : {&nil_omega(), &nil_omega_prime(), &torus()})
        for (GroupName g : kAllGroups)
            for (int k = 0; k <= cx->max_degree(g); ++k) {
                const CohomologyGroup grp = cx->group(g, k);
                EXPECT_TRUE(represents_classes(*cx, grp, grp.representatives));
                EXPECT_TRUE(grp.numerator.contains(grp.denominator));
            }
}

TEST(TableSpans, DeRham)
{
    expect_represents(GroupName::DeRham, 0, {"1:"});
    expect_represents(GroupName::DeRham, 1, {"1:1", "1:2", "1:3"});
    expect_represents(GroupName::DeRham, 2, {"1:w", "1:13", "1:23 -1:24", "1:15 -1:23", "1:26 -1:45"});
    expect_represents(GroupName::DeRham, 3,
                      {"1:w2", "1:w3", "1:315 1:415", "1:425", "1:534 1:623", "1:516 1:534 -2:263 1:624"});
}

TEST(TableSpans, DLambda)
{
    expect_represents(GroupName::DLambda, 0, {"1:"});
    expect_represents(GroupName::DLambda, 1, {"1:4", "1:5", "1:6"});
    expect_represents(GroupName::DLambda, 2, {"1:w", "1:46", "1:15 -1:23", "1:26 -1:45", "1:35 1:45"});
    expect_represents(GroupName::DLambda, 3,
                      {"1:w2", "1:w3", "1:315 1:415", "1:416", "1:516 1:623", "1:516 1:534 -2:263 1:624"});
}

TEST(TableSpans, Primitive)
{
    expect_represents(GroupName::PPlus, 0, {"1:"});
    expect_represents(GroupName::PPlus, 1, {"1:1", "1:2", "1:3"});
    expect_represents(GroupName::PPlus, 2, {"1:13", "1:23 -1:24", "1:15 -1:23", "1:26 -1:45", "1:35 -1:45"});
    expect_represents(GroupName::PMinus, 0, {"1:"});
    expect_represents(GroupName::PMinus, 1, {"1:4", "1:5", "1:6"});
    expect_represents(GroupName::PMinus, 2, {"1:24", "1:46", "1:15 -1:23", "1:26 -1:45", "1:35 1:45"});
    expect_represents(GroupName::DPlusDLambda, 0, {"1:"});
    expect_represents(GroupName::DPlusDLambda, 1, {"1:1", "1:2", "1:3"});
    expect_represents(GroupName::DPlusDLambda, 2,
                      {"1:12", "1:13", "1:14", "1:24", "1:15 -1:23", "1:26 -1:45", "1:15 1:23 1:24"});
    expect_represents(GroupName::DPlusDLambda, 3,
                      {"1:315", "1:415", "1:125 1:134", "1:126 -1:234", "1:316 -1:325 2:416 -2:425",
                       "1:516 1:534 -2:263 1:624"});
}

TEST(TableSpans, WrongListsAreRejected)
{
    const InvariantComplex& cx = nil_omega();
    const Form& w = cx.structure().omega();
    // e24 - e23 repeats the class of e23 - e24, so one class is missing.
    EXPECT_FALSE(represents_classes(cx, cx.group(GroupName::PPlus, 2),
                                    words({"1:13", "1:23 -1:24", "1:15 -1:23", "1:26 -1:45", "1:24 -1:23"}, w)));
    // e6 is not closed.
    EXPECT_FALSE(represents_classes(cx, cx.group(GroupName::DeRham, 1), words({"1:1", "1:2", "1:6"}, w)));
    // Too few forms.
    EXPECT_FALSE(represents_classes(cx, cx.group(GroupName::DeRham, 1), words({"1:1", "1:2"}, w)));
}

TEST(LowDegree, EquivalencesOnEveryFixture)
{
    for (const InvariantComplex* cx : {&nil_omega(), &nil_omega_prime(), &torus()}) {
        const CheckReport r = check_low_degree_equivalence(*cx);
        EXPECT_TRUE(r.passed()) << failure_of(r);
        EXPECT_EQ(r.results.size(), 12u);
    }
}

TEST(Invariants, HoldOnEveryFixture)
{
    for (const InvariantComplex* cx : {&nil_omega(), &nil_omega_prime(), &torus()}) {
        const CheckReport r = check_invariants(*cx);
        EXPECT_TRUE(r.passed()) << failure_of(r);
        EXPECT_EQ(elliptic_index(*cx), 0);
    }
}

TEST(StrongLefschetz, DiagnosticMap)
{
    const InvariantComplex& cx = nil_omega();
    const LefschetzMap m = lefschetz_map(cx, 1, 1);
    EXPECT_FALSE(m.injective());
    ASSERT_EQ(m.kernel.size(), 1u);
    // [e1] lies in the kernel: omega ^ e1 = -d(e35 - e45).
    EXPECT_EQ(wedge(cx.structure().omega(), e("e1")), -cx.operators().d(e("e35 - e45")));
    const CohomologyGroup h1 = cx.group(GroupName::DeRham, 1);
    const Subspace kernel_classes = subspace_sum(cx.span_of(1, m.kernel), h1.denominator);
    EXPECT_TRUE(kernel_classes.contains(cx.coordinates(e("e1"), 1)));

    EXPECT_TRUE(lefschetz_map(nil_omega_prime(), 1, 1).injective());
    EXPECT_FALSE(strong_lefschetz_holds(cx));
    EXPECT_FALSE(strong_lefschetz_holds(nil_omega_prime()));
    EXPECT_TRUE(strong_lefschetz_holds(torus()));
    for (int k = 0; k <= 3; ++k) EXPECT_TRUE(lefschetz_map(torus(), k, 3 - k).bijective());
}

TEST(StrongLefschetz, ReportNamesTheDiagnostic)
{
    const CheckReport r = check_strong_lefschetz(nil_omega());
    EXPECT_TRUE(r.passed()) << failure_of(r);
    bool found = false;
    for (const auto& [k, v] : r.findings) found = found || v.find("H1→H3 not injective") != std::string::npos;
    EXPECT_TRUE(found);
}

TEST(Lemma, WitnessE12)
{
    const InvariantComplex& cx = nil_omega();
    const Form b = e("e12");
    EXPECT_TRUE(cx.operators().d(b).is_zero());
    EXPECT_TRUE(cx.structure().is_primitive(b));
    EXPECT_EQ(cx.operators().del_plus(e("e4")), b);
    EXPECT_EQ(cx.operators().del_minus(word("1:416 -1:425", cx.structure().omega())), b);
    const Exactness x = exactness(cx, b, 2);
    EXPECT_TRUE(x.del_plus_exact);
    EXPECT_TRUE(x.del_minus_exact);
    EXPECT_FALSE(x.del_plus_del_minus_exact);

    const auto degrees = ddlambda_lemma(cx);
    ASSERT_EQ(degrees.size(), 4u);
    EXPECT_FALSE(degrees[2].holds);
    EXPECT_FALSE(ddlambda_lemma_holds(cx));
    EXPECT_TRUE(ddlambda_lemma_holds(torus()));
}

TEST(Lemma, AgreesWithStrongLefschetz)
{
    for (const InvariantComplex* cx : {&nil_omega(), &nil_omega_prime(), &torus()}) {
        EXPECT_EQ(ddlambda_lemma_holds(*cx), strong_lefschetz_holds(*cx));
        const CheckReport r = check_ddlambda_lemma(*cx);
        EXPECT_TRUE(r.passed()) << failure_of(r);
    }
}

TEST(Comparison, EqualityUnderLemmaAndLowerBound)
{
    for (const InvariantComplex* cx : {&nil_omega(), &nil_omega_prime(), &torus()}) {
        const CheckReport r = check_comparison_bounds(*cx);
        EXPECT_TRUE(r.passed()) << failure_of(r);
    }
    const InvariantComplex& t = torus();
    EXPECT_EQ(t.group(GroupName::PPlus, 2).dimension(), 14u);
    EXPECT_EQ(t.de_rham_primitive(2).dimension(), 14u);
    EXPECT_EQ(t.d_lambda_primitive(2).dimension(), 14u);
}

TEST(Comparison, StrictInequalityWitnesses)
{
    const InvariantComplex& cx = nil_omega();
    const CohomologyGroup plus = cx.group(GroupName::PPlus, 2);
    const CohomologyGroup minus = cx.group(GroupName::PMinus, 2);
    const CohomologyGroup d_prim = cx.de_rham_primitive(2);
    const CohomologyGroup dl_prim = cx.d_lambda_primitive(2);
    EXPECT_EQ(plus.dimension(), d_prim.dimension() + 1);
    EXPECT_EQ(minus.dimension(), dl_prim.dimension() + 1);

    // Closed primitive forms fill all of PH^2_del+ except the class of e35 - e45.
    const Subspace closed_part = subspace_sum(d_prim.numerator, plus.denominator);
    const Vector w_plus = cx.coordinates(e("e35 - e45"), 2);
    EXPECT_EQ(closed_part.dim() - plus.denominator.dim(), d_prim.dimension());
    EXPECT_FALSE(closed_part.contains(w_plus));
    EXPECT_EQ(subspace_sum(closed_part, Subspace::span(closed_part.ambient(), {w_plus})), plus.numerator);

    // The minus side differs in the denominator: e24 is d^Lambda-exact but not del--exact.
    const Vector w_minus = cx.coordinates(e("e24"), 2);
    EXPECT_TRUE(minus.numerator.contains(w_minus));
    EXPECT_TRUE(dl_prim.denominator.contains(w_minus));
    EXPECT_FALSE(minus.denominator.contains(w_minus));
    EXPECT_TRUE(dl_prim.denominator.contains(minus.denominator));
    EXPECT_EQ(subspace_sum(minus.denominator, Subspace::span(minus.denominator.ambient(), {w_minus})),
              dl_prim.denominator);
    EXPECT_EQ(subspace_sum(dl_prim.numerator, minus.denominator), minus.numerator);
}

TEST(OmegaDependence, OffsetScaleAndThirdForm)
{
    const LieAlgebra g = parse_salamon(kNilAlgebra);
    const auto dims = omega_dependence(
        g, {parse_two_form(kOmega, 6), parse_two_form(kOmegaPrime, 6), parse_two_form("2*16+2*25-2*34", 6),
            parse_two_form(kOmegaThird, 6)});
    ASSERT_EQ(dims.size(), 4u);
    EXPECT_EQ(dims[0].plus[2], dims[1].plus[2] + 1);
    EXPECT_EQ(dims[0].minus[2], dims[1].minus[2] + 1);
    EXPECT_EQ(dims[2].plus, dims[0].plus);
    EXPECT_EQ(dims[2].minus, dims[0].minus);
    // Regression value for e16 + e25 - e34 + e13.
    EXPECT_EQ(dims[3].plus, (std::vector<std::size_t>{1, 3, 5}));
    EXPECT_EQ(dims[3].minus, (std::vector<std::size_t>{1, 3, 5}));
}
