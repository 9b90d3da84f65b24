#include "fixtures.hpp"

#include "symcoh/identities.hpp"
#include "symcoh/symplectic.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace symcoh;
using namespace symcoh::testing;

namespace {

Form e(const std::string& text, int dim = 6) { return parse_form(text, dim); }

const Form& omega() { return nil_omega().structure().omega(); }

std::size_t binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    std::size_t b = 1;
    for (int i = 0; i < k; ++i) b = b * static_cast<std::size_t>(n - i) / static_cast<std::size_t>(i + 1);
    return b;
}

Form random_homogeneous(std::mt19937& rng, int dim, int degree, int terms = 5)
{
    Form f(dim);
    const auto blades = blades_of_degree(dim, degree);
    std::uniform_int_distribution<std::size_t> pick(0, blades.size() - 1);
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    for (int t = 0; t < terms; ++t) f += Form::monomial(dim, blades[pick(rng)], make_rational(num(rng), den(rng)));
    return f;
}

Vector coords(const Form& f, const std::vector<Blade>& blades)
{
    Vector v;
    for (Blade b : blades) v.push_back(f.coefficient(b));
    return v;
}

Form from_coords(int dim, const std::vector<Blade>& blades, const Vector& v, std::size_t offset)
{
    Form f(dim);
    for (std::size_t i = 0; i < blades.size(); ++i) f += Form::monomial(dim, blades[i], v[offset + i]);
    return f;
}

// Solves A = sum_r L^r/r! B_{k-2r} together with Lambda B_{k-2r} = 0 as one
// exact linear system, independent of the closed projection formula.
std::map<int, Form> lefschetz_by_linear_solve(const SymplecticStructure& s, const Form& a, int k)
{
    const int n = s.half_dim(), dim = s.dim();
    std::vector<int> powers;
    for (int r = std::max(k - n, 0); 2 * r <= k; ++r) powers.push_back(r);

    const auto target = blades_of_degree(dim, k);
    std::vector<std::size_t> offsets;
    std::size_t unknowns = 0, rows = target.size();
    for (int r : powers) {
        offsets.push_back(unknowns);
        unknowns += binomial(dim, k - 2 * r);
        rows += binomial(dim, k - 2 * r - 2);
    }
    RationalMatrix m(rows, unknowns + 1);
    const Vector rhs = coords(a, target);
    for (std::size_t i = 0; i < target.size(); ++i) m(i, unknowns) = rhs[i];

    std::size_t row = target.size();
    for (std::size_t p = 0; p < powers.size(); ++p) {
        const int r = powers[p], s_deg = k - 2 * r;
        const auto source = blades_of_degree(dim, s_deg);
        const auto lower = blades_of_degree(dim, s_deg - 2);
        for (std::size_t j = 0; j < source.size(); ++j) {
            const Form b = Form::monomial(dim, source[j]);
            const Vector up = coords(s.L_power(b, r) * (Rational(1) / factorial(r)), target);
            for (std::size_t i = 0; i < target.size(); ++i) m(i, offsets[p] + j) = up[i];
            const Vector down = coords(s.Lambda(b), lower);
            for (std::size_t i = 0; i < lower.size(); ++i) m(row + i, offsets[p] + j) = down[i];
        }
        row += lower.size();
    }
    const Echelon ech = reduced_row_echelon(m);
    Vector x(unknowns, Rational(0));
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
        EXPECT_LT(ech.pivots[i], unknowns) << "inconsistent Lefschetz system";
        if (ech.pivots[i] < unknowns) x[ech.pivots[i]] = ech.rows(i, unknowns);
    }
    EXPECT_EQ(ech.pivots.size(), unknowns) << "Lefschetz system is not uniquely solvable";
    std::map<int, Form> out;
    for (std::size_t p = 0; p < powers.size(); ++p) {
        const Form b = from_coords(dim, blades_of_degree(dim, k - 2 * powers[p]), x, offsets[p]);
        if (!b.is_zero()) out.emplace(powers[p], b);
    }
    return out;
}

} // namespace

TEST(Structure, RejectsBadForms)
{
    try {
        SymplecticStructure s(parse_two_form("12", 6));
        FAIL();
    } catch (const NotSymplecticError& err) {
        EXPECT_EQ(err.reason(), NotSymplecticError::Reason::Degenerate);
        EXPECT_NE(std::string(err.what()).find("degenerate"), std::string::npos);
    }
    EXPECT_THROW(SymplecticStructure(e("e123")), NotSymplecticError);
    try {
        make_operators(parse_salamon(kNilAlgebra), parse_two_form("12+34+56", 6));
        FAIL();
    } catch (const NotSymplecticError& err) {
        EXPECT_EQ(err.reason(), NotSymplecticError::Reason::NotClosed);
        EXPECT_NE(std::string(err.what()).find("not closed"), std::string::npos);
    }
}

TEST(Structure, InverseMatrix)
{
    const SymplecticStructure& s = nil_omega().structure();
    EXPECT_EQ(s.omega_matrix() * s.inverse_matrix(), RationalMatrix::identity(6));
    EXPECT_FALSE(wedge_power(s.omega(), 3).is_zero());
}

TEST(Sl2, Examples)
{
    const SymplecticStructure& s = nil_omega().structure();
    EXPECT_EQ(s.Lambda(s.omega()), e("3"));
    EXPECT_EQ(s.H(e("e1")), e("2*e1"));
    for (int i = 1; i <= 6; ++i) EXPECT_TRUE(s.Lambda(Form::generator(6, i)).is_zero());
}

TEST(Sl2, CommutatorsOnRandomForms)
{
    std::mt19937 rng(3);
    for (const InvariantComplex* cx : {&nil_omega(), &nil_omega_prime(), &torus()}) {
        const SymplecticStructure& s = cx->structure();
        for (int trial = 0; trial < 40; ++trial) {
            const Form a = random_homogeneous(rng, 6, trial % 7);
            EXPECT_EQ(s.Lambda(s.L(a)) - s.L(s.Lambda(a)), s.H(a));
            EXPECT_EQ(s.H(s.Lambda(a)) - s.Lambda(s.H(a)), s.Lambda(a) * Rational(2));
            EXPECT_EQ(s.H(s.L(a)) - s.L(s.H(a)), s.L(a) * Rational(-2));
        }
    }
}

TEST(Lefschetz, TrivialCases)
{
    const SymplecticStructure& s = nil_omega().structure();
    const Form b = e("e15 - e23");
    const LefschetzComponents c = s.lefschetz_decompose(b, 2);
    ASSERT_EQ(c.primitive_by_power.size(), 1u);
    EXPECT_EQ(c.primitive_by_power.at(0), b);
    const LefschetzComponents w = s.lefschetz_decompose(s.omega(), 2);
    ASSERT_EQ(w.primitive_by_power.size(), 1u);
    EXPECT_EQ(w.primitive_by_power.at(1), e("1"));
    EXPECT_THROW(s.lefschetz_decompose(e("e1 + e12"), 2), InputError);
}

TEST(Lefschetz, MatchesLinearSolve)
{
    std::mt19937 rng(19);
    for (const InvariantComplex* cx : {&nil_omega(), &nil_omega_prime(), &torus()}) {
        const SymplecticStructure& s = cx->structure();
        for (int trial = 0; trial < 30; ++trial) {
            const int k = 2 + trial % 4;
            const Form a = random_homogeneous(rng, 6, k, 6);
            const auto expected = lefschetz_by_linear_solve(s, a, k);
            const LefschetzComponents got = s.lefschetz_decompose(a, k);
            EXPECT_EQ(got.primitive_by_power, expected) << format_form(a);
            for (const auto& [r, b] : got.primitive_by_power) EXPECT_TRUE(s.Lambda(b).is_zero());
        }
    }
}

TEST(Lefschetz, ReassemblesExactly)
{
    std::mt19937 rng(23);
    const SymplecticStructure& s = nil_omega().structure();
    for (int trial = 0; trial < 40; ++trial) {
        Form a = random_homogeneous(rng, 6, trial % 7) + random_homogeneous(rng, 6, (trial + 3) % 7);
        EXPECT_EQ(s.reassemble(s.bigraded_decompose(a)), a);
    }
}

TEST(Primitivity, Examples)
{
    const SymplecticStructure& s = nil_omega().structure();
    EXPECT_TRUE(s.is_primitive(e("e1")));
    EXPECT_FALSE(s.is_primitive(s.omega()));
    EXPECT_TRUE(s.is_primitive(e("e15 - e23")));
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        const int k = trial % 4;
        Form a = random_homogeneous(rng, 6, k, 3);
        if (trial % 2) a = s.lefschetz_decompose(a, k).primitive_by_power[0];
        EXPECT_EQ(s.is_primitive(a), s.is_primitive_by_power(a)) << format_form(a);
    }
}

TEST(Primitivity, BasisCounts)
{
    const SymplecticStructure& s = nil_omega().structure();
    EXPECT_EQ(s.primitive_basis(1).size(), 6u);
    EXPECT_EQ(s.primitive_basis(2).size(), 14u);
    EXPECT_EQ(s.primitive_basis(3).size(), 14u);
}

TEST(Primitivity, RecursiveBasis)
{
    EXPECT_EQ(recursive_primitive_basis(1, 1), (std::vector<Form>{e("e1", 2), e("e2", 2)}));
    const auto n2 = recursive_primitive_basis(2, 2);
    EXPECT_EQ(n2.size(), 5u);
    EXPECT_NE(std::find(n2.begin(), n2.end(), e("e12 - e34", 4)), n2.end());
    for (int n = 1; n <= 4; ++n) {
        const SymplecticStructure s(standard_omega(n));
        for (int k = 0; k <= n; ++k) {
            const auto rec = recursive_primitive_basis(n, k);
            const auto direct = s.primitive_basis(k);
            const std::size_t expected = binomial(2 * n, k) - binomial(2 * n, k - 2);
            EXPECT_EQ(rec.size(), expected) << n << " " << k;
            EXPECT_EQ(direct.size(), expected) << n << " " << k;
            for (const Form& f : rec) EXPECT_TRUE(s.is_primitive(f));
        }
    }
}

TEST(SymplecticStar, Examples)
{
    for (const InvariantComplex* cx : {&nil_omega(), &nil_omega_prime(), &torus()}) {
        const SymplecticStructure& s = cx->structure();
        EXPECT_EQ(s.symplectic_star(e("1")), s.volume());
        EXPECT_EQ(s.volume(), wedge_power(s.omega(), 3) * make_rational(1, 6));
        EXPECT_EQ(s.symplectic_star(s.volume()), e("1"));
        for (const Form& b : s.primitive_basis(3)) EXPECT_EQ(s.symplectic_star(b), b * Rational(1));
        for (std::uint32_t m = 0; m < 64; ++m) {
            const Form a = Form::monomial(6, Blade(m));
            EXPECT_EQ(s.symplectic_star(s.symplectic_star(a)), a);
        }
    }
    // n = 2: middle primitive forms pick up (-1)^{n(n+1)/2} = -1.
    const SymplecticStructure s2(standard_omega(2));
    for (const Form& b : s2.primitive_basis(2)) EXPECT_EQ(s2.symplectic_star(b), -b);
}

TEST(SymplecticStar, InversePairing)
{
    std::mt19937 rng(31);
    const SymplecticStructure& s = nil_omega().structure();
    for (int trial = 0; trial < 40; ++trial) {
        const int k = trial % 7;
        const Form a = random_homogeneous(rng, 6, k), b = random_homogeneous(rng, 6, k);
        EXPECT_EQ(wedge(a, s.symplectic_star(b)), s.volume() * s.inverse_pairing(a, b));
    }
}

TEST(DLambda, Examples)
{
    const SymplecticOperators& ops = nil_omega().operators();
    EXPECT_TRUE(ops.d_lambda(e("5")).is_zero());
    EXPECT_EQ(ops.d_lambda(word("1:w6", omega())), e("e15 + e23 + e24"));
    EXPECT_EQ(ops.d_lambda(word("1:w6", omega())), ops.del_plus(e("e6")));
}

// The combination as printed in the worked example evaluates to 2 e15 + 2 e23;
// flipping the sign of the e625 + e634 part gives the stated 2 e24.
TEST(DLambda, WorkedExample)
{
    const SymplecticOperators& ops = nil_omega().operators();
    EXPECT_EQ(ops.d_lambda(word("-1:625 -1:634 1:w6", omega())), e("2*e24"));
    EXPECT_EQ(ops.d_lambda(word("1:625 1:634 1:w6", omega())), e("2*e15 + 2*e23"));
}

TEST(DLambda, RoutesAgree)
{
    for (const InvariantComplex* cx : {&nil_omega(), &nil_omega_prime(), &torus()}) {
        const SymplecticOperators& ops = cx->operators();
        for (std::uint32_t m = 0; m < 64; ++m) {
            const Form a = Form::monomial(6, Blade(m));
            EXPECT_EQ(ops.d_lambda(a), ops.d_lambda_via_star(a)) << format_blade(Blade(m));
        }
    }
}

TEST(DelPlusMinus, Examples)
{
    const SymplecticOperators& ops = nil_omega().operators();
    EXPECT_EQ(ops.del_plus(e("e4")), e("e12"));
    EXPECT_EQ(ops.del_minus(word("1:416 -1:425", omega())), e("e12"));
    EXPECT_EQ(ops.del_plus(e("e6")), e("e15 + e23 + e24"));
}

TEST(DelPlusMinus, RoutesAgreeOnEveryBlade)
{
    for (const InvariantComplex* cx : {&nil_omega(), &nil_omega_prime(), &torus()}) {
        const SymplecticOperators& ops = cx->operators();
        for (std::uint32_t m = 0; m < 64; ++m) {
            const Form a = Form::monomial(6, Blade(m));
            EXPECT_EQ(ops.del_plus(a), ops.del_plus_closed_form(a)) << format_blade(Blade(m));
            EXPECT_EQ(ops.del_minus(a), ops.del_minus_closed_form(a)) << format_blade(Blade(m));
            EXPECT_EQ(ops.d(a), ops.del_plus(a) + cx->structure().L(ops.del_minus(a)));
        }
    }
}

TEST(DelPlusDelMinus, Examples)
{
    const SymplecticOperators& ops = nil_omega().operators();
    EXPECT_TRUE(ops.del_plus_del_minus(e("3")).is_zero());
    EXPECT_TRUE(ops.del_plus_del_minus(e("e1")).is_zero());
    // On the primitive 1-form e6 the scalar H + 2R + 1 is n - 1 + 1 = 3.
    EXPECT_EQ(ops.del_plus_del_minus(e("e6")), ops.dd_lambda(e("e6")) * make_rational(-1, 3));
}

TEST(Identities, SuitePassesOnEveryFixture)
{
    for (const InvariantComplex* cx : {&nil_omega(), &nil_omega_prime(), &torus()}) {
        const CheckReport r = run_identity_suite(*cx);
        EXPECT_GT(r.results.size(), 100u);
        const CheckResult* f = r.first_failure();
        EXPECT_EQ(f, nullptr) << (f ? f->name + ": " + f->detail : "");
    }
}
