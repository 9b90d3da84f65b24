#include "fixtures.hpp"

#include "symcoh/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace symcoh;
using symcoh::testing::nil_omega;

namespace {

// Plain Gaussian elimination over Q with the first nonzero entry as pivot.
std::size_t naive_rank(RationalMatrix m)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            const Rational f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

RationalMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int zero_bias)
{
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3), zero(0, 9);
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (zero(rng) >= zero_bias) m(i, j) = make_rational(num(rng), den(rng));
    return m;
}

// Rows of a low-rank matrix spanning a random subspace.
Subspace random_subspace(std::mt19937& rng, std::size_t ambient, std::size_t generators)
{
    const RationalMatrix left = random_matrix(rng, generators, 2, 3);
    const RationalMatrix right = random_matrix(rng, 2, ambient, 3);
    RationalMatrix m = random_matrix(rng, generators, ambient, 8) + left * right;
    return Subspace::row_space(m);
}

RationalMatrix stack(const Subspace& a, const Subspace& b)
{
    RationalMatrix m(a.dim() + b.dim(), a.ambient());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.ambient(); ++j) m(i, j) = a.basis()(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < a.ambient(); ++j) m(a.dim() + i, j) = b.basis()(i, j);
    return m;
}

Vector unit(std::size_t n, std::size_t i)
{
    Vector v(n, Rational(0));
    v[i] = 1;
    return v;
}

} // namespace

TEST(Rank, MatchesNaiveElimination)
{
    std::mt19937 rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rows = 1 + trial % 7, cols = 1 + (trial / 7) % 7;
        const RationalMatrix m = random_matrix(rng, rows, cols, trial % 9);
        ASSERT_EQ(rank(m), naive_rank(m)) << "trial " << trial;
        ASSERT_EQ(image(m).dim(), naive_rank(m));
        ASSERT_EQ(kernel(m).dim() + rank(m), cols);
    }
}

TEST(Rank, Random5x5Image)
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const RationalMatrix m = random_matrix(rng, 5, 5, trial % 6);
        EXPECT_EQ(image(m).dim(), naive_rank(m));
    }
}

TEST(Echelon, IsReducedAndCanonical)
{
    std::mt19937 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const RationalMatrix m = random_matrix(rng, 4, 6, 4);
        const Echelon e = reduced_row_echelon(m);
        for (std::size_t r = 0; r < e.rows.rows(); ++r) {
            const std::size_t p = e.pivots[r];
            EXPECT_EQ(e.rows(r, p), Rational(1));
            for (std::size_t c = 0; c < p; ++c) EXPECT_TRUE(is_zero(e.rows(r, c)));
            for (std::size_t o = 0; o < e.rows.rows(); ++o)
                if (o != r) EXPECT_TRUE(is_zero(e.rows(o, p)));
            if (r > 0) EXPECT_LT(e.pivots[r - 1], p);
        }
        // A row permutation and scaling spans the same space and gives the same basis.
        RationalMatrix shuffled(m.rows(), m.cols());
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) shuffled(m.rows() - 1 - r, c) = m(r, c) * Rational(r + 2);
        EXPECT_EQ(Subspace::row_space(shuffled), Subspace::row_space(m));
    }
}

TEST(Kernel, Examples)
{
    EXPECT_EQ(kernel(RationalMatrix(2, 2)).dim(), 2u);
    EXPECT_EQ(kernel(RationalMatrix::identity(3)).dim(), 0u);
    EXPECT_EQ(image(RationalMatrix(3, 2)).dim(), 0u);

    std::mt19937 rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        const RationalMatrix m = random_matrix(rng, 4, 6, 5);
        const Subspace k = kernel(m);
        for (const Vector& v : k.basis_vectors()) EXPECT_TRUE(is_zero_vector(m.apply(v)));
    }
}

TEST(Kernel, DifferentialOnOneForms)
{
    const InvariantComplex& cx = nil_omega();
    const RationalMatrix& d1 = cx.matrix(Operator::D, 1);
    const Subspace k = kernel(d1);
    EXPECT_EQ(k, Subspace::span(6, {unit(6, 0), unit(6, 1), unit(6, 2)}));
    EXPECT_EQ(image(d1).dim(), 3u);
}

TEST(Determinant, InverseAndSingular)
{
    std::mt19937 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const RationalMatrix m = random_matrix(rng, 4, 4, 2);
        if (is_zero(determinant(m))) {
            EXPECT_LT(naive_rank(m), 4u);
            EXPECT_THROW(inverse(m), std::domain_error);
        } else {
            EXPECT_EQ(m * inverse(m), RationalMatrix::identity(4));
        }
    }
    RationalMatrix m(2, 2);
    m(0, 0) = 2;
    m(0, 1) = 3;
    m(1, 0) = 4;
    m(1, 1) = 5;
    EXPECT_EQ(determinant(m), Rational(-2));
}

TEST(Subspaces, SumAndIntersectionExamples)
{
    const Subspace x = Subspace::span(2, {unit(2, 0)});
    const Subspace y = Subspace::span(2, {unit(2, 1)});
    EXPECT_EQ(subspace_sum(x, y), Subspace::full(2));
    EXPECT_EQ(subspace_intersect(x, y).dim(), 0u);
    EXPECT_EQ(subspace_sum(x, x), x);
    EXPECT_EQ(subspace_intersect(x, x), x);
    EXPECT_THROW(subspace_sum(x, Subspace(3)), InputError);
}

TEST(Subspaces, GrassmannIdentity)
{
    std::mt19937 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + trial % 6;
        const Subspace a = random_subspace(rng, n, 1 + trial % 4);
        const Subspace b = random_subspace(rng, n, 1 + (trial / 4) % 4);
        const Subspace sum = subspace_sum(a, b);
        const Subspace meet = subspace_intersect(a, b);
        ASSERT_EQ(sum.dim(), naive_rank(stack(a, b)));
        ASSERT_EQ(a.dim() + b.dim(), sum.dim() + meet.dim());
        for (const Vector& v : meet.basis_vectors()) {
            EXPECT_TRUE(a.contains(v));
            EXPECT_TRUE(b.contains(v));
        }
        EXPECT_TRUE(sum.contains(a));
        EXPECT_TRUE(sum.contains(b));
    }
}

TEST(Quotient, Examples)
{
    const Subspace z = Subspace::span(3, {unit(3, 0), unit(3, 1)});
    EXPECT_EQ(quotient(z, z).dimension, 0u);
    const Quotient q = quotient(z, Subspace(3));
    EXPECT_EQ(q.dimension, 2u);
    EXPECT_EQ(q.representatives, z.basis_vectors());
    EXPECT_THROW(quotient(Subspace::span(3, {unit(3, 0)}), Subspace::span(3, {unit(3, 2)})), ComplexError);

    const Quotient partial = quotient(z, Subspace::span(3, {{Rational(1), Rational(1), Rational(0)}}));
    ASSERT_EQ(partial.dimension, 1u);
    EXPECT_FALSE(Subspace::span(3, {{Rational(1), Rational(1), Rational(0)}}).contains(partial.representatives[0]));
}

TEST(Quotient, SecondDeRhamGroup)
{
    const InvariantComplex& cx = nil_omega();
    const Subspace z = kernel(cx.matrix(Operator::D, 2));
    const Subspace b = image(cx.matrix(Operator::D, 1));
    EXPECT_EQ(quotient(z, b).dimension, 5u);
    // Rank-nullity cross-check for the pair d_1, d_2.
    EXPECT_EQ(quotient(z, b).dimension, z.dim() - rank(cx.matrix(Operator::D, 1)));
}
