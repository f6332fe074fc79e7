#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "alphatheta/graph.hpp"
#include "alphatheta/linalg.hpp"

using namespace alphatheta;

namespace {

SymMatrix random_sym(std::mt19937_64& rng, Index n) {
    std::normal_distribution<double> d(0.0, 1.0);
    Eigen::MatrixXd m(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) m(i, j) = d(rng);
    return SymMatrix(m);
}

} // namespace

TEST(Spectrum, ClosedForms) {
    const auto k2 = sym_eig(adjacency_matrix(named_graph(Family::complete, {2})));
    EXPECT_NEAR(k2.eigenvalues(0), -1.0, 1e-14);
    EXPECT_NEAR(k2.eigenvalues(1), 1.0, 1e-14);

    const auto c5 = sym_eig(adjacency_matrix(named_graph(Family::cycle, {5})));
    EXPECT_NEAR(c5.lambda_min(), 2.0 * std::cos(4.0 * M_PI / 5.0), 1e-12);

    const auto l2 = sym_eig(laplacian_matrix(named_graph(Family::complete, {2})));
    EXPECT_NEAR(l2.eigenvalues(0), 0.0, 1e-14);
    EXPECT_NEAR(l2.eigenvalues(1), 2.0, 1e-14);
}

// Reconstruction and orthonormality on 1000 random symmetric matrices.
TEST(Spectrum, RandomSuite) {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<Index> dim(1, 30);
    for (int k = 0; k < 1000; ++k) {
        const Index n = dim(rng);
        const SymMatrix m = random_sym(rng, n);
        const auto s = sym_eig(m);
        const double scale = std::max(1.0, m.frobenius_norm());
        const Eigen::MatrixXd& v = s.eigenvectors;
        const Eigen::MatrixXd rec = v * s.eigenvalues.asDiagonal() * v.transpose();
        ASSERT_LE((rec - m.dense()).norm(), 1e-10 * scale) << "case " << k;
        ASSERT_LE((v.transpose() * v - Eigen::MatrixXd::Identity(n, n)).norm(), 1e-10) << "case " << k;
        for (Index i = 1; i < n; ++i) ASSERT_LE(s.eigenvalues(i - 1), s.eigenvalues(i));
    }
}

TEST(Spectrum, RejectsNonFinite) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 2);
    m(0, 1) = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(sym_eig(SymMatrix(m)), InputError);
    EXPECT_THROW(SymMatrix(Eigen::MatrixXd::Zero(2, 3)), InputError);
}

TEST(TraceInner, Examples) {
    const Graph c5 = named_graph(Family::cycle, {5});
    const Graph pet = named_graph(Family::petersen, {});
    EXPECT_EQ(trace_inner(SymMatrix::identity(10), adjacency_matrix(pet)), 0.0);
    EXPECT_EQ(trace_inner(SymMatrix::ones(10), laplacian_matrix(pet)), 0.0);
    EXPECT_EQ(trace_inner(SymMatrix::ones(5), adjacency_matrix(c5)), 10.0);
    EXPECT_THROW(trace_inner(SymMatrix::identity(2), SymMatrix::identity(3)), InputError);
}

TEST(TraceInner, SymmetricAndBilinear) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coef(-3.0, 3.0);
    for (int k = 0; k < 200; ++k) {
        const Index n = 1 + k % 12;
        const SymMatrix a = random_sym(rng, n);
        const SymMatrix b = random_sym(rng, n);
        const SymMatrix c = random_sym(rng, n);
        const double s = coef(rng);
        const double t = coef(rng);
        const double scale = 1.0 + a.frobenius_norm() * (b.frobenius_norm() + c.frobenius_norm()) * 4.0;
        EXPECT_NEAR(trace_inner(a, b), trace_inner(b, a), 1e-12 * scale);
        EXPECT_NEAR(trace_inner(a, s * b + t * c), s * trace_inner(a, b) + t * trace_inner(a, c), 1e-12 * scale);
    }
}

TEST(Hadamard, Examples) {
    std::mt19937_64 rng(3);
    const SymMatrix x = random_sym(rng, 6);
    const Eigen::MatrixXd diag = x.dense().diagonal().asDiagonal();
    EXPECT_EQ(hadamard(x, SymMatrix::identity(6)).dense(), diag);
    EXPECT_EQ(hadamard(SymMatrix::ones(6), x).dense(), x.dense());
    const Graph g = named_graph(Family::petersen, {});
    const auto m = matrices(g);
    EXPECT_EQ(hadamard(to_real(m.adjacency), to_real(m.complement_adjacency)).frobenius_norm(), 0.0);
    EXPECT_THROW(hadamard(SymMatrix::identity(2), SymMatrix::identity(3)), InputError);
}

TEST(PsdCheck, Examples) {
    EXPECT_TRUE(psd_check(laplacian_matrix(named_graph(Family::cycle, {5})), 1e-12).is_psd);
    const auto k2 = psd_check(adjacency_matrix(named_graph(Family::complete, {2})), 1e-12);
    EXPECT_FALSE(k2.is_psd);
    EXPECT_NEAR(k2.lambda_min, -1.0, 1e-14);
    const auto c5 = psd_check(a_alpha(named_graph(Family::cycle, {5}), 1.0 / std::sqrt(5.0)), 1e-12);
    EXPECT_NEAR(c5.lambda_min, 0.0, 1e-6);
    EXPECT_THROW(psd_check(SymMatrix::identity(2), -1.0), InputError);
}

TEST(PsdCheck, RandomGramMatrices) {
    std::mt19937_64 rng(99);
    std::normal_distribution<double> d(0.0, 1.0);
    for (int k = 0; k < 300; ++k) {
        const Index n = 1 + k % 20;
        const Index r = 1 + k % 7;
        Eigen::MatrixXd b(n, r);
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < r; ++j) b(i, j) = d(rng);
        EXPECT_TRUE(psd_check(SymMatrix(Eigen::MatrixXd(b * b.transpose())), 1e-9).is_psd) << "case " << k;
    }
}

TEST(Cholesky, PositiveDefiniteOnly) {
    Eigen::MatrixXd m(2, 2);
    m << 4, 2, 2, 3;
    const auto l = cholesky_lower(m);
    ASSERT_TRUE(l.has_value());
    EXPECT_LE((*l * l->transpose() - m).norm(), 1e-14);
    EXPECT_FALSE(cholesky_lower(adjacency_matrix(named_graph(Family::complete, {2})).dense()).has_value());
    EXPECT_FALSE(cholesky_lower(Eigen::MatrixXd::Zero(3, 3)).has_value());
}
