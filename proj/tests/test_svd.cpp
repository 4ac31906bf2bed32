#include <doctest.h>

#include <cmath>

#include "corpuscope/errors.hpp"
#include "corpuscope/rng.hpp"
#include "corpuscope/svd.hpp"
#include "support/jacobi_svd.hpp"

using namespace corpuscope;

namespace {

Matrix random_matrix(Rng& rng, std::size_t m, std::size_t n) {
    Matrix a(m, n);
    for (auto& x : a.data()) x = rng.gaussian();
    return a;
}

double orthonormality_error(const Matrix& q) {
    double worst = 0.0;
    for (std::size_t a = 0; a < q.cols(); ++a) {
        for (std::size_t b = a; b < q.cols(); ++b) {
            double dot = 0.0;
            for (std::size_t i = 0; i < q.rows(); ++i) dot += q(i, a) * q(i, b);
            worst = std::max(worst, std::abs(dot - (a == b ? 1.0 : 0.0)));
        }
    }
    return worst;
}

// squared Frobenius norm of A - U S V^T over the top-k triplets
double reconstruction_error(const Matrix& a, const SvdResult& svd) {
    double err = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            double approx = 0.0;
            for (std::size_t d = 0; d < svd.singular_values.size(); ++d) {
                approx += svd.singular_values[d] * svd.u(i, d) * svd.v(j, d);
            }
            err += (a(i, j) - approx) * (a(i, j) - approx);
        }
    }
    return err;
}

}  // namespace

TEST_CASE("identity spectrum") {
    Matrix eye(3, 3, 0.0);
    for (int i = 0; i < 3; ++i) eye(i, i) = 1.0;
    const auto svd = truncated_svd(eye, 2, 1);
    CHECK(svd.singular_values[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(svd.singular_values[1] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(orthonormality_error(svd.u) < 1e-8);
    CHECK(orthonormality_error(svd.v) < 1e-8);
}

TEST_CASE("rank-1 matrix has a vanishing second singular value") {
    Rng rng(5);
    Matrix a(6, 4);
    std::vector<double> u(6), v(4);
    for (auto& x : u) x = rng.gaussian();
    for (auto& x : v) x = rng.gaussian();
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 4; ++j) a(i, j) = u[i] * v[j];
    }
    const auto svd = truncated_svd(a, 2, 1);
    CHECK(svd.singular_values[1] <= 1e-10);
    CHECK(orthonormality_error(svd.u) < 1e-8);
}

TEST_CASE("top-k reconstruction matches the Jacobi oracle") {
    Rng rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix a = random_matrix(rng, 20, 15);
        const auto ours = truncated_svd(a, 5, std::uint64_t(trial));
        const auto full = oracle::jacobi_svd(a);

        SvdResult oracle_top;
        oracle_top.singular_values.assign(full.singular_values.begin(),
                                          full.singular_values.begin() + 5);
        oracle_top.u = Matrix(20, 5);
        oracle_top.v = Matrix(15, 5);
        for (std::size_t d = 0; d < 5; ++d) {
            for (std::size_t i = 0; i < 20; ++i) oracle_top.u(i, d) = full.u(i, d);
            for (std::size_t j = 0; j < 15; ++j) oracle_top.v(j, d) = full.v(j, d);
        }
        const double ours_err = reconstruction_error(a, ours);
        const double oracle_err = reconstruction_error(a, oracle_top);
        CHECK(std::abs(ours_err - oracle_err) < 1e-6);
        for (std::size_t d = 0; d < 5; ++d) {
            CHECK(ours.singular_values[d] ==
                  doctest::Approx(full.singular_values[d]).epsilon(1e-8));
        }
    }
}

TEST_CASE("tall, wide and square inputs give consistent triplets") {
    Rng rng(11);
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{12, 5},
                        {5, 12},
                        {8, 8}}) {
        const Matrix a = random_matrix(rng, m, n);
        const std::size_t k = 3;
        const auto svd = truncated_svd(a, k, 2);
        CHECK(orthonormality_error(svd.u) < 1e-8);
        CHECK(orthonormality_error(svd.v) < 1e-8);
        for (std::size_t d = 0; d + 1 < k; ++d) {
            CHECK(svd.singular_values[d] >= svd.singular_values[d + 1] - 1e-12);
        }
        // A v_d = sigma_d u_d
        for (std::size_t d = 0; d < k; ++d) {
            for (std::size_t i = 0; i < m; ++i) {
                double av = 0.0;
                for (std::size_t j = 0; j < n; ++j) av += a(i, j) * svd.v(j, d);
                CHECK(av == doctest::Approx(svd.singular_values[d] * svd.u(i, d)).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("determinism per seed") {
    Rng rng(13);
    const Matrix a = random_matrix(rng, 10, 7);
    const auto first = truncated_svd(a, 3, 42);
    const auto second = truncated_svd(a, 3, 42);
    CHECK(first.u == second.u);
    CHECK(first.v == second.v);
    CHECK(first.singular_values == second.singular_values);
}

TEST_CASE("sign convention puts the dominant left loading positive") {
    Rng rng(17);
    const Matrix a = random_matrix(rng, 9, 6);
    const auto svd = truncated_svd(a, 3, 0);
    for (std::size_t d = 0; d < 3; ++d) {
        double best = 0.0;
        for (std::size_t i = 0; i < 9; ++i) {
            if (std::abs(svd.u(i, d)) > std::abs(best)) best = svd.u(i, d);
        }
        CHECK(best > 0.0);
    }
}

TEST_CASE("zero matrix yields zero singular values with orthonormal bases") {
    const Matrix zeros(5, 4, 0.0);
    const auto svd = truncated_svd(zeros, 2, 3);
    CHECK(svd.singular_values[0] == doctest::Approx(0.0));
    CHECK(svd.singular_values[1] == doctest::Approx(0.0));
    CHECK(orthonormality_error(svd.u) < 1e-8);
}

TEST_CASE("bad inputs are rejected") {
    const Matrix a(3, 3, 1.0);
    CHECK_THROWS_AS(truncated_svd(a, 4, 0), ConfigError);
    CHECK_THROWS_AS(truncated_svd(a, 0, 0), ConfigError);
    Matrix nan_matrix(2, 2, 0.0);
    nan_matrix(0, 0) = std::nan("");
    CHECK_THROWS_AS(truncated_svd(nan_matrix, 1, 0), ConfigError);
}
