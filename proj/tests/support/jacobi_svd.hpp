#pragma once

// Test oracle: full SVD of a small dense matrix by one-sided (Hestenes)
// Jacobi rotations. Independent of the subspace-iteration implementation in
// the library.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "corpuscope/matrix.hpp"

namespace oracle {

struct FullSvd {
    corpuscope::Matrix u;                 // m x r
    std::vector<double> singular_values;  // descending, r = min(m, n)
    corpuscope::Matrix v;                 // n x r
};

inline FullSvd jacobi_svd(const corpuscope::Matrix& input) {
    using corpuscope::Matrix;
    const bool transposed = input.rows() < input.cols();
    Matrix a = input;
    if (transposed) {
        a = Matrix(input.cols(), input.rows());
        for (std::size_t i = 0; i < input.rows(); ++i) {
            for (std::size_t j = 0; j < input.cols(); ++j) a(j, i) = input(i, j);
        }
    }
    const std::size_t m = a.rows(), n = a.cols();

    Matrix v(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

    for (int sweep = 0; sweep < 120; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                for (std::size_t i = 0; i < m; ++i) {
                    alpha += a(i, p) * a(i, p);
                    beta += a(i, q) * a(i, q);
                    gamma += a(i, p) * a(i, q);
                }
                off += gamma * gamma;
                if (std::abs(gamma) < 1e-300) continue;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = (zeta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t i = 0; i < m; ++i) {
                    const double ap = a(i, p), aq = a(i, q);
                    a(i, p) = c * ap - s * aq;
                    a(i, q) = s * ap + c * aq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vp = v(i, p), vq = v(i, q);
                    v(i, p) = c * vp - s * vq;
                    v(i, q) = s * vp + c * vq;
                }
            }
        }
        if (off < 1e-32) break;
    }

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) {
        double norm = 0.0;
        for (std::size_t i = 0; i < m; ++i) norm += a(i, j) * a(i, j);
        sigma[j] = std::sqrt(norm);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

    FullSvd result;
    result.singular_values.resize(n);
    result.u = Matrix(m, n);
    result.v = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        result.singular_values[j] = sigma[src];
        for (std::size_t i = 0; i < n; ++i) result.v(i, j) = v(i, src);
        if (sigma[src] > 1e-300) {
            for (std::size_t i = 0; i < m; ++i) result.u(i, j) = a(i, src) / sigma[src];
        }
    }
    if (transposed) std::swap(result.u, result.v);
    return result;
}

}  // namespace oracle
