#include "corpuscope/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "corpuscope/errors.hpp"
#include "corpuscope/rng.hpp"

namespace corpuscope {

namespace {

void fix_signs(SvdResult& r) {
    const std::size_t m = r.u.rows(), n = r.v.rows();
    for (std::size_t j = 0; j < r.singular_values.size(); ++j) {
        std::size_t arg = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (std::abs(r.u(i, j)) > best) {
                best = std::abs(r.u(i, j));
                arg = i;
            }
        }
        if (r.u(arg, j) < 0.0) {
            for (std::size_t i = 0; i < m; ++i) r.u(i, j) = -r.u(i, j);
            for (std::size_t i = 0; i < n; ++i) r.v(i, j) = -r.v(i, j);
        }
    }
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    }
    return t;
}

// c = a * b
Matrix multiply(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows(), b.cols(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* ai = a.row(i);
        double* ci = c.row(i);
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const double v = ai[l];
            if (v == 0.0) continue;
            const double* bl = b.row(l);
            for (std::size_t j = 0; j < b.cols(); ++j) ci[j] += v * bl[j];
        }
    }
    return c;
}

double column_dot(const Matrix& m, std::size_t a, std::size_t b) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, a) * m(i, b);
    return s;
}

// In-place modified Gram-Schmidt, run twice for stability. Columns that
// vanish are replaced by the first canonical basis vector orthogonal to the
// ones already kept, so the basis stays full even for rank-deficient input.
void orthonormalize(Matrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t j = 0; j < cols; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t p = 0; p < j; ++p) {
                const double proj = column_dot(m, p, j);
                for (std::size_t i = 0; i < rows; ++i) m(i, j) -= proj * m(i, p);
            }
        }
        double norm = std::sqrt(column_dot(m, j, j));
        if (norm < 1e-150) {
            // deterministic fallback basis column
            bool placed = false;
            for (std::size_t e = 0; e < rows && !placed; ++e) {
                for (std::size_t i = 0; i < rows; ++i) m(i, j) = (i == e) ? 1.0 : 0.0;
                for (int pass = 0; pass < 2; ++pass) {
                    for (std::size_t p = 0; p < j; ++p) {
                        const double proj = column_dot(m, p, j);
                        for (std::size_t i = 0; i < rows; ++i) m(i, j) -= proj * m(i, p);
                    }
                }
                norm = std::sqrt(column_dot(m, j, j));
                if (norm > 1e-8) placed = true;
            }
            if (!placed) continue;  // more columns than rank of the space
        }
        for (std::size_t i = 0; i < rows; ++i) m(i, j) /= norm;
    }
}

// Cyclic Jacobi eigendecomposition of a small symmetric matrix; eigenvalues
// descending, eigenvectors in columns.
void symmetric_eigen(Matrix s, std::vector<double>& values, Matrix& vectors) {
    const std::size_t n = s.rows();
    vectors = Matrix(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) vectors(i, i) = 1.0;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) off += s(p, q) * s(p, q);
        }
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(s(p, q)) < 1e-300) continue;
                const double theta = (s(q, q) - s(p, p)) / (2.0 * s(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double snt = t * c;
                for (std::size_t i = 0; i < n; ++i) {
                    const double sip = s(i, p), siq = s(i, q);
                    s(i, p) = c * sip - snt * siq;
                    s(i, q) = snt * sip + c * siq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double spi = s(p, i), sqi = s(q, i);
                    s(p, i) = c * spi - snt * sqi;
                    s(q, i) = snt * spi + c * sqi;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vip = vectors(i, p), viq = vectors(i, q);
                    vectors(i, p) = c * vip - snt * viq;
                    vectors(i, q) = snt * vip + c * viq;
                }
            }
        }
    }
    values.resize(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = s(i, i);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    std::vector<double> sorted_values(n);
    Matrix sorted_vectors(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        sorted_values[j] = values[order[j]];
        for (std::size_t i = 0; i < n; ++i) sorted_vectors(i, j) = vectors(i, order[j]);
    }
    values = std::move(sorted_values);
    vectors = std::move(sorted_vectors);
}

}  // namespace

SvdResult truncated_svd(const Matrix& a, std::size_t k, std::uint64_t seed, int max_iterations,
                        double tol) {
    const std::size_t m = a.rows(), n = a.cols();
    if (k == 0 || k > std::min(m, n)) {
        throw ConfigError("truncated_svd: k must be in [1, min(rows, cols)]");
    }
    for (double v : a.data()) {
        if (!std::isfinite(v)) throw ConfigError("truncated_svd: non-finite entry");
    }

    // iterate on the thin side so the working subspace lives in the smaller
    // dimension
    if (m < n) {
        SvdResult t = truncated_svd(transpose(a), k, seed, max_iterations, tol);
        SvdResult swapped{std::move(t.v), std::move(t.singular_values), std::move(t.u)};
        fix_signs(swapped);
        return swapped;
    }

    const std::size_t block = std::min(n, k + 8);
    Rng rng(derive_seed(seed, 0x5fd));
    Matrix v(n, block);
    for (auto& x : v.data()) x = rng.gaussian();
    orthonormalize(v);

    const Matrix at = transpose(a);
    std::vector<double> prev_sigma(block, 0.0);
    for (int iter = 0; iter < max_iterations; ++iter) {
        Matrix y = multiply(a, v);   // m x block
        Matrix z = multiply(at, y);  // n x block, = (A^T A) V

        std::vector<double> sigma(block, 0.0);
        for (std::size_t j = 0; j < block; ++j) {
            sigma[j] = std::sqrt(std::sqrt(std::max(0.0, column_dot(z, j, j))));
        }
        v = std::move(z);
        orthonormalize(v);

        double delta = 0.0;
        for (std::size_t j = 0; j < std::min(block, k); ++j) {
            const double scale = std::max(sigma[j], 1e-300);
            delta = std::max(delta, std::abs(sigma[j] - prev_sigma[j]) / scale);
        }
        prev_sigma = sigma;
        if (iter > 0 && delta < tol) break;
    }

    // Rayleigh-Ritz on the converged subspace: eigen-decompose (AV)^T (AV)
    Matrix av = multiply(a, v);
    Matrix small(block, block);
    for (std::size_t i = 0; i < block; ++i) {
        for (std::size_t j = i; j < block; ++j) {
            const double d = column_dot(av, i, j);
            small(i, j) = d;
            small(j, i) = d;
        }
    }
    std::vector<double> eigenvalues;
    Matrix w;
    symmetric_eigen(std::move(small), eigenvalues, w);

    SvdResult result;
    result.singular_values.resize(k);
    result.u = Matrix(m, k);
    result.v = Matrix(n, k);

    // V' = V W, U' = A V' / sigma
    Matrix v_ritz = multiply(v, w);
    Matrix u_ritz = multiply(av, w);
    for (std::size_t j = 0; j < k; ++j) {
        const double sigma = std::sqrt(std::max(0.0, eigenvalues[j]));
        result.singular_values[j] = sigma;
        for (std::size_t i = 0; i < n; ++i) result.v(i, j) = v_ritz(i, j);
        if (sigma > 1e-150) {
            for (std::size_t i = 0; i < m; ++i) result.u(i, j) = u_ritz(i, j) / sigma;
        } else {
            for (std::size_t i = 0; i < m; ++i) result.u(i, j) = 0.0;
        }
    }
    // null-direction left vectors: deterministic orthonormal completion
    orthonormalize(result.u);

    fix_signs(result);
    return result;
}

}  // namespace corpuscope
