#pragma once

#include <cstdint>
#include <vector>

#include "corpuscope/matrix.hpp"

namespace corpuscope {

struct SvdResult {
    Matrix u;                             // rows x k, orthonormal columns
    std::vector<double> singular_values;  // k values, descending
    Matrix v;                             // cols x k, orthonormal columns
};

// Top-k singular triplets by seeded subspace iteration with a Rayleigh-Ritz
// finish. Deterministic for a given seed; columns orthonormal to ~1e-12.
// Sign convention: the largest-magnitude entry of each left vector is
// positive. Throws ConfigError when k exceeds min(rows, cols) and on
// non-finite input.
SvdResult truncated_svd(const Matrix& a, std::size_t k, std::uint64_t seed = 0,
                        int max_iterations = 1000, double tol = 1e-13);

}  // namespace corpuscope
