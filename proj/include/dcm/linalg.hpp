#pragma once

#include <cstddef>
#include <vector>

namespace dcm {

/// Dense symmetric matrix, row-major, square.
struct SymmetricMatrix {
    std::size_t n = 0;
    std::vector<double> a;

    explicit SymmetricMatrix(std::size_t dim = 0) : n(dim), a(dim * dim, 0.0) {}
    double at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
    double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
};

struct EigenDecomposition {
    std::vector<double> values;               // descending
    std::vector<std::vector<double>> vectors; // vectors[k] pairs with values[k]
};

/// Cyclic Jacobi diagonalization. Iterates sweeps of plane rotations until
/// every off-diagonal entry is below `tol` (absolute, relative to the
/// largest diagonal magnitude). Intended for the small matrices (m <= a
/// few hundred) that arise from per-feature scatter and covariance.
EigenDecomposition jacobi_eigen(SymmetricMatrix s, double tol = 1e-12);

/// x = M^+ b via the eigendecomposition of symmetric M; eigenvalues below
/// `rel_cutoff * max|lambda|` are treated as zero.
std::vector<double> pseudo_solve(const SymmetricMatrix& m, const std::vector<double>& b,
                                 double rel_cutoff = 1e-10);

}  // namespace dcm
