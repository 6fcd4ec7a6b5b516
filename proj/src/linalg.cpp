#include "dcm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dcm {

EigenDecomposition jacobi_eigen(SymmetricMatrix s, double tol) {
    const std::size_t n = s.n;
    EigenDecomposition out;
    if (n == 0) return out;

    // V starts as identity and accumulates the rotations.
    std::vector<std::vector<double>> V(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) V[i][i] = 1.0;

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(s.at(i, i)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) scale = std::max(scale, std::abs(s.at(i, j)));
    const double threshold = tol * std::max(scale, 1.0);

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off = std::max(off, std::abs(s.at(i, j)));
        if (off <= threshold) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = s.at(p, q);
                if (std::abs(apq) <= threshold) continue;
                const double app = s.at(p, p), aqq = s.at(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double skp = s.at(k, p), skq = s.at(k, q);
                    s.at(k, p) = c * skp - sn * skq;
                    s.at(k, q) = sn * skp + c * skq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double spk = s.at(p, k), sqk = s.at(q, k);
                    s.at(p, k) = c * spk - sn * sqk;
                    s.at(q, k) = sn * spk + c * sqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = V[k][p], vkq = V[k][q];
                    V[k][p] = c * vkp - sn * vkq;
                    V[k][q] = sn * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return s.at(a, a) > s.at(b, b); });

    out.values.resize(n);
    out.vectors.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = s.at(order[k], order[k]);
        out.vectors[k].resize(n);
        for (std::size_t i = 0; i < n; ++i) out.vectors[k][i] = V[i][order[k]];
    }
    return out;
}

std::vector<double> pseudo_solve(const SymmetricMatrix& m, const std::vector<double>& b,
                                 double rel_cutoff) {
    if (m.n != b.size()) throw std::invalid_argument("pseudo_solve: size mismatch");
    auto eig = jacobi_eigen(m);
    double lmax = 0.0;
    for (double v : eig.values) lmax = std::max(lmax, std::abs(v));
    const double cutoff = rel_cutoff * lmax;

    std::vector<double> x(m.n, 0.0);
    for (std::size_t k = 0; k < m.n; ++k) {
        if (std::abs(eig.values[k]) <= cutoff) continue;
        double proj = 0.0;
        for (std::size_t i = 0; i < m.n; ++i) proj += eig.vectors[k][i] * b[i];
        proj /= eig.values[k];
        for (std::size_t i = 0; i < m.n; ++i) x[i] += proj * eig.vectors[k][i];
    }
    return x;
}

}  // namespace dcm
