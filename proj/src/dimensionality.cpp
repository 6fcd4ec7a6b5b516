#include "dcm/dimensionality.hpp"

#include <algorithm>
#include <cmath>

#include "dcm/linalg.hpp"

namespace dcm {

PcaSummary pca_summary(const Dataset& d) {
    const std::size_t n = d.n();
    if (n < 2) throw measure_error("PCA requires at least 2 examples");
    const NumericMatrix X = to_numeric(d);

    // Standardize, skipping constant columns entirely.
    std::vector<std::size_t> active;
    std::vector<double> mean(X.cols, 0.0), sd(X.cols, 0.0);
    for (std::size_t f = 0; f < X.cols; ++f) {
        double mu = 0.0;
        for (std::size_t i = 0; i < n; ++i) mu += X.at(i, f);
        mu /= static_cast<double>(n);
        double var = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double c = X.at(i, f) - mu;
            var += c * c;
        }
        var /= static_cast<double>(n - 1);
        if (var > 0.0) {
            mean[f] = mu;
            sd[f] = std::sqrt(var);
            active.push_back(f);
        }
    }
    if (active.empty()) throw measure_error("PCA undefined: all feature columns are constant");

    const std::size_t p = active.size();
    SymmetricMatrix cov(p);
    for (std::size_t a = 0; a < p; ++a) {
        for (std::size_t b = a; b < p; ++b) {
            double acc = 0.0;
            const std::size_t fa = active[a], fb = active[b];
            for (std::size_t i = 0; i < n; ++i)
                acc += (X.at(i, fa) - mean[fa]) / sd[fa] * ((X.at(i, fb) - mean[fb]) / sd[fb]);
            acc /= static_cast<double>(n - 1);
            cov.at(a, b) = acc;
            cov.at(b, a) = acc;
        }
    }

    auto eig = jacobi_eigen(cov);
    PcaSummary out;
    out.eigenvalues = std::move(eig.values);
    double total = 0.0;
    for (double& v : out.eigenvalues) {
        if (v < 0.0) v = 0.0;  // numeric noise around zero
        total += v;
    }
    double cum = 0.0;
    out.m_prime = out.eigenvalues.size();
    for (std::size_t k = 0; k < out.eigenvalues.size(); ++k) {
        cum += out.eigenvalues[k];
        if (cum >= 0.95 * total) {
            out.m_prime = k + 1;
            break;
        }
    }
    return out;
}

double t2(const Dataset& d) {
    return static_cast<double>(d.m()) / static_cast<double>(d.n());
}

double t3(const Dataset& d, const PcaSummary& pca) {
    return static_cast<double>(pca.m_prime) / static_cast<double>(d.n());
}

double t4(const Dataset& d, const PcaSummary& pca) {
    return static_cast<double>(pca.m_prime) / static_cast<double>(d.m());
}

double t3(const Dataset& d) { return t3(d, pca_summary(d)); }
double t4(const Dataset& d) { return t4(d, pca_summary(d)); }

}  // namespace dcm
