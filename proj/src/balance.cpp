#include "dcm/balance.hpp"

#include <cmath>

namespace dcm {

double c1_raw(const Dataset& d) {
    const std::size_t nc = d.n_classes();
    if (nc < 2) throw measure_error("C1 requires at least 2 classes");
    const double n = static_cast<double>(d.n());
    double entropy = 0.0;
    for (std::size_t count : d.class_counts()) {
        const double p = static_cast<double>(count) / n;
        entropy -= p * std::log(p);
    }
    return entropy / std::log(static_cast<double>(nc));
}

double c1(const Dataset& d) { return 1.0 - c1_raw(d); }

double c2(const Dataset& d) {
    const std::size_t nc = d.n_classes();
    if (nc < 2) throw measure_error("C2 requires at least 2 classes");
    const double n = static_cast<double>(d.n());
    double sum = 0.0;
    for (std::size_t count : d.class_counts()) {
        const double ci = static_cast<double>(count);
        if (n - ci <= 0.0) throw measure_error("C2 undefined: one class covers the dataset");
        sum += ci / (n - ci);
    }
    const double ir = (static_cast<double>(nc) - 1.0) / static_cast<double>(nc) * sum;
    return 1.0 - 1.0 / ir;
}

}  // namespace dcm
