#pragma once

#include "dcm/dataset.hpp"

namespace dcm {

/// Entropy-based imbalance: 0 for balanced class proportions, 1 in the
/// single-dominant-class limit. `c1_raw` is the plain normalized entropy
/// (1 - c1), kept for reference output.
double c1(const Dataset& d);
double c1_raw(const Dataset& d);

/// Imbalance-ratio measure: 0 for balanced problems, growing toward 1
/// with skew.
double c2(const Dataset& d);

}  // namespace dcm
