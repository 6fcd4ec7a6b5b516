#pragma once

#include "dcm/dataset.hpp"

namespace dcm {

/// Per-feature class-range overlap bookkeeping shared by F2/F3/F4.
/// maxmin = max of the two class minima, minmax = min of the class maxima;
/// the open interval (maxmin, minmax) is the ambiguous region.
struct OverlapInterval {
    double maxmin, minmax, maxmax, minmin;
    bool defined = true;  // false when one class has no examples

    double width() const { return minmax - maxmin; }
};

/// Maximum Fisher's discriminant ratio (multiclass form): 1/(1 + max_f r_f)
/// where r_f compares between-class to within-class scatter of feature f.
/// A feature with separated means and zero within-class spread drives the
/// value to 0; a constant feature contributes r = 0.
double f1(const Dataset& d);
double f1(const DatasetView& view);

/// Directional-vector Fisher ratio for a two-class view; multiclass value
/// is the one-versus-one mean.
double f1v(const DatasetView& view);
double f1v(const Dataset& d);

/// Volume of the per-feature overlapping region (product over features).
double f2(const DatasetView& view);
double f2(const Dataset& d);

/// Maximum individual feature efficiency: min_f (examples strictly inside
/// the overlap interval of f) / n.
double f3(const DatasetView& view);
double f3(const Dataset& d);

/// Collective feature efficiency: repeatedly discard examples resolved by
/// the currently most discriminative feature; returns the fraction still
/// ambiguous when features run out.
double f4(const DatasetView& view);
double f4(const Dataset& d);

}  // namespace dcm
