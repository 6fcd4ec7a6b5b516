#include "dcm/neighborhood.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "dcm/linearity.hpp"

namespace dcm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool multiclass(const std::vector<int>& labels) {
    for (std::size_t i = 1; i < labels.size(); ++i)
        if (labels[i] != labels[0]) return true;
    return false;
}

std::vector<std::pair<std::size_t, double>> all_nearest_enemies(
    const DistanceMatrix& D, const std::vector<int>& labels) {
    std::vector<std::pair<std::size_t, double>> ne(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) ne[i] = nearest_enemy(D, labels, i);
    return ne;
}

}  // namespace

std::vector<MstEdge> minimum_spanning_tree(const DistanceMatrix& D) {
    const std::size_t n = D.size();
    std::vector<MstEdge> edges;
    if (n < 2) return edges;

    std::vector<bool> in_tree(n, false);
    std::vector<double> key(n, kInf);
    std::vector<std::size_t> parent(n, 0);
    in_tree[0] = true;
    for (std::size_t v = 1; v < n; ++v) {
        key[v] = D(0, v);
        parent[v] = 0;
    }

    for (std::size_t added = 1; added < n; ++added) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (in_tree[v]) continue;
            if (best == n || key[v] < key[best]) best = v;
        }
        in_tree[best] = true;
        edges.push_back({std::min(best, parent[best]), std::max(best, parent[best]), key[best]});
        for (std::size_t v = 0; v < n; ++v) {
            if (in_tree[v]) continue;
            const double d = D(best, v);
            if (d < key[v] || (d == key[v] && best < parent[v])) {
                key[v] = d;
                parent[v] = best;
            }
        }
    }
    return edges;
}

std::pair<std::size_t, double> nearest_enemy(const DistanceMatrix& D,
                                             const std::vector<int>& labels, std::size_t i) {
    std::size_t best = labels.size();
    double best_d = kInf;
    for (std::size_t j = 0; j < labels.size(); ++j) {
        if (labels[j] == labels[i]) continue;
        if (D(i, j) < best_d) {
            best_d = D(i, j);
            best = j;
        }
    }
    if (best == labels.size()) throw measure_error("nearest enemy undefined: single-class data");
    return {best, best_d};
}

double n1(const DatasetView& view, const DistanceMatrix& D) {
    const auto labels = view.labels();
    if (!multiclass(labels)) return 0.0;
    const auto mst = minimum_spanning_tree(D);
    std::vector<bool> borderline(labels.size(), false);
    for (const auto& e : mst) {
        if (labels[e.a] != labels[e.b]) {
            borderline[e.a] = true;
            borderline[e.b] = true;
        }
    }
    std::size_t count = 0;
    for (bool b : borderline) count += b;
    return static_cast<double>(count) / static_cast<double>(labels.size());
}

double n2(const DatasetView& view, const DistanceMatrix& D) {
    const auto labels = view.labels();
    if (!multiclass(labels)) throw measure_error("N2 requires at least 2 classes");
    const std::size_t n = labels.size();

    double intra = 0.0, extra = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double best_same = kInf, best_enemy = kInf;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            if (labels[j] == labels[i])
                best_same = std::min(best_same, D(i, j));
            else
                best_enemy = std::min(best_enemy, D(i, j));
        }
        if (std::isfinite(best_same)) intra += best_same;  // singletons contribute 0
        extra += best_enemy;
    }
    if (extra <= 0.0) return intra > 0.0 ? 1.0 : 0.0;
    const double ratio = intra / extra;
    return ratio / (1.0 + ratio);
}

double n3(const DatasetView& view, const DistanceMatrix& D) {
    const auto labels = view.labels();
    const std::size_t n = labels.size();
    if (n < 2) throw measure_error("N3 requires at least 2 examples");
    std::size_t errors = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t nn = n;
        double best = kInf;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            if (D(i, j) < best) {
                best = D(i, j);
                nn = j;
            }
        }
        if (labels[nn] != labels[i]) ++errors;
    }
    return static_cast<double>(errors) / static_cast<double>(n);
}

double n4(const DatasetView& view, std::uint64_t seed) {
    const auto labels = view.labels();
    const std::size_t n = view.size(), m = view.m();
    if (n < 2) throw measure_error("N4 requires at least 2 examples");

    // Feature ranges over the view, for Gower distances to synthetic points.
    std::vector<double> ranges(m, 0.0);
    for (std::size_t f = 0; f < m; ++f) {
        if (!view.base().column(f).is_numeric()) continue;
        double lo = view.value(0, f), hi = lo;
        for (std::size_t k = 1; k < n; ++k) {
            lo = std::min(lo, view.value(k, f));
            hi = std::max(hi, view.value(k, f));
        }
        ranges[f] = hi - lo;
    }

    const auto plan = interpolation_plan(labels, seed);
    std::mt19937_64 coin_rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::bernoulli_distribution coin(0.5);

    std::size_t errors = 0;
    std::vector<double> point(m);
    for (const auto& draw : plan) {
        for (std::size_t f = 0; f < m; ++f) {
            const double vi = view.value(draw.parent_i, f);
            const double vj = view.value(draw.parent_j, f);
            if (view.base().column(f).is_numeric())
                point[f] = draw.coefficient * vi + (1.0 - draw.coefficient) * vj;
            else
                point[f] = coin(coin_rng) ? vi : vj;
        }
        // 1NN over the original rows by Gower distance.
        std::size_t nn = n;
        double best = kInf;
        for (std::size_t k = 0; k < n; ++k) {
            double sum = 0.0;
            for (std::size_t f = 0; f < m; ++f) {
                if (view.base().column(f).is_numeric()) {
                    if (ranges[f] > 0.0)
                        sum += std::abs(point[f] - view.value(k, f)) / ranges[f];
                } else {
                    sum += point[f] == view.value(k, f) ? 0.0 : 1.0;
                }
            }
            sum /= static_cast<double>(m);
            if (sum < best) {
                best = sum;
                nn = k;
            }
        }
        if (labels[nn] != draw.label) ++errors;
    }
    return static_cast<double>(errors) / static_cast<double>(plan.size());
}

HypersphereCover t1_cover(const DistanceMatrix& D, const std::vector<int>& labels) {
    const std::size_t n = labels.size();
    if (!multiclass(labels)) throw measure_error("T1 requires at least 2 classes");
    const auto ne = all_nearest_enemies(D, labels);

    HypersphereCover cover;
    cover.radius.assign(n, -1.0);
    cover.absorbed.assign(n, false);

    for (std::size_t start = 0; start < n; ++start) {
        if (cover.radius[start] >= 0.0) continue;
        // Walk the nearest-enemy chain until a mutual pair or a memoized
        // radius, then unwind. The chain cannot revisit a node.
        std::vector<std::size_t> chain;
        std::size_t cur = start;
        while (true) {
            const std::size_t j = ne[cur].first;
            if (cover.radius[j] >= 0.0) {
                cover.radius[cur] = std::max(0.0, ne[cur].second - cover.radius[j]);
                break;
            }
            if (ne[j].first == cur) {  // mutual nearest enemies
                cover.radius[cur] = cover.radius[j] = ne[cur].second / 2.0;
                break;
            }
            chain.push_back(cur);
            cur = j;
        }
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            const std::size_t j = ne[*it].first;
            cover.radius[*it] = std::max(0.0, ne[*it].second - cover.radius[j]);
        }
    }

    // Sphere i vanishes if it lies entirely inside some other sphere.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && D(i, j) + cover.radius[i] <= cover.radius[j]) {
                cover.absorbed[i] = true;
                break;
            }
    return cover;
}

double t1(const DatasetView& view, const DistanceMatrix& D) {
    const auto labels = view.labels();
    const auto cover = t1_cover(D, labels);
    std::size_t kept = 0;
    for (bool a : cover.absorbed) kept += !a;
    return static_cast<double>(kept) / static_cast<double>(labels.size());
}

std::vector<std::size_t> local_set_cardinality(const DistanceMatrix& D,
                                               const std::vector<int>& labels) {
    const std::size_t n = labels.size();
    if (!multiclass(labels)) throw measure_error("LSC requires at least 2 classes");
    std::vector<std::size_t> card(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const double dne = nearest_enemy(D, labels, i).second;
        std::size_t c = 1;  // the example itself
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && D(i, j) < dne) ++c;
        card[i] = c;
    }
    return card;
}

double lsc(const DatasetView& view, const DistanceMatrix& D) {
    const auto card = local_set_cardinality(D, view.labels());
    double sum = 0.0;
    for (std::size_t c : card) sum += static_cast<double>(c);
    const double n = static_cast<double>(card.size());
    return 1.0 - sum / (n * n);
}

double n1(const Dataset& d) { return n1(d.full_view(), distance_matrix(d)); }
double n2(const Dataset& d) { return n2(d.full_view(), distance_matrix(d)); }
double n3(const Dataset& d) { return n3(d.full_view(), distance_matrix(d)); }
double n4(const Dataset& d, std::uint64_t seed) { return n4(d.full_view(), seed); }
double t1(const Dataset& d) { return t1(d.full_view(), distance_matrix(d)); }
double lsc(const Dataset& d) { return lsc(d.full_view(), distance_matrix(d)); }

}  // namespace dcm
