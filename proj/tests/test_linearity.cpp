#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dcm/dataset.hpp"
#include "dcm/linearity.hpp"
#include "dcm/synth.hpp"
#include "oracles.hpp"

using namespace dcm;

namespace {

NumericMatrix matrix(std::size_t cols, const std::vector<double>& data) {
    NumericMatrix X;
    X.cols = cols;
    X.rows = data.size() / cols;
    X.data = data;
    return X;
}

// Random two-class points with the +1 class shifted by `gap` on axis 0.
std::pair<NumericMatrix, std::vector<int>> two_blobs(std::mt19937_64& rng, std::size_t per_class,
                                                     std::size_t dims, double gap) {
    NumericMatrix X;
    X.rows = 2 * per_class;
    X.cols = dims;
    X.data.resize(X.rows * dims);
    std::vector<int> y(X.rows);
    std::normal_distribution<double> noise(0.0, 1.0);
    for (std::size_t i = 0; i < X.rows; ++i) {
        const int label = i < per_class ? -1 : +1;
        y[i] = label;
        for (std::size_t f = 0; f < dims; ++f)
            X.at(i, f) = noise(rng) + (f == 0 && label > 0 ? gap : 0.0);
    }
    return {X, y};
}

}  // namespace

TEST_CASE("two-point problem recovers the max-margin separator") {
    const auto X = matrix(1, {0.0, 2.0});
    const std::vector<int> y = {-1, +1};
    const auto model = train_linear(X, y);
    CHECK(model.converged);
    CHECK(model.weights[0] == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(model.bias == doctest::Approx(-1.0).epsilon(1e-6));
    CHECK(model.slacks[0] == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(model.slacks[1] == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("separable data trains to zero slack") {
    std::mt19937_64 rng(31);
    const auto [X, y] = two_blobs(rng, 20, 3, 12.0);
    const auto model = train_linear(X, y);
    CHECK(model.converged);
    for (double s : model.slacks) CHECK(s < 1e-6);
    CHECK(l1_from_model(model) == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(l2_from_model(model, X, y) == 0.0);
}

TEST_CASE("coincident opposite points both violate the margin") {
    const auto X = matrix(2, {0.3, 0.7, 0.3, 0.7});
    const std::vector<int> y = {-1, +1};
    const auto model = train_linear(X, y);
    CHECK(model.slacks[0] >= 1.0 - 1e-9);
    CHECK(model.slacks[1] >= 1.0 - 1e-9);
}

TEST_CASE("dual solution satisfies feasibility, stationarity and slack identity") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 8; ++trial) {
        const auto [X, y] = two_blobs(rng, 12, 2, trial % 2 == 0 ? 1.0 : 6.0);
        const auto model = train_linear(X, y);
        REQUIRE(model.alpha.size() == X.rows);
        std::vector<double> w(X.cols, 0.0);
        for (std::size_t k = 0; k < X.rows; ++k) {
            CHECK(model.alpha[k] >= -1e-12);
            CHECK(model.alpha[k] <= model.C + 1e-12);
            for (std::size_t f = 0; f < X.cols; ++f)
                w[f] += model.alpha[k] * y[k] * X.at(k, f);
        }
        for (std::size_t f = 0; f < X.cols; ++f)
            CHECK(w[f] == doctest::Approx(model.weights[f]).epsilon(1e-6));
        for (std::size_t k = 0; k < X.rows; ++k) {
            const double margin = y[k] * model.score(X.row_ptr(k));
            CHECK(model.slacks[k] == doctest::Approx(std::max(0.0, 1.0 - margin)).epsilon(1e-6));
        }
        // zero error distance implies zero error rate
        if (l1_from_model(model) < 1e-12) CHECK(l2_from_model(model, X, y) == 0.0);
    }
}

TEST_CASE("l1 algebra on crafted slacks") {
    LinearModel m;
    m.slacks = {1.0, 1.0};  // mean slack 1 -> 0.5
    CHECK(l1_from_model(m) == doctest::Approx(0.5));
    m.slacks = {0.0, 0.0, 0.0};
    CHECK(l1_from_model(m) == doctest::Approx(0.0));
}

TEST_CASE("l1 matches the exact small-problem optimum") {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 4 + trial % 3;
        NumericMatrix X;
        X.rows = n;
        X.cols = 2;
        X.data.resize(n * 2);
        std::vector<int> y(n);
        for (std::size_t k = 0; k < n; ++k) {
            X.at(k, 0) = unit(rng);
            X.at(k, 1) = unit(rng);
            y[k] = k % 2 == 0 ? -1 : +1;
        }
        const auto exact = oracle::svm_active_set(X, y, 1.0);
        const auto model = train_linear(X, y);
        const double expected = exact.mean_slack / (1.0 + exact.mean_slack);
        CHECK(l1_from_model(model) == doctest::Approx(expected).epsilon(1e-3));
    }
}

TEST_CASE("l2 is bounded below by the best threshold classifier in 1-D") {
    FeatureColumn col;
    col.name = "x";
    col.values = {0.0, 1.0, 10.0, 5.0};
    const Dataset d({col}, {0, 0, 0, 1}, {"a", "b"}, "line");
    const auto view = ovo_views(d)[0];
    const auto best = oracle::min_threshold_errors(col.values, {-1, -1, -1, +1});
    CHECK(best == 1);
    CHECK(l2(view) >= doctest::Approx(0.25));
}

TEST_CASE("interpolation keeps class proportions and bounding boxes") {
    std::mt19937_64 rng(55);
    const auto [X, y] = two_blobs(rng, 15, 2, 3.0);
    std::vector<int> labels = y;
    for (std::size_t k = 0; k < 5; ++k) labels[k] = +1;  // 20 positive / 10 negative

    const auto samples = interpolate(X, labels, 99);
    REQUIRE(samples.size() == labels.size());
    std::size_t pos = 0;
    for (const auto& s : samples) pos += s.label == +1;
    CHECK(pos == 20);

    for (const auto& s : samples) {
        CHECK(s.coefficient >= 0.0);
        CHECK(s.coefficient <= 1.0);
        CHECK(labels[s.parent_i] == s.label);
        CHECK(labels[s.parent_j] == s.label);
        for (std::size_t f = 0; f < X.cols; ++f) {
            // exact convex-combination contract; alpha=0 reproduces parent j
            CHECK(s.point[f] == s.coefficient * X.at(s.parent_i, f) +
                                    (1.0 - s.coefficient) * X.at(s.parent_j, f));
            const double lo = std::min(X.at(s.parent_i, f), X.at(s.parent_j, f));
            const double hi = std::max(X.at(s.parent_i, f), X.at(s.parent_j, f));
            CHECK(s.point[f] >= lo - 1e-12);
            CHECK(s.point[f] <= hi + 1e-12);
        }
    }
}

TEST_CASE("interpolation is deterministic and seed-sensitive") {
    std::mt19937_64 rng(5);
    const auto [X, y] = two_blobs(rng, 10, 2, 2.0);
    const auto a = interpolate(X, y, 7);
    const auto b = interpolate(X, y, 7);
    const auto c = interpolate(X, y, 8);
    REQUIRE(a.size() == b.size());
    bool all_equal = true, any_diff_seed = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        all_equal = all_equal && a[k].point == b[k].point;
        any_diff_seed = any_diff_seed || a[k].point != c[k].point;
    }
    CHECK(all_equal);
    CHECK(any_diff_seed);
}

TEST_CASE("singleton classes interpolate with themselves") {
    const auto plan = interpolation_plan({0, 1, 1, 1}, 13);
    REQUIRE(plan.size() == 4);
    CHECK(plan[0].label == 0);
    CHECK(plan[0].parent_i == 0);
    CHECK(plan[0].parent_j == 0);
}

TEST_CASE("l3 vanishes for distant convex clusters and repeats under a seed") {
    const auto d = make_clusters(25, 2, 20.0, 0.5, 3);
    const auto view = ovo_views(d)[0];
    CHECK(l3(view, 17) == doctest::Approx(0.0));
    CHECK(l3(view, 17) == doctest::Approx(l3(view, 17)));
}

TEST_CASE("interlocking concavities push l3 above l2") {
    // Pincer shape: one class hugs the boundary and also reaches deep
    // behind the other. The deep arm points are the only training errors,
    // but wall-to-arm interpolants land in enemy territory far more often
    // than the originals do, so the interpolated error rate rises.
    FeatureColumn cx, cy;
    cx.name = "x";
    cy.name = "y";
    std::vector<int> labels;
    auto add = [&](double x, double y, int label) {
        cx.values.push_back(x);
        cy.values.push_back(y);
        labels.push_back(label);
    };
    for (int i = 0; i < 60; ++i) add(0.5 * (i % 5) / 4.0, -2.0 + 4.0 * (i % 7) / 6.0, 0);
    for (int i = 0; i < 12; ++i) add(12.0 - 0.5 * (i % 3) / 2.0, i % 2 ? 1.0 : -1.0, 0);
    for (int i = 0; i < 80; ++i) add(4.5 + 1.0 * (i % 5) / 4.0, -1.5 + 3.0 * (i % 4) / 3.0, 1);
    const Dataset d({cx, cy}, labels, {"wall", "blob"}, "pincer");

    const auto view = ovo_views(d)[0];
    const double e_l2 = l2(view);
    const double e_l3 = l3(view, 17);
    CHECK(e_l2 < 0.1);
    CHECK(e_l3 > e_l2);
}
