#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "dcm/dataset.hpp"
#include "dcm/feature.hpp"
#include "dcm/linearity.hpp"
#include "dcm/neighborhood.hpp"
#include "dcm/synth.hpp"

using namespace dcm;

namespace {

std::string serialized(const Dataset& d) {
    std::ostringstream out;
    save_dataset(d, out);
    return out.str();
}

}  // namespace

TEST_CASE("generators are deterministic under a fixed seed") {
    CHECK(serialized(make_clusters(20, 3, 4.0, 1.0, 5)) ==
          serialized(make_clusters(20, 3, 4.0, 1.0, 5)));
    CHECK(serialized(make_rings(15, {1.0, 2.5}, 9)) == serialized(make_rings(15, {1.0, 2.5}, 9)));
    CHECK(serialized(make_clusters(20, 3, 4.0, 1.0, 5)) !=
          serialized(make_clusters(20, 3, 4.0, 1.0, 6)));
}

TEST_CASE("well separated clusters are linearly separable") {
    const auto d = make_clusters(20, 2, 30.0, 1.0, 3);
    CHECK(l2(d) == doctest::Approx(0.0));
}

TEST_CASE("zero spread collapses clusters onto their centers") {
    const auto d = make_clusters(5, 2, 7.0, 0.0, 1);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(d.column(0).values[i] == doctest::Approx(0.0));
        CHECK(d.column(0).values[i + 5] == doctest::Approx(7.0));
    }
}

TEST_CASE("ring radii must differ") {
    CHECK_THROWS(make_rings(10, {2.0, 2.0}, 1));
    CHECK_THROWS(make_rings(10, {2.0}, 1));
}

TEST_CASE("rings confuse the per-feature view but not the neighborhood view") {
    const auto d = make_rings(60, {1.0, 3.0}, 13);
    CHECK(f1(d) > 0.9);
    CHECK(n3(d) < 0.05);
}

TEST_CASE("alternating line structure") {
    const auto d = make_alternating_line(8);
    CHECK(d.n() == 8);
    CHECK(d.n_classes() == 2);
    CHECK(d.class_counts() == std::vector<std::size_t>{4, 4});
    CHECK(n3(d) == doctest::Approx(1.0));
}

TEST_CASE("flip_labels honors the fraction") {
    const auto d = make_clusters(20, 2, 10.0, 1.0, 21);
    CHECK(serialized(flip_labels(d, 0.0, 3)) == serialized(d));

    const auto inverted = flip_labels(d, 1.0, 3);
    for (std::size_t i = 0; i < d.n(); ++i) CHECK(inverted.label(i) == 1 - d.label(i));

    const auto some = flip_labels(d, 0.25, 3);
    std::size_t changed = 0;
    for (std::size_t i = 0; i < d.n(); ++i) changed += some.label(i) != d.label(i);
    CHECK(changed == 10);
}

TEST_CASE("flipping labels raises the neighborhood complexity") {
    const auto clean = make_clusters(25, 2, 40.0, 1.0, 31);
    const auto noisy = flip_labels(clean, 0.1, 5);
    CHECK(n1(noisy) > n1(clean));
    CHECK(n3(noisy) > n3(clean));
}
