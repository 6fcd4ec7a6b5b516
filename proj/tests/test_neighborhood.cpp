#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "dcm/dataset.hpp"
#include "dcm/distance.hpp"
#include "dcm/neighborhood.hpp"
#include "dcm/synth.hpp"
#include "oracles.hpp"

using namespace dcm;

namespace {

Dataset from_csv(const std::string& text) {
    std::istringstream in(text);
    return load_dataset(in, "class");
}

Dataset line_dataset(const std::vector<double>& a, const std::vector<double>& b) {
    FeatureColumn col;
    col.name = "x";
    col.kind = ColumnKind::numeric;
    std::vector<int> labels;
    for (double v : a) {
        col.values.push_back(v);
        labels.push_back(0);
    }
    for (double v : b) {
        col.values.push_back(v);
        labels.push_back(1);
    }
    return Dataset({col}, labels, {"a", "b"}, "line");
}

}  // namespace

TEST_CASE("nearest enemy selection and ties") {
    const auto d = line_dataset({0.0}, {1.0, 2.0});
    const auto D = distance_matrix(d);
    const auto labels = d.labels();
    const auto [idx, dist] = nearest_enemy(D, labels, 0);
    CHECK(idx == 1);
    CHECK(dist == doctest::Approx(D(0, 1)));

    const auto tie = line_dataset({5.0}, {4.0, 6.0});  // equidistant enemies
    const auto Dt = distance_matrix(tie);
    CHECK(nearest_enemy(Dt, tie.labels(), 0).first == 1);  // lowest index wins

    const auto single = from_csv("x,class\n1,a\n2,a\n");
    CHECK_THROWS_AS(nearest_enemy(distance_matrix(single), single.labels(), 0),
                    measure_error);
}

TEST_CASE("mst matches exhaustive search on small random inputs") {
    std::mt19937_64 rng(13);
    oracle::RandomSpec spec;
    spec.n_min = 4;
    spec.n_max = 8;
    spec.m_min = 1;
    spec.m_max = 3;
    for (int trial = 0; trial < 12; ++trial) {
        const auto d = oracle::random_dataset(rng, spec);
        const auto D = distance_matrix(d);
        const auto mst = minimum_spanning_tree(D);
        REQUIRE(mst.size() == d.n() - 1);
        double total = 0.0;
        for (const auto& e : mst) total += e.weight;
        CHECK(total == doctest::Approx(oracle::mst_weight_exhaustive(D)).epsilon(1e-10));
    }
}

TEST_CASE("n1 counts borderline vertices") {
    const auto clusters = make_clusters(10, 2, 50.0, 0.5, 3, 2);
    CHECK(n1(clusters) == doctest::Approx(0.1));  // one cross edge, two vertices

    const auto alt = make_alternating_line(10);
    CHECK(n1(alt) == doctest::Approx(1.0));

    const auto single = from_csv("x,class\n1,a\n2,a\n3,a\n");
    CHECK(n1(single) == doctest::Approx(0.0));
}

TEST_CASE("n2 ratio on hand-summed fixtures") {
    const auto far_pairs = line_dataset({0, 1}, {10, 11});
    CHECK(n2(far_pairs) == doctest::Approx(2.0 / 21.0).epsilon(1e-12));

    const auto alt = make_alternating_line(10);
    CHECK(n2(alt) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

    // square: every intra distance equals every extra distance
    const auto sq = from_csv("x,y,class\n0,0,a\n1,0,a\n0,1,b\n1,1,b\n");
    CHECK(n2(sq) == doctest::Approx(0.5).epsilon(1e-12));

    const auto single = from_csv("x,class\n1,a\n2,a\n");
    CHECK_THROWS_AS(n2(single), measure_error);
}

TEST_CASE("n3 equals brute-force leave-one-out") {
    const auto clusters = make_clusters(10, 2, 40.0, 0.5, 9, 2);
    CHECK(n3(clusters) == doctest::Approx(0.0));
    CHECK(n3(make_alternating_line(10)) == doctest::Approx(1.0));

    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        const auto d = oracle::random_dataset(rng);
        CHECK(n3(d) == doctest::Approx(oracle::n3_loo(d.full_view())).epsilon(1e-12));
    }
}

TEST_CASE("n4 behavior on convex versus nested shapes") {
    const auto clusters = make_clusters(15, 2, 40.0, 0.5, 21, 2);
    CHECK(n4(clusters, 5) == doctest::Approx(0.0));
    CHECK(n4(clusters, 5) == doctest::Approx(n4(clusters, 5)));

    const auto rings = make_rings(40, {1.0, 3.0}, 11);
    CHECK(n4(rings, 5) > 0.0);
}

TEST_CASE("n4 handles symbolic features by copying a parent value") {
    const auto d = from_csv(
        "x,s,class\n0,u,a\n0.1,u,a\n0.2,u,a\n5,v,b\n5.1,v,b\n5.2,v,b\n");
    CHECK(n4(d, 3) == doctest::Approx(0.0));  // parents share the category
}

TEST_CASE("t1 radii and absorption on fixtures") {
    const auto two = line_dataset({0.0}, {1.0});
    const auto D2 = distance_matrix(two);
    const auto cover2 = t1_cover(D2, two.labels());
    CHECK(cover2.radius[0] == doctest::Approx(0.5));
    CHECK(cover2.radius[1] == doctest::Approx(0.5));
    CHECK(t1(two) == doctest::Approx(1.0));

    const auto four = line_dataset({0.0, 0.1}, {1.0, 1.1});
    const auto D4 = distance_matrix(four);
    const auto cover4 = t1_cover(D4, four.labels());
    // Gower-normalized radii: {0.5, 0.409.., 0.409.., 0.5} of the 1.1 span
    CHECK(cover4.radius[0] == doctest::Approx(0.55 / 1.1));
    CHECK(cover4.radius[1] == doctest::Approx(0.45 / 1.1));
    CHECK(cover4.radius[2] == doctest::Approx(0.45 / 1.1));
    CHECK(cover4.radius[3] == doctest::Approx(0.55 / 1.1));
    CHECK(t1(four) == doctest::Approx(0.5));

    CHECK(t1(make_alternating_line(10)) == doctest::Approx(1.0));
}

TEST_CASE("t1 radii never exceed the enemy distance; mutual spheres touch") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        const auto d = oracle::random_dataset(rng);
        const auto D = distance_matrix(d);
        const auto labels = d.labels();
        const auto cover = t1_cover(D, labels);
        for (std::size_t i = 0; i < d.n(); ++i) {
            const auto [enemy, dist] = nearest_enemy(D, labels, i);
            CHECK(cover.radius[i] <= dist + 1e-12);
            if (nearest_enemy(D, labels, enemy).first == i)
                CHECK(cover.radius[i] + cover.radius[enemy] ==
                      doctest::Approx(dist).epsilon(1e-12));
        }
    }
}

TEST_CASE("lsc on fixtures and against the direct form") {
    const auto alt = make_alternating_line(10);
    CHECK(lsc(alt) == doctest::Approx(1.0 - 0.1).epsilon(1e-12));

    const auto four = line_dataset({0.0, 0.1}, {1.0, 1.1});
    CHECK(lsc(four) == doctest::Approx(0.5).epsilon(1e-12));

    const auto two = line_dataset({0.0}, {1.0});
    CHECK(lsc(two) == doctest::Approx(0.5).epsilon(1e-12));

    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 8; ++trial) {
        const auto d = oracle::random_dataset(rng);
        CHECK(lsc(d) == doctest::Approx(oracle::lsc_direct(d.full_view())).epsilon(1e-10));
    }
}

TEST_CASE("label flips do not decrease n1 or n3 on separable data") {
    const auto clean = make_clusters(25, 2, 30.0, 1.0, 7, 2);
    const double n1_clean = n1(clean), n3_clean = n3(clean);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto noisy = flip_labels(clean, 0.1, seed);
        CHECK(n1(noisy) >= n1_clean);
        CHECK(n3(noisy) >= n3_clean);
    }
}
