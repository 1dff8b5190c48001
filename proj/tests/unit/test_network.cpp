#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "flcn/network.hpp"
#include "flcn/synthetic.hpp"
#include "../support/oracles.hpp"

using namespace flcn;

namespace {

std::vector<NodeId> ids(const std::vector<Neighbor>& ns) {
    std::vector<NodeId> out;
    for (const auto& n : ns)
        out.push_back(n.id);
    return out;
}

}  // namespace

TEST_CASE("knn on three points on a line") {
    const Matrix x(3, 1, {0, 1, 3});
    const KnnGraph g = build_knn_graph(x, 1);
    CHECK(ids(g.neighbors[0]) == std::vector<NodeId>{1});
    CHECK(ids(g.neighbors[1]) == std::vector<NodeId>{0});
    CHECK(ids(g.neighbors[2]) == std::vector<NodeId>{1});
    CHECK(compute_degrees(g) == DegreeVector{2, 3, 1});
    CHECK(g.contains(2, 1));
    CHECK_FALSE(g.contains(1, 2));
}

TEST_CASE("knn ties go to the lower id") {
    const Matrix x(3, 1, {0, -1, 1});
    CHECK(ids(build_knn_graph(x, 1).neighbors[0]) == std::vector<NodeId>{1});
}

TEST_CASE("k at or above N clamps to everyone else") {
    const Matrix x = uniform_points(6, 2, 1);
    for (std::size_t k : {5, 6, 50}) {
        const KnnGraph g = build_knn_graph(x, k);
        for (std::size_t i = 0; i < 6; ++i)
            CHECK(g.neighbors[i].size() == 5);
        for (auto d : compute_degrees(g))
            CHECK(d == 10);
    }
}

TEST_CASE("knn matches the sort-based oracle") {
    const Matrix x = uniform_points(20, 3, 4);
    const KnnGraph g = build_knn_graph(x, 4);
    const auto expect = oracle::knn(x, 4);
    for (std::size_t i = 0; i < 20; ++i)
        CHECK(ids(g.neighbors[i]) == expect[i]);
    const auto deg = compute_degrees(g);
    CHECK(deg == oracle::degrees(expect));
    CHECK(*std::min_element(deg.begin(), deg.end()) >= 4);
}

TEST_CASE("knn input validation") {
    CHECK_THROWS_AS(build_knn_graph(Matrix(1, 2), 1), std::invalid_argument);
    CHECK_THROWS_AS(build_knn_graph(Matrix(4, 2), 0), std::invalid_argument);
}

TEST_CASE("connecting probability follows degree at equal distance") {
    // i = 0 at the origin, two candidates at distance 1 with degrees 2 and 4
    const Matrix x(3, 2, {0, 0, 1, 0, 0, 1});
    const DegreeVector deg{1, 2, 4};
    const std::vector<NodeId> cand{1, 2};
    const auto p = connecting_probabilities(0, x, cand, deg);
    REQUIRE(p.size() == 2);
    CHECK(p[0].probability == doctest::Approx(1.0 / 3).epsilon(1e-14));
    CHECK(p[1].probability == doctest::Approx(2.0 / 3).epsilon(1e-14));
    CHECK(top_r(p, 1) == std::vector<NodeId>{2});
    CHECK(top_r(p, 0).empty());
    CHECK(top_r(p, 9).size() == 2);
}

TEST_CASE("probabilities survive far candidates") {
    const Matrix x(3, 1, {0, 2000, 2001});
    const DegreeVector deg{1, 1, 3};
    const auto p = connecting_probabilities(0, x, std::vector<NodeId>{1, 2}, deg);
    CHECK(std::isfinite(p[0].probability));
    CHECK(p[0].probability + p[1].probability == doctest::Approx(1.0));
    // 3 * e^-1 outweighs 1 * e^0
    CHECK(p[0].probability == doctest::Approx(1.0 / (1.0 + 3.0 * std::exp(-1.0))).epsilon(1e-12));
}

TEST_CASE("flcn1 long range against the ranking oracle") {
    const Matrix x = uniform_points(30, 2, 12);
    const KnnGraph g = build_knn_graph(x, 4);
    const DegreeVector deg = compute_degrees(g);
    for (std::size_t i = 0; i < 30; ++i) {
        const auto lr = flcn1_long_range(i, x, g, deg, 2);
        CHECK(lr == oracle::flcn1_long_range(x, i, 4, 2));
        for (auto j : lr)
            CHECK_FALSE(g.contains(i, j));
        CHECK(flcn1_long_range(i, x, g, deg, 0).empty());
    }
}

TEST_CASE("flcn1 clamps r to the available candidates") {
    const Matrix x = uniform_points(6, 2, 2);
    const KnnGraph g = build_knn_graph(x, 3);
    CHECK(flcn1_long_range(0, x, g, compute_degrees(g), 10).size() == 2);
}

TEST_CASE("candidate set size and ranking") {
    CHECK(candidate_set_size(0.1, 100, 5) == 10);
    CHECK(candidate_set_size(0.05, 20, 3) == 3);    // raised to r
    CHECK(candidate_set_size(0.5, 4, 1) == 2);
    CHECK(candidate_set_size(0.01, 10, 0) == 1);    // never empty

    CHECK(flcn2_candidate_set(DegreeVector{5, 9, 7, 9}, 2) == std::vector<NodeId>{1, 3});
    CHECK(flcn2_candidate_set(DegreeVector(8, 4), 3) == std::vector<NodeId>{0, 1, 2});
    CHECK_THROWS_AS(flcn2_candidate_set(DegreeVector{1, 2}, 0), std::invalid_argument);
    CHECK_THROWS_AS(flcn2_candidate_set(DegreeVector{1, 2}, 3), std::invalid_argument);
}

TEST_CASE("flcn2 long range") {
    const Matrix x = uniform_points(40, 2, 8);
    const KnnGraph g = build_knn_graph(x, 4);
    const DegreeVector deg = compute_degrees(g);

    SUBCASE("equals flcn1 when V is everyone") {
        std::vector<NodeId> all(40);
        std::iota(all.begin(), all.end(), NodeId{0});
        for (std::size_t i = 0; i < 40; ++i)
            CHECK(flcn2_long_range(i, x, g, all, deg, 2) == flcn1_long_range(i, x, g, deg, 2));
    }
    SUBCASE("draws only from V") {
        const auto v = flcn2_candidate_set(deg, 5);
        for (std::size_t i = 0; i < 40; ++i) {
            const auto lr = flcn2_long_range(i, x, g, v, deg, 2);
            CHECK(lr.size() <= 2);
            for (auto j : lr) {
                CHECK(std::find(v.begin(), v.end(), j) != v.end());
                CHECK(j != i);
                CHECK_FALSE(g.contains(i, j));
            }
        }
    }
    SUBCASE("empty when V lies inside the neighbourhood") {
        std::vector<NodeId> v{0};
        for (const auto& n : g.neighbors[0])
            v.push_back(n.id);
        CHECK(flcn2_long_range(0, x, g, v, deg, 3).empty());
    }
}

TEST_CASE("make_network lists knn before long-range links") {
    const Matrix x(4, 1, {0, 1, 2, 10});
    const KnnGraph g = build_knn_graph(x, 1);
    const ComplexNetwork net = make_network(g, {{3}, {}, {}, {}});
    CHECK(net.all_neighbors[0] == std::vector<NodeId>{1, 3});
    CHECK(net.degrees == compute_degrees(g));
    CHECK_FALSE(net.degrees_t0.has_value());
}

using Adjacency = std::vector<std::vector<NodeId>>;

TEST_CASE("small-world statistics on hand graphs") {
    SUBCASE("triangle") {
        const auto s = network_statistics(Adjacency{{1, 2}, {0, 2}, {0, 1}});
        CHECK(s.average_path_length == doctest::Approx(1.0));
        CHECK(s.clustering_coefficient == doctest::Approx(1.0));
        CHECK_FALSE(s.disconnected);
        CHECK(s.degree_histogram.at(2) == 3);
    }
    SUBCASE("path of three") {
        const auto s = network_statistics(Adjacency{{1}, {0, 2}, {1}});
        CHECK(s.average_path_length == doctest::Approx(4.0 / 3));
        CHECK(s.clustering_coefficient == 0.0);
    }
    SUBCASE("star with four leaves") {
        const auto s = network_statistics(Adjacency{{1, 2, 3, 4}, {0}, {0}, {0}, {0}});
        CHECK(s.clustering_coefficient == 0.0);
        CHECK(s.average_path_length == doctest::Approx((4 * 2 * 1 + 12 * 2) / 20.0));
    }
    SUBCASE("no edges") {
        const auto s = network_statistics(Adjacency{{}, {}, {}});
        CHECK(s.average_path_length == 0.0);
        CHECK(s.disconnected);
    }
    SUBCASE("two components") {
        const auto s = network_statistics(Adjacency{{1}, {0}, {3}, {2}});
        CHECK(s.disconnected);
        CHECK(s.average_path_length == doctest::Approx(1.0));
    }
}

TEST_CASE("long-range links never lengthen paths") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Matrix x = uniform_points(50, 2, seed);
        const KnnGraph g = build_knn_graph(x, 3);
        const DegreeVector deg = compute_degrees(g);
        std::vector<std::vector<NodeId>> lr(50);
        for (std::size_t i = 0; i < 50; ++i)
            lr[i] = flcn1_long_range(i, x, g, deg, 2);
        const ComplexNetwork net = make_network(g, lr);
        const auto knn_only = network_statistics(g);
        const auto full = network_statistics(net);
        // a mean over reachable pairs only compares when both graphs are connected
        if (!knn_only.disconnected)
            CHECK(full.average_path_length <= knn_only.average_path_length);
        CHECK(full.average_path_length ==
              doctest::Approx(*oracle::average_path_length(undirected_projection(net))));
    }
}
