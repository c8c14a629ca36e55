#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "qsi/json_io.hpp"
#include "qsi/quiver.hpp"

using namespace qsi;

namespace {

// the 3-vertex quiver of the worked examples, dimension vector (2, 2, 3)
Quiver example_quiver() {
    return Quiver(3, {{1, 0, 1}, {2, 0, 1}, {3, 0, 2}, {4, 0, 2}, {5, 0, 2}, {6, 0, 2}, {7, 1, 2}});
}

DimensionVector example_dims() { return DimensionVector{{2, 2, 3}}; }

// brute-force flow audit used as the bipartiteness oracle
bool bipartite_oracle(const AbQuiver& ab, const std::vector<LiftedPath>& paths) {
    std::map<std::pair<int, int>, std::pair<int, int>> io;
    for (const LiftedPath& p : paths) {
        const Quiver& q = ab.base();
        io[{q.arrow(p.arrows.front()).source, p.source_lift()}].second++;
        io[{q.arrow(p.arrows.back()).target, p.target_lift()}].first++;
    }
    for (auto& [v, f] : io)
        if (std::min(f.first, f.second) != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("path enumeration: Kronecker, example quiver, edge cases") {
    auto kron = enumerate_paths(Quiver::kronecker(3));
    REQUIRE(kron.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(kron[i].index == i + 1);
        CHECK(kron[i].arrows == std::vector<int>{i + 1});
    }

    auto paths = enumerate_paths(example_quiver());
    REQUIRE(paths.size() == 9);
    for (int i = 0; i < 7; ++i) CHECK(paths[i].arrows == std::vector<int>{i + 1});
    CHECK(paths[7].arrows == std::vector<int>{1, 7});
    CHECK(paths[8].arrows == std::vector<int>{2, 7});
    CHECK(paths[7].source == 0);
    CHECK(paths[7].target == 2);

    CHECK(enumerate_paths(Quiver(1, {})).empty());
}

TEST_CASE("path order is total and consistent with length") {
    Quiver chain(4, {{1, 0, 1}, {2, 1, 2}, {3, 2, 3}, {4, 0, 2}, {5, 1, 3}});
    auto paths = enumerate_paths(chain);
    for (std::size_t i = 1; i < paths.size(); ++i) {
        CHECK(paths[i - 1].index + 1 == paths[i].index);
        bool shorter = paths[i - 1].arrows.size() < paths[i].arrows.size();
        bool same_len_lex = paths[i - 1].arrows.size() == paths[i].arrows.size() &&
                            paths[i - 1].arrows < paths[i].arrows;
        CHECK((shorter || same_len_lex));
    }
}

TEST_CASE("quiver validation") {
    CHECK_THROWS_AS(Quiver(2, {{1, 1, 0}}), std::invalid_argument);  // backwards arrow
    CHECK_THROWS_AS(Quiver(2, {{2, 0, 1}}), std::invalid_argument);  // ids not contiguous
    CHECK_THROWS_AS(Quiver(2, {{1, 0, 0}}), std::invalid_argument);  // loop
    CHECK_THROWS_AS(validate(Quiver::kronecker(2), DimensionVector{{2}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(Quiver::kronecker(2), DimensionVector{{2, 0}}), std::invalid_argument);
}

TEST_CASE("abelianization counts") {
    AbQuiver ab = abelianize(Quiver::kronecker(3), DimensionVector{{2, 3}});
    CHECK(ab.lifted_vertex_count() == 5);
    CHECK(ab.lifted_arrow_count() == 18);

    // d = (1, ..., 1) is the identity case
    AbQuiver triv = abelianize(example_quiver(), DimensionVector{{1, 1, 1}});
    CHECK(triv.lifted_vertex_count() == 3);
    CHECK(triv.lifted_arrow_count() == example_quiver().arrows().size());

    // direct exhaustive count against sum r_s r_t
    Quiver eq = example_quiver();
    DimensionVector ed = example_dims();
    AbQuiver ex = abelianize(eq, ed);
    std::size_t direct = ex.lifted_arrows().size();
    std::size_t expected = 0;
    for (const Arrow& a : eq.arrows())
        expected += static_cast<std::size_t>(ed.rank(a.source)) * ed.rank(a.target);
    CHECK(direct == expected);
    CHECK(ex.lifted_arrow_count() == expected);
}

TEST_CASE("weight of the worked example path set") {
    AbQuiver ab = abelianize(example_quiver(), example_dims());
    // {P3_11, P4_12, P7_23, P5_21, P7_12, P6_23}
    std::vector<LiftedPath> s = {{{3}, {1, 1}}, {{4}, {1, 2}}, {{7}, {2, 3}},
                                 {{5}, {2, 1}}, {{7}, {1, 2}}, {{6}, {2, 3}}};
    auto w = weight_of_path_set(ab, s);
    CHECK(w.weyl_invariant);
    CHECK(w.weight.w == std::vector<int>{-2, -1, 2});
    CHECK(w.weight.wplus() == std::vector<int>{0, 0, 2});
    CHECK(w.weight.wminus() == std::vector<int>{2, 1, 0});
    CHECK(is_bipartite(ab, s));

    CHECK(weight_of_path_set(ab, {}).weyl_invariant);
    CHECK(weight_of_path_set(ab, {}).weight.w == std::vector<int>{0, 0, 0});

    // a single lifted arrow on Kronecker (2,2) is not Weyl-invariant
    AbQuiver kab = abelianize(Quiver::kronecker(2), DimensionVector{{2, 2}});
    CHECK_FALSE(weight_of_path_set(kab, {{{1}, {1, 1}}}).weyl_invariant);
}

TEST_CASE("sum of r_p w_p vanishes on randomized Weyl-invariant sets") {
    Quiver eq = example_quiver();
    DimensionVector ed = example_dims();
    AbQuiver ab = abelianize(eq, ed);
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> pick_arrow(1, 7), copies(1, 2);
    for (int trial = 0; trial < 30; ++trial) {
        // symmetrize a random arrow multiset over all lifts to force
        // Weyl-invariance
        std::vector<LiftedPath> s;
        for (int n = copies(rng); n > 0; --n) {
            int a = pick_arrow(rng);
            const Arrow& arrow = eq.arrow(a);
            for (int i = 1; i <= ed.rank(arrow.source); ++i)
                for (int j = 1; j <= ed.rank(arrow.target); ++j) s.push_back({{a}, {i, j}});
        }
        auto w = weight_of_path_set(ab, s);
        REQUIRE(w.weyl_invariant);
        long long total = 0;
        for (int p = 0; p < 3; ++p) total += ed.rank(p) * w.weight.w[p];
        CHECK(total == 0);
    }
}

TEST_CASE("bipartite partition: already bipartite input returns length-1 paths") {
    AbQuiver ab = abelianize(example_quiver(), example_dims());
    std::vector<LiftedArrow> arrows;
    for (int a : {3, 4, 5, 6})  // arrows 0 -> 2 only touch sources and sinks
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 3; ++j) arrows.push_back({a, i, j});
    auto paths = partition_into_bipartite_paths(ab, arrows);
    CHECK(paths.size() == arrows.size());
    for (const LiftedPath& p : paths) CHECK(p.arrows.size() == 1);
    CHECK(bipartite_oracle(ab, paths));
}

TEST_CASE("bipartite partition joins arrows 1 and 7 into the composite path") {
    AbQuiver ab = abelianize(example_quiver(), example_dims());
    // one copy of arrow 1 into lift 1_1 and arrow 7 out of it; pairing is
    // forced, the projection is path 8 = (1, 7)
    std::vector<LiftedArrow> arrows = {{1, 1, 1}, {7, 1, 2}};
    auto paths = partition_into_bipartite_paths(ab, arrows, /*require_weyl_invariant=*/false);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].arrows == std::vector<int>{1, 7});
    CHECK(paths[0].lifts == std::vector<int>{1, 1, 2});
    CHECK(bipartite_oracle(ab, paths));
}

TEST_CASE("bipartite partition passes the flow audit on Weyl-invariant input") {
    Quiver eq = example_quiver();
    DimensionVector ed = example_dims();
    AbQuiver ab = abelianize(eq, ed);
    std::mt19937 rng(555);
    std::uniform_int_distribution<int> pick_arrow(1, 7), copies(1, 3);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<LiftedArrow> arrows;
        for (int n = copies(rng); n > 0; --n) {
            int a = pick_arrow(rng);
            const Arrow& arrow = eq.arrow(a);
            for (int i = 1; i <= ed.rank(arrow.source); ++i)
                for (int j = 1; j <= ed.rank(arrow.target); ++j) arrows.push_back({a, i, j});
        }
        auto paths = partition_into_bipartite_paths(ab, arrows);
        CHECK(bipartite_oracle(ab, paths));
        auto w = weight_of_path_set(ab, paths);
        CHECK(w.weyl_invariant);
        // flattening recovers the input multiset
        std::multiset<LiftedArrow> in(arrows.begin(), arrows.end()), out;
        for (const LiftedPath& p : paths)
            for (std::size_t i = 0; i < p.arrows.size(); ++i)
                out.insert({p.arrows[i], p.lifts[i], p.lifts[i + 1]});
        CHECK(in == out);
    }
    CHECK_THROWS_AS(partition_into_bipartite_paths(ab, {{1, 1, 1}}), std::invalid_argument);
}

TEST_CASE("quiver JSON round trip") {
    auto j = quiver_to_json(example_quiver(), example_dims());
    auto [q, d] = quiver_from_json(j);
    CHECK(q == example_quiver());
    CHECK(d == example_dims());
    CHECK(quiver_to_json(q, d).dump() == j.dump());
    CHECK_THROWS_AS(quiver_from_json(Json{{"vertices", 2}}), std::invalid_argument);

    LiftedPath lp{{1, 7}, {1, 1, 2}};
    CHECK(lifted_path_from_json(lifted_path_to_json(lp)) == lp);
}
