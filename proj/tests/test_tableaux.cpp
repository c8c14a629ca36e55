#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "qsi/json_io.hpp"
#include "qsi/sagbi.hpp"
#include "qsi/tableaux.hpp"

using namespace qsi;

namespace {

Ctx example_ctx() {
    return QuiverContext::make(
        Quiver(3, {{1, 0, 1}, {2, 0, 1}, {3, 0, 2}, {4, 0, 2}, {5, 0, 2}, {6, 0, 2}, {7, 1, 2}}),
        DimensionVector{{2, 2, 3}});
}

// the worked linked pair: T+_2 = [[31,52],[41,71],[72,62]],
// T-_0 = [[31,42],[63,51]], T-_1 = [[72],[73]]
LinkedPair example_pair(const Ctx& ctx) {
    return LinkedPair(ctx, {{3, 1, 1, 1, 1},
                            {4, 1, 2, 1, 2},
                            {5, 2, 1, 2, 2},
                            {6, 2, 3, 2, 1},
                            {7, 1, 2, 2, 1},
                            {7, 2, 3, 1, 1}});
}

RectTableau tab(int vertex, int rows, int cols, std::vector<std::pair<int, int>> labels) {
    std::vector<Label> entries;
    for (auto& [p, s] : labels) entries.push_back({p, s});
    return RectTableau(vertex, rows, cols, std::move(entries));
}

}  // namespace

TEST_CASE("semi-standard and weakly semi-standard recognition") {
    // [[12,11],[13,42]]: weakly semi-standard but not semi-standard
    auto t1 = tab(1, 2, 2, {{1, 2}, {1, 1}, {1, 3}, {4, 2}});
    CHECK_FALSE(is_semistandard(t1));
    CHECK(is_weakly_semistandard(t1));
    // [[11,12],[13,42]]: semi-standard
    auto t2 = tab(1, 2, 2, {{1, 1}, {1, 2}, {1, 3}, {4, 2}});
    CHECK(is_semistandard(t2));
    CHECK(is_weakly_semistandard(t2));
    // 1x1 is always semi-standard
    CHECK(is_semistandard(tab(1, 1, 1, {{2, 1}})));
    // equal labels down a column break strictness but not weak form
    auto t3 = tab(1, 2, 1, {{1, 1}, {1, 1}});
    CHECK_FALSE(is_semistandard(t3));
    CHECK(is_weakly_semistandard(t3));
}

TEST_CASE("the worked 3-vertex pair reproduces the displayed tableaux") {
    Ctx ctx = example_ctx();
    LinkedPair pair = example_pair(ctx);

    CHECK(pair.weight().w == std::vector<int>{-2, -1, 2});
    CHECK(pair.wplus() == std::vector<int>{0, 0, 2});
    CHECK(pair.wminus() == std::vector<int>{2, 1, 0});

    CHECK(pair.tplus(2).str() == "[[3 1,5 2],[4 1,7 1],[7 2,6 2]]");
    CHECK(pair.tminus(0).str() == "[[3 1,4 2],[6 3,5 1]]");
    CHECK(pair.tminus(1).str() == "[[7 2],[7 3]]");

    // not semi-standard (column 2 of T+ breaks), but a valid linked pair
    CHECK_FALSE(pair.tableaux_semistandard());
    CHECK(pair.link_semistandard());
}

TEST_CASE("the worked pair has exactly one link") {
    Ctx ctx = example_ctx();
    LinkedPair pair = example_pair(ctx);
    auto links = enumerate_links(ctx, pair.tplus_tuple(), pair.tminus_tuple());
    REQUIRE(links.size() == 1);
    CHECK(links[0] == pair.link());
    CHECK(canonical_semistandard_link(ctx, pair.tplus_tuple(), pair.tminus_tuple()) == pair.link());

    // mismatched label multisets admit no link
    auto tp = pair.tplus_tuple();
    auto tm = std::vector<RectTableau>{tab(0, 2, 2, {{3, 1}, {4, 2}, {6, 3}, {6, 1}}),
                                       pair.tminus(1)};
    CHECK(enumerate_links(ctx, tp, tm).empty());
    CHECK_THROWS_AS(canonical_semistandard_link(ctx, tp, tm), std::invalid_argument);
}

TEST_CASE("repeated labels multiply the link count factorially") {
    // Kronecker (2,2), T+ with the same label twice in one row
    Ctx ctx = QuiverContext::make(Quiver::kronecker(2), DimensionVector{{2, 2}});
    // two copies of the same column: labels (1,1),(1,2) twice
    LinkedPair pair(ctx, {{1, 1, 1, 1, 1}, {1, 2, 2, 1, 1}, {1, 1, 1, 2, 2}, {1, 2, 2, 2, 2}});
    auto links = enumerate_links(ctx, pair.tplus_tuple(), pair.tminus_tuple());
    // each of the two repeated key classes contributes 2!
    CHECK(links.size() == 4);
    Link canon = canonical_semistandard_link(ctx, pair.tplus_tuple(), pair.tminus_tuple());
    CHECK(std::count(links.begin(), links.end(), canon) == 1);
}

TEST_CASE("linked pair from the worked path set") {
    Ctx ctx = example_ctx();
    std::vector<LiftedPath> s = {{{3}, {1, 1}}, {{4}, {1, 2}}, {{7}, {2, 3}},
                                 {{5}, {2, 1}}, {{7}, {1, 2}}, {{6}, {2, 3}}};
    LinkedPair pair = linked_pair_from_path_set(ctx, s);
    // rows carry the same label sets as the displayed tableaux; the column
    // pairing is the deterministic sorted one, the display pairs row 2 of
    // T-_0 the other way
    LinkedPair display = example_pair(ctx);
    CHECK(pair.weight().w == display.weight().w);
    for (int v : {0, 1}) {
        RectTableau a = pair.tminus(v), b = display.tminus(v);
        for (int r = 1; r <= a.rows(); ++r) {
            std::multiset<std::pair<int, int>> ra, rb;
            for (int c = 1; c <= a.cols(); ++c) {
                ra.insert({a.at(r, c).path, a.at(r, c).slot});
                rb.insert({b.at(r, c).path, b.at(r, c).slot});
            }
            CHECK(ra == rb);
        }
    }
    // rows of the sorted construction weakly increase
    for (const RectTableau& t : pair.tminus_tuple())
        for (int r = 1; r <= t.rows(); ++r)
            for (int c = 1; c < t.cols(); ++c) CHECK_FALSE(t.at(r, c + 1) < t.at(r, c));

    // round trip through the path multiset
    auto back = pair.path_multiset();
    std::sort(s.begin(), s.end());
    CHECK(back == s);

    // single path on a rank-one quiver gives 1x1 tableaux
    Ctx point = QuiverContext::make(Quiver::kronecker(2), DimensionVector{{1, 1}});
    LinkedPair single = linked_pair_from_path_set(point, {{{2}, {1, 1}}});
    CHECK(single.tplus(1).str() == "[[2 1]]");
    CHECK(single.tminus(0).str() == "[[2 1]]");

    CHECK_THROWS_AS(linked_pair_from_path_set(ctx, {{{1}, {1, 1}}}), std::invalid_argument);
}

TEST_CASE("pair construction validates shapes and positions") {
    Ctx ctx = example_ctx();
    // duplicate plus position
    CHECK_THROWS_AS(LinkedPair(ctx, {{3, 1, 1, 1, 1}, {3, 2, 1, 1, 1}}), std::invalid_argument);
    // ragged tableau (one column of height 1 at a rank-2 vertex)
    CHECK_THROWS_AS(LinkedPair(ctx, {{3, 1, 1, 1, 1}}), std::invalid_argument);
    // lift out of range
    CHECK_THROWS_AS(LinkedPair(ctx, {{3, 3, 1, 1, 1}}), std::invalid_argument);
}

TEST_CASE("pair JSON round trip") {
    Ctx ctx = example_ctx();
    LinkedPair pair = example_pair(ctx);
    Json j = pair_to_json(pair);
    CHECK(pair_from_json(ctx, j) == pair);
    CHECK(pair_bundle_from_json(pair_bundle_to_json(pair)) == pair);
    CHECK(pair_to_json(pair).dump() == j.dump());

    // corrupting the link is rejected
    Json bad = j;
    bad["link"][0][1][1] = 2;
    CHECK_THROWS_AS(pair_from_json(ctx, bad), std::invalid_argument);
}

TEST_CASE("arrow diagram of the self-dual 3x2 pair") {
    // Kronecker (3,3): T+ = T- = [[11,23],[12,32],[21,33]]
    KroneckerContext kctx(3, 3, 3);
    const Ctx& ctx = kctx.ctx();
    // boxes read off the displayed tableaux
    LinkedPair pair(ctx, {{1, 1, 1, 1, 1},
                          {2, 3, 1, 2, 1},
                          {1, 2, 2, 1, 1},
                          {3, 2, 2, 2, 2},
                          {2, 1, 3, 1, 2},
                          {3, 3, 3, 2, 2}});
    CHECK(pair.tplus(1).str() == "[[1 1,2 3],[1 2,3 2],[2 1,3 3]]");
    CHECK(pair.tminus(0).str() == pair.tplus(1).str());  // self-dual
    CHECK(pair.is_semistandard_pair());

    ArrowDiagram d = arrow_diagram(pair);
    REQUIRE(d.plus_chains.size() == 2);
    CHECK(d.plus_chains[0] == std::vector<Pos2>{{1, 1}, {2, 1}, {1, 2}});
    CHECK(d.plus_chains[1] == std::vector<Pos2>{{3, 1}, {2, 2}, {3, 2}});
    // self-dual: the minus chains repeat the same picture
    CHECK(d.minus_chains == d.plus_chains);
}

TEST_CASE("2x1 pair has the single top-to-bottom arrow") {
    KroneckerContext kctx(1, 2, 2);
    LinkedPair pair(kctx.ctx(), {{1, 1, 1, 1, 1}, {1, 2, 2, 1, 1}});
    ArrowDiagram d = arrow_diagram(pair);
    REQUIRE(d.plus_chains.size() == 1);
    CHECK(d.plus_chains[0] == std::vector<Pos2>{{1, 1}, {2, 1}});
    CHECK_FALSE(has_backwards_arrow(d.plus_chains));
    CHECK_FALSE(has_downwards_arrow(d.plus_chains));
}

TEST_CASE("semi-standard pairs are unique per side in every enumeration") {
    // no two distinct semi-standard pairs share a T+ or a T-
    for (auto [K, r0, r1, d] : std::vector<std::tuple<int, int, int, int>>{
             {2, 2, 3, 1}, {3, 2, 2, 2}, {3, 3, 3, 3}}) {
        KroneckerContext kctx(K, r0, r1);
        auto pairs = enumerate_ss_pairs(kctx, d);
        std::set<std::string> plus, minus;
        for (const LinkedPair& p : pairs) {
            CHECK(plus.insert(p.tplus(1).str()).second);
            CHECK(minus.insert(p.tminus(0).str()).second);
        }
    }
}
