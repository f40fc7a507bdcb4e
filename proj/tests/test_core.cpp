#include <doctest.h>

#include <algorithm>
#include <set>

#include "urnq/core.hpp"

using namespace urnq;

namespace {

// Independent oracle: count partitions of [0,n) into <= c blocks by brute
// force over all label assignments, deduplicated through canonicalization.
int count_partitions_by_labeling(int n, int c) {
    std::set<std::vector<int>> seen;
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    while (true) {
        seen.insert(Coloring::from_assignment(labels).assignment());
        int pos = n - 1;
        while (pos >= 0 && labels[static_cast<std::size_t>(pos)] == c - 1) {
            labels[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++labels[static_cast<std::size_t>(pos)];
    }
    return static_cast<int>(seen.size());
}

// Independent oracle: consistent colorings by filtering the full enumeration.
std::vector<Coloring> consistent_by_filter(const QueryGraph& g, const AnswerMap& a, int c) {
    std::vector<Coloring> out;
    for (const Coloring& col : enumerate_colorings(g.vertex_count(), c)) {
        if (answers_for(g, col) == a) out.push_back(col);
    }
    return out;
}

}  // namespace

TEST_CASE("enumerate_colorings counts") {
    CHECK(enumerate_colorings(3, 3).size() == 5);  // Bell(3)
    CHECK(enumerate_colorings(1, 5).size() == 1);
    // Frozen from the labeling oracle below.
    CHECK(enumerate_colorings(4, 2).size() == 8);
    CHECK(count_partitions_by_labeling(4, 2) == 8);
    for (int n = 1; n <= 6; ++n) {
        for (int c = 1; c <= n; ++c) {
            CHECK(enumerate_colorings(n, c).size() == count_partitions_by_labeling(n, c));
            CHECK(BigInt(enumerate_colorings(n, c).size()) == coloring_count(n, c));
        }
    }
}

TEST_CASE("enumerate_colorings order and uniqueness") {
    auto cols = enumerate_colorings(3, 3);
    REQUIRE(cols.size() == 5);
    CHECK(cols[0].assignment() == std::vector<int>{0, 0, 0});
    CHECK(cols[1].assignment() == std::vector<int>{0, 0, 1});
    CHECK(cols[2].assignment() == std::vector<int>{0, 1, 0});
    CHECK(cols[3].assignment() == std::vector<int>{0, 1, 1});
    CHECK(cols[4].assignment() == std::vector<int>{0, 1, 2});
    std::set<std::vector<int>> unique;
    for (const auto& c : cols) unique.insert(c.assignment());
    CHECK(unique.size() == cols.size());
}

TEST_CASE("enumerate_colorings Bell numbers up to 10") {
    const long bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
    for (int n = 0; n <= 10; ++n) {
        CHECK(coloring_count(n, n == 0 ? 1 : n) == bell[n]);
    }
    CHECK(enumerate_colorings(10, 10).size() == 115975);
}

TEST_CASE("coloring canonical form and relabeling invariance") {
    auto a = Coloring::from_blocks(3, {{2}, {0, 1}});
    auto b = Coloring::from_blocks(3, {{1, 0}, {2}});
    CHECK(a == b);
    CHECK(a.blocks()[0] == std::vector<BallId>{0, 1});  // blocks ordered by min element
    CHECK(a.to_string() == "{{0,1},{2}}");
    CHECK_THROWS_AS(Coloring::from_blocks(3, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Coloring::from_blocks(3, {{0, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Coloring::from_blocks(3, {{0, 1}, {2}, {}}), std::invalid_argument);
}

TEST_CASE("answers_for basics") {
    QueryGraph path(3, {{0, 1}, {1, 2}});
    auto am = answers_for(path, Coloring::from_blocks(3, {{0, 1}, {2}}));
    CHECK(am.at(0, 1) == Answer::Same);
    CHECK(am.at(1, 2) == Answer::Different);

    QueryGraph k3 = QueryGraph::complete_graph(3);
    auto all_same = answers_for(k3, Coloring::from_blocks(3, {{0, 1, 2}}));
    for (auto ans : all_same.answers()) CHECK(ans == Answer::Same);
    auto all_diff = answers_for(k3, Coloring::from_blocks(3, {{0}, {1}, {2}}));
    for (auto ans : all_diff.answers()) CHECK(ans == Answer::Different);
}

TEST_CASE("evaluate on the four problem kinds") {
    auto unit4 = WeightedInstance::unit(4);

    auto maj = ProblemSpec::majority(unit4, 2);
    CHECK(evaluate(maj, Coloring::from_blocks(4, {{0, 1, 2}, {3}})) ==
          std::vector<BallId>{0, 1, 2});

    auto plu = ProblemSpec::plurality(unit4, 2);
    CHECK(evaluate(plu, Coloring::from_blocks(4, {{0, 1}, {2, 3}})).empty());  // tie

    auto kmaj = ProblemSpec::k_majority(unit4, 2, 2);
    CHECK(evaluate(kmaj, Coloring::from_blocks(4, {{0, 1}, {2, 3}})) ==
          std::vector<BallId>{0, 1, 2, 3});

    auto wmaj = ProblemSpec::majority(WeightedInstance({3, 1, 1}), 2);
    CHECK(evaluate(wmaj, Coloring::from_blocks(3, {{0}, {1, 2}})) == std::vector<BallId>{0});

    auto fix = ProblemSpec::fixed_ball_k_majority(unit4, 2, 2, 3);
    CHECK(evaluate(fix, Coloring::from_blocks(4, {{0, 1}, {2, 3}})) == std::vector<BallId>{3});
    CHECK(evaluate(fix, Coloring::from_blocks(4, {{0, 1, 2}, {3}})).empty());
}

TEST_CASE("evaluate majority picks at most one block; odd unit instances never empty") {
    for (int n = 3; n <= 9; n += 2) {
        auto p = ProblemSpec::majority(WeightedInstance::unit(n), 2);
        for (const Coloring& col : enumerate_colorings(n, 2)) {
            auto t = evaluate(p, col);
            CHECK(!t.empty());
        }
    }
}

TEST_CASE("consistent_colorings examples") {
    QueryGraph path(3, {{0, 1}, {1, 2}});
    AnswerMap am(path.edges(), {Answer::Same, Answer::Different});
    auto cols = consistent_colorings(path, am, 2);
    REQUIRE(cols.size() == 1);
    CHECK(cols[0] == Coloring::from_blocks(3, {{0, 1}, {2}}));
    CHECK(cols == consistent_by_filter(path, am, 2));

    QueryGraph e2 = QueryGraph::empty_graph(2);
    AnswerMap empty_map({}, {});
    auto cols2 = consistent_colorings(e2, empty_map, 2);
    REQUIRE(cols2.size() == 2);
    CHECK(cols2[0] == Coloring::from_blocks(2, {{0, 1}}));
    CHECK(cols2[1] == Coloring::from_blocks(2, {{0}, {1}}));

    QueryGraph k3 = QueryGraph::complete_graph(3);
    AnswerMap bad(k3.edges(), {Answer::Same, Answer::Same, Answer::Different});
    CHECK(consistent_colorings(k3, bad, 3).empty());
}

TEST_CASE("consistent_colorings agrees with filtering oracle on all n=4 graphs") {
    const int n = 4;
    std::vector<Edge> all_pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
    for (std::uint32_t mask = 0; mask < (1u << all_pairs.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < all_pairs.size(); ++i)
            if (mask & (1u << i)) edges.push_back(all_pairs[i]);
        QueryGraph g(n, edges);
        for (int c = 2; c <= 4; ++c) {
            for (const Coloring& col : enumerate_colorings(n, c)) {
                auto am = answers_for(g, col);
                auto fast = consistent_colorings(g, am, c);
                auto slow = consistent_by_filter(g, am, c);
                CHECK(fast == slow);
                CHECK(std::find(fast.begin(), fast.end(), col) != fast.end());
            }
        }
    }
}

TEST_CASE("query graph invariants") {
    CHECK_THROWS_AS(QueryGraph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(QueryGraph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(QueryGraph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    QueryGraph g(4, {{2, 0}, {1, 3}});
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 3}});
    CHECK(g.has_edge(2, 0));
    CHECK(!g.has_edge(0, 1));
    CHECK(QueryGraph::complete_graph(5).is_complete());
    CHECK(QueryGraph::complete_graph(5).min_degree() == 4);
}

TEST_CASE("weighted instance validation") {
    CHECK_THROWS_AS(WeightedInstance({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(WeightedInstance({-1}), std::invalid_argument);
    WeightedInstance w({3, 1, 1});
    CHECK(w.total() == 5);
    CHECK(!w.is_unit());
    CHECK(WeightedInstance::unit(4).is_unit());
}
