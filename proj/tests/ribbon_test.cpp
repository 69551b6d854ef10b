#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ribbon/duality.hpp"
#include "ribbon/graph.hpp"

namespace ribbon {
namespace {

using testing::fixture_graph;
using testing::gem_isomorphic;
using testing::make_gem;
using testing::Match;

ErrorCode parse_error(std::string_view text) {
    try {
        (void)parse_ribbon_graph(text);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "parsed without error:\n" << text;
    return ErrorCode::InvalidState;
}

// Same graph under a random relabelling, circle permutation, rotation, circle
// reversal and arrow-pair reversal.
SignedRibbonGraph scramble(const SignedRibbonGraph& g, std::mt19937_64& rng) {
    std::vector<EdgeId> perm(g.num_edges());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::bernoulli_distribution coin(0.5);
    std::vector<bool> flip_edge(g.num_edges());
    for (std::size_t e = 0; e < flip_edge.size(); ++e) flip_edge[e] = coin(rng);
    std::vector<Circle> circles;
    for (const Circle& c : g.circles()) {
        Circle out;
        for (const Occurrence& occ : c) {
            out.push_back({perm[occ.edge], flip_edge[occ.edge] ? flip(occ.dir) : occ.dir});
        }
        if (coin(rng)) {
            std::reverse(out.begin(), out.end());
            for (Occurrence& occ : out) occ.dir = flip(occ.dir);
        }
        if (!out.empty()) {
            std::uniform_int_distribution<std::size_t> r(0, out.size() - 1);
            std::rotate(out.begin(), out.begin() + static_cast<long>(r(rng)), out.end());
        }
        circles.push_back(out);
    }
    std::shuffle(circles.begin(), circles.end(), rng);
    std::vector<std::string> labels(g.num_edges());
    std::vector<Sign> signs(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        labels[perm[e]] = "q" + std::to_string(perm[e]);
        signs[perm[e]] = g.sign(e);
    }
    return SignedRibbonGraph(labels, signs, circles);
}

TEST(RibbonFormat, ParsesKleinFixture) {
    const SignedRibbonGraph g = fixture_graph("klein.rg");
    ASSERT_EQ(g.num_vertices(), 2u);
    ASSERT_EQ(g.num_edges(), 3u);
    EXPECT_EQ(g.labels(), (std::vector<std::string>{"1", "2", "3"}));
    EXPECT_EQ(g.sign(g.edge_id("1")), Sign::Positive);
    EXPECT_EQ(g.sign(g.edge_id("2")), Sign::Negative);
    EXPECT_EQ(g.sign(g.edge_id("3")), Sign::Negative);
    EXPECT_EQ(g.circle(0)[2].dir, Direction::Against);
}

TEST(RibbonFormat, SerializeRoundTrip) {
    for (const auto& g : testing::graph_corpus(101, 200)) {
        const std::string text = serialize_ribbon_graph(g);
        const SignedRibbonGraph back = parse_ribbon_graph(text);
        EXPECT_EQ(back, g) << text;
        EXPECT_EQ(serialize_ribbon_graph(back), text);
    }
}

TEST(RibbonFormat, CommentsBlankLinesAndEmptyCircles) {
    const SignedRibbonGraph g = parse_ribbon_graph(
        "# leading comment\n\nribbon-graph v1\nedges: a:+ # trailing\ncircle: a a'\ncircle:\n");
    EXPECT_EQ(g.num_vertices(), 2u);
    EXPECT_TRUE(g.circle(1).empty());
}

TEST(RibbonFormat, Errors) {
    EXPECT_EQ(parse_error("ribbon-graph v2\n"), ErrorCode::SyntaxError);
    EXPECT_EQ(parse_error("ribbon-graph v1\nedges: a:*\ncircle: a a\n"), ErrorCode::SyntaxError);
    EXPECT_EQ(parse_error("ribbon-graph v1\nedges: a:+\nvertex: a a\n"), ErrorCode::SyntaxError);
    EXPECT_EQ(parse_error("ribbon-graph v1\nedges: a:+\ncircle: a\n"), ErrorCode::DuplicateLabelCount);
    EXPECT_EQ(parse_error("ribbon-graph v1\nedges: a:+\ncircle: a a a\n"), ErrorCode::DuplicateLabelCount);
    EXPECT_EQ(parse_error("ribbon-graph v1\nedges: a:+ b:-\ncircle: a a\n"), ErrorCode::DuplicateLabelCount);
    EXPECT_EQ(parse_error("ribbon-graph v1\nedges: a:+\ncircle: a a b b\n"), ErrorCode::UnknownSign);
    EXPECT_EQ(parse_error("ribbon-graph v1\nedges: a:+ a:-\ncircle: a a\n"), ErrorCode::SyntaxError);
}

TEST(RibbonFormat, ParseErrorsCarryPositions) {
    try {
        (void)parse_ribbon_graph("ribbon-graph v1\nedges: a:+ b\ncircle: a a b b\n");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 12u);
    }
}

TEST(RibbonStats, FixtureValues) {
    const GraphStats ex = stats(fixture_graph("klein.rg"));
    EXPECT_EQ(ex, (GraphStats{2, 3, 1, 1, 2, 1, false, 0, 2}));
    const GraphStats torus = stats(fixture_graph("torus.rg"));
    EXPECT_EQ(torus, (GraphStats{1, 2, 1, 0, 2, 1, true, 0, 1}));
    const GraphStats iso = stats(fixture_graph("isolated.rg"));
    EXPECT_EQ(iso, (GraphStats{1, 0, 1, 0, 0, 1, true, 2, 0}));
    const GraphStats mobius = stats(fixture_graph("mobius.rg"));
    EXPECT_EQ(mobius, (GraphStats{1, 1, 1, 0, 1, 1, false, 1, 1}));
}

TEST(RibbonStats, AgreeWithGemOracleOnCorpus) {
    for (const auto& g : testing::graph_corpus(202, 400)) {
        const GraphStats s = stats(g);
        const testing::Gem gem = make_gem(g);
        const auto m = testing::underlying(g);
        EXPECT_EQ(static_cast<std::size_t>(s.v), testing::gem_vertices(gem));
        EXPECT_EQ(static_cast<std::size_t>(s.f), testing::gem_faces(gem, ~std::uint64_t{0}));
        EXPECT_EQ(static_cast<std::size_t>(s.k), testing::count_components(m, ~std::uint64_t{0}));
        EXPECT_EQ(s.orientable, testing::oracle_orientable(g, ~std::uint64_t{0}));
        EXPECT_EQ(s.orientable, is_orientable(g));
        EXPECT_EQ(components(g).count, static_cast<std::size_t>(s.k));
        EXPECT_EQ(boundary_components(g).size(), static_cast<std::size_t>(s.f));
        // Invariants of the parameter tuple.
        EXPECT_EQ(s.r, s.v - s.k);
        EXPECT_EQ(s.n, s.e - s.r);
        EXPECT_EQ(s.chi_closed, s.v - s.e + s.f);
        EXPECT_GE(2 * s.k - s.chi_closed, 0);
        if (s.orientable) {
            EXPECT_EQ(2 * s.genus_or_crosscap, 2 * s.k - s.chi_closed);
        } else {
            EXPECT_EQ(s.genus_or_crosscap, 2 * s.k - s.chi_closed);
        }
    }
}

TEST(RibbonIsomorphism, InvariantUnderPresentationMoves) {
    std::mt19937_64 rng(303);
    for (const auto& g : testing::graph_corpus(303, 300)) {
        const SignedRibbonGraph h = scramble(g, rng);
        EXPECT_TRUE(is_isomorphic(g, h, false)) << serialize_ribbon_graph(g) << serialize_ribbon_graph(h);
        EXPECT_TRUE(gem_isomorphic(make_gem(g), make_gem(h), Match::Signs));
        EXPECT_EQ(canonical_form(g, false), canonical_form(h, false));
    }
}

TEST(RibbonIsomorphism, AgreesWithGemOracleOnRandomPairs) {
    // Small graphs collide often enough to exercise both answers.
    std::mt19937_64 rng(404);
    testing::GraphShape shape;
    shape.max_vertices = 2;
    shape.max_edges = 3;
    std::size_t positives = 0;
    for (int i = 0; i < 3000; ++i) {
        const SignedRibbonGraph g = testing::random_graph(rng, shape);
        const SignedRibbonGraph h = testing::random_graph(rng, shape);
        for (bool ignore : {false, true}) {
            const bool lib = is_isomorphic(g, h, ignore);
            const bool oracle = gem_isomorphic(make_gem(g), make_gem(h), ignore ? Match::IgnoreSigns : Match::Signs);
            EXPECT_EQ(lib, oracle) << serialize_ribbon_graph(g) << serialize_ribbon_graph(h);
            positives += lib;
        }
    }
    EXPECT_GT(positives, 100u);
}

TEST(RibbonIsomorphism, SignsMatterUnlessIgnored) {
    const SignedRibbonGraph g = fixture_graph("klein.rg");
    const SignedRibbonGraph h = g.with_flipped_signs();
    EXPECT_FALSE(is_isomorphic(g, h, false));
    EXPECT_TRUE(is_isomorphic(g, h, true));
}

TEST(RibbonIsomorphism, TwistedAndUntwistedLoopsDiffer) {
    EXPECT_FALSE(is_isomorphic(parse_ribbon_graph("ribbon-graph v1\nedges: a:+\ncircle: a a\n"),
                               fixture_graph("mobius.rg"), true));
}

TEST(RibbonClassify, Examples) {
    const SignedRibbonGraph bridge = fixture_graph("bridge.rg");
    EXPECT_EQ(classify_edge(bridge, 0).kind, EdgeClass::Kind::Bridge);

    const EdgeClass mob = classify_edge(fixture_graph("mobius.rg"), 0);
    EXPECT_EQ(mob.kind, EdgeClass::Kind::Loop);
    EXPECT_FALSE(mob.orientable);
    EXPECT_TRUE(mob.trivial);

    const SignedRibbonGraph torus = fixture_graph("torus.rg");
    const EdgeClass t = classify_edge(torus, torus.edge_id("1"));
    EXPECT_EQ(t.kind, EdgeClass::Kind::Loop);
    EXPECT_TRUE(t.orientable);
    EXPECT_FALSE(t.trivial);

    const SignedRibbonGraph ex = fixture_graph("klein.rg");
    const EdgeClass loop = classify_edge(ex, ex.edge_id("1"));
    EXPECT_EQ(loop.kind, EdgeClass::Kind::Loop);
    EXPECT_FALSE(loop.orientable);
    EXPECT_FALSE(loop.trivial);
    EXPECT_EQ(classify_edge(ex, ex.edge_id("2")).kind, EdgeClass::Kind::Ordinary);

    EXPECT_EQ(classify_edge(fixture_graph("two-cycle.rg"), 0).kind, EdgeClass::Kind::Ordinary);
    EXPECT_THROW((void)classify_edge(ex, 7), Error);
}

TEST(RibbonClassify, AgreesWithOraclesOnCorpus) {
    std::size_t trivial = 0;
    std::size_t nontrivial = 0;
    for (const auto& g : testing::graph_corpus(505, 400)) {
        const auto m = testing::underlying(g);
        const std::size_t k = testing::count_components(m, ~std::uint64_t{0});
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            const EdgeClass c = classify_edge(g, e);
            const bool loop = m.edges[e].first == m.edges[e].second;
            const bool bridge = !loop && testing::count_components(m, ~(std::uint64_t{1} << e)) > k;
            if (loop) {
                ASSERT_EQ(c.kind, EdgeClass::Kind::Loop);
                EXPECT_EQ(c.orientable, testing::oracle_orientable(g, std::uint64_t{1} << e));
                const bool t = testing::oracle_trivial_loop(g, e);
                EXPECT_EQ(c.trivial, t) << serialize_ribbon_graph(g) << "edge " << g.label(e);
                (t ? trivial : nontrivial) += 1;
            } else {
                EXPECT_EQ(c.kind, bridge ? EdgeClass::Kind::Bridge : EdgeClass::Kind::Ordinary);
            }
        }
    }
    EXPECT_GT(trivial, 50u);
    EXPECT_GT(nontrivial, 50u);
}

TEST(RibbonConstruction, DisjointUnionAndJoin) {
    const SignedRibbonGraph torus = fixture_graph("torus.rg");
    const SignedRibbonGraph ex = fixture_graph("klein.rg");
    const SignedRibbonGraph u = disjoint_union(torus, ex);
    EXPECT_EQ(u.num_vertices(), 3u);
    EXPECT_EQ(u.num_edges(), 5u);
    EXPECT_EQ(stats(u).k, 2);
    EXPECT_TRUE(u.find_edge("1~2").has_value());

    const SignedRibbonGraph j = one_point_join(torus, ex, {0, 2}, {1, 1});
    EXPECT_EQ(j.num_vertices(), 2u);
    EXPECT_EQ(stats(j).k, 1);
    EXPECT_EQ(stats(j).f, stats(torus).f + stats(ex).f - 1);
    EXPECT_THROW((void)one_point_join(torus, ex, {0, 5}, {0, 0}), Error);
    EXPECT_THROW((void)one_point_join(torus, ex, {2, 0}, {0, 0}), Error);
}

TEST(RibbonConstruction, ConstructorValidation) {
    EXPECT_THROW(SignedRibbonGraph({"a"}, {Sign::Positive}, {{{0, Direction::Along}}}), Error);
    EXPECT_THROW(SignedRibbonGraph({"a", "a"}, {Sign::Positive, Sign::Positive},
                                   {{{0, Direction::Along}, {0, Direction::Along}, {1, Direction::Along},
                                     {1, Direction::Along}}}),
                 Error);
    // Labels are re-sorted and circles renumbered.
    const SignedRibbonGraph g({"b", "a"}, {Sign::Negative, Sign::Positive},
                              {{{0, Direction::Along}, {1, Direction::Along}, {0, Direction::Against},
                                {1, Direction::Along}}});
    EXPECT_EQ(g.labels(), (std::vector<std::string>{"a", "b"}));
    EXPECT_EQ(g.sign(0), Sign::Positive);
    EXPECT_EQ(g.circle(0)[0].edge, 1u);
    EXPECT_FALSE(is_valid_label("a:b"));
    EXPECT_FALSE(is_valid_label("x'"));
    EXPECT_TRUE(is_valid_label("e12"));
}

}  // namespace
}  // namespace ribbon
