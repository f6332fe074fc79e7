#include <gtest/gtest.h>

#include "alphatheta/graph.hpp"
#include "corpus.hpp"

using namespace alphatheta;

TEST(EdgeList, ParsesSmallGraphs) {
    EXPECT_EQ(parse_edge_list("2 1\n0 1"), named_graph(Family::complete, {2}));
    EXPECT_EQ(parse_edge_list("3 3\n0 1\n1 2\n0 2"), named_graph(Family::complete, {3}));
    EXPECT_EQ(parse_edge_list("5 5\n0 1\n1 2\n2 3\n3 4\n4 0"), named_graph(Family::cycle, {5}));
}

TEST(EdgeList, ToleratesBlankLinesAndCrlf) {
    EXPECT_EQ(parse_edge_list("\n3 2\r\n\r\n0 1\r\n1 2\r\n\n"), named_graph(Family::path, {3}));
}

TEST(EdgeList, Rejects) {
    EXPECT_THROW(parse_edge_list(""), InputError);
    EXPECT_THROW(parse_edge_list("3"), InputError);
    EXPECT_THROW(parse_edge_list("3 2\n0 1"), InputError);          // too few edges
    EXPECT_THROW(parse_edge_list("3 1\n0 1\n1 2"), InputError);     // trailing edge
    EXPECT_THROW(parse_edge_list("3 1\n0 3"), InputError);          // out of range
    EXPECT_THROW(parse_edge_list("3 1\n1 1"), InputError);          // self loop
    EXPECT_THROW(parse_edge_list("3 2\n0 1\n1 0"), InputError);     // duplicate
    EXPECT_THROW(parse_edge_list("3 1\n0 x"), InputError);
    EXPECT_THROW(parse_edge_list("3 1\n0 1 2"), InputError);
    EXPECT_THROW(parse_edge_list("0 0"), InputError);
}

TEST(EdgeList, RoundTrip) {
    for (const auto& e : corpus::all()) {
        EXPECT_EQ(parse_edge_list(encode_edge_list(e.graph)), e.graph) << e.name;
    }
}

TEST(Graph6, MatchesReferenceEncoder) {
    for (const auto& e : corpus::all()) {
        EXPECT_EQ(encode_graph6(e.graph), e.graph6) << e.name;
        EXPECT_EQ(parse_graph6(e.graph6), e.graph) << e.name;
    }
}

TEST(Graph6, EmptyTwoVertexGraph) {
    const Graph g = parse_graph6("A?");
    EXPECT_EQ(g.order(), 2);
    EXPECT_EQ(g.size(), 0u);
}

TEST(Graph6, HeaderAccepted) { EXPECT_EQ(parse_graph6(">>graph6<<Bw"), named_graph(Family::complete, {3})); }

TEST(Graph6, Rejects) {
    EXPECT_THROW(parse_graph6(""), InputError);
    EXPECT_THROW(parse_graph6("B"), InputError);     // truncated
    EXPECT_THROW(parse_graph6("Bww"), InputError);   // trailing byte
    EXPECT_THROW(parse_graph6("B\x20"), InputError); // byte below 63
    EXPECT_THROW(parse_graph6("~?@d"), InputError);  // n > 62 form
}

TEST(Graph6, LargestSupportedOrderRoundTrips) {
    const Graph g = named_graph(Family::cycle, {kGraph6MaxOrder});
    EXPECT_EQ(parse_graph6(encode_graph6(g)), g);
    EXPECT_THROW(encode_graph6(named_graph(Family::cycle, {kGraph6MaxOrder + 1})), InputError);
}

TEST(Families, Basics) {
    EXPECT_EQ(named_graph(Family::cycle, {5}).size(), 5u);
    EXPECT_EQ(named_graph(Family::complete, {4}).size(), 6u);
    const Graph p = named_graph(Family::petersen, {});
    EXPECT_EQ(p.order(), 10);
    EXPECT_EQ(p.size(), 15u);
    EXPECT_TRUE(p.is_regular());
    EXPECT_EQ(p.min_degree(), 3);
    EXPECT_EQ(named_graph(Family::empty, {4}).size(), 0u);
    EXPECT_EQ(named_graph(Family::complete_bipartite, {2, 3}).size(), 6u);
    EXPECT_EQ(family_from_string("complete_bipartite"), Family::complete_bipartite);
}

TEST(Families, Rejects) {
    EXPECT_THROW(family_from_string("wheel"), InputError);
    EXPECT_THROW(named_graph(Family::cycle, {2}), InputError);
    EXPECT_THROW(named_graph(Family::cycle, {}), InputError);
    EXPECT_THROW(named_graph(Family::petersen, {3}), InputError);
}

TEST(Graph, ConstructorValidates) {
    EXPECT_THROW(Graph(3, {{0, 0}}), InputError);
    EXPECT_THROW(Graph(3, {{0, 3}}), InputError);
    EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InputError);
}

TEST(Matrices, SmallExamples) {
    const auto k2 = matrices(named_graph(Family::complete, {2}));
    EXPECT_EQ(k2.adjacency, (IntMatrix(2, 2) << 0, 1, 1, 0).finished());
    EXPECT_EQ(k2.degree, IntMatrix::Identity(2, 2));
    EXPECT_EQ(k2.laplacian, (IntMatrix(2, 2) << 1, -1, -1, 1).finished());

    const auto c5 = matrices(named_graph(Family::cycle, {5}));
    EXPECT_EQ(c5.degree, 2 * IntMatrix::Identity(5, 5));
    EXPECT_TRUE((c5.adjacency.rowwise().sum().array() == 2).all());

    const auto e3 = matrices(named_graph(Family::empty, {3}));
    EXPECT_EQ(e3.adjacency, IntMatrix::Zero(3, 3));
    EXPECT_EQ(e3.laplacian, IntMatrix::Zero(3, 3));
    EXPECT_EQ(e3.complement_adjacency + IntMatrix::Identity(3, 3), IntMatrix::Ones(3, 3));
}

TEST(Matrices, ExactIdentitiesOnCorpus) {
    for (const auto& e : corpus::all()) {
        const auto m = matrices(e.graph);
        const Index n = e.graph.order();
        EXPECT_EQ(m.adjacency + m.complement_adjacency + IntMatrix::Identity(n, n), IntMatrix::Ones(n, n)) << e.name;
        for (int i = 0; i < e.graph.order(); ++i) EXPECT_EQ(m.degree(i, i), e.graph.degree(i));
        EXPECT_EQ(m.laplacian.sum(), 0) << e.name; // <J, L> = 0
        EXPECT_EQ(m.signless_laplacian, m.degree + m.adjacency);
        // one half of L plus A is one half of Q
        EXPECT_EQ(m.laplacian + 2 * m.adjacency, m.signless_laplacian);
    }
}

TEST(Complement, Involution) {
    for (const auto& e : corpus::all()) EXPECT_EQ(complement(complement(e.graph)), e.graph) << e.name;
    EXPECT_EQ(complement(named_graph(Family::complete, {3})), named_graph(Family::empty, {3}));
}

TEST(Complement, C5IsAPentagram) {
    const Graph c = complement(named_graph(Family::cycle, {5}));
    EXPECT_TRUE(c.is_regular());
    EXPECT_EQ(c.min_degree(), 2);
    // a connected 2-regular graph on 5 vertices is a 5-cycle: walk it
    int prev = -1;
    int cur = 0;
    int steps = 0;
    do {
        int next = -1;
        for (int v = 0; v < 5; ++v) {
            if (v != prev && c.adjacent(cur, v)) {
                next = v;
                break;
            }
        }
        ASSERT_NE(next, -1);
        prev = cur;
        cur = next;
        ++steps;
    } while (cur != 0 && steps < 10);
    EXPECT_EQ(steps, 5);
    EXPECT_TRUE(c.adjacent(0, 2));
    EXPECT_FALSE(c.adjacent(0, 1));
}

TEST(Bipartite, MatchesCorpus) {
    for (const auto& e : corpus::all()) EXPECT_EQ(is_bipartite(e.graph), e.bipartite) << e.name;
    EXPECT_TRUE(is_bipartite(named_graph(Family::empty, {3})));
}

TEST(AAlpha, Endpoints) {
    const Graph g = named_graph(Family::petersen, {});
    EXPECT_EQ(a_alpha(g, 0.0).dense(), adjacency_matrix(g).dense());
    EXPECT_EQ(a_alpha(g, 1.0).dense(), degree_matrix(g).dense());
}
