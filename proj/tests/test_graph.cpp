#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "modcycle/canon.hpp"
#include "modcycle/connectivity.hpp"
#include "modcycle/graph.hpp"
#include "oracles.hpp"

using namespace modcycle;

namespace {

using Pairs = std::vector<std::pair<int, int>>;

}  // namespace

TEST_SUITE("graph") {
    TEST_CASE("degree") {
        Graph k23 = named::complete_bipartite(2, 3);
        CHECK(degree(k23, 0) == 3);
        CHECK(degree(k23, 1) == 3);
        for (int v = 0; v < 5; ++v) CHECK(degree(named::cycle(5), v) == 2);
        for (int v = 0; v < 4; ++v) CHECK(degree(named::complete(4), v) == 3);
        CHECK_THROWS_AS(degree(k23, 5), UsageError);
        CHECK_THROWS_AS(degree(k23, -1), UsageError);
    }

    TEST_CASE("two-vertex set") {
        CHECK(two_vertex_set(named::complete_bipartite(2, 3)).to_vector() == std::vector<int>{2, 3, 4});
        CHECK(two_vertex_set(named::petersen()).empty());
        CHECK(two_vertex_set(named::cycle(4)).size() == 4);
    }

    TEST_CASE("2-twins") {
        CHECK(two_twins(named::complete_bipartite(2, 3)) == Pairs{{2, 3}, {2, 4}, {3, 4}});
        CHECK(two_twins(named::cycle(4)) == Pairs{{0, 2}, {1, 3}});
        CHECK(two_twins(named::cycle(5)).empty());
    }

    TEST_CASE("adjacent 2-vertices") {
        CHECK(adjacent_two_vertices(named::cycle(5)).size() == 5);
        CHECK(adjacent_two_vertices(named::complete_bipartite(2, 3)).empty());
        CHECK(adjacent_two_vertices(named::subdivided(named::complete(4))).empty());
    }

    TEST_CASE("delete vertices") {
        auto k3 = delete_vertices(named::complete(4), VertexSet(bit(2)));
        CHECK(k3.graph == named::complete(3));
        CHECK(k3.old_to_new == std::vector<int>{0, 1, -1, 2});
        CHECK(k3.new_to_old == std::vector<int>{0, 1, 3});

        auto c4 = delete_vertices(named::complete_bipartite(2, 3), VertexSet(bit(4)));
        CHECK(oracle::isomorphic(c4.graph, named::cycle(4)));

        Graph p = named::petersen();
        CHECK(delete_vertices(p, VertexSet()).graph == p);
        CHECK_THROWS_AS(delete_vertices(p, VertexSet(bit(10))), UsageError);
    }

    TEST_CASE("delete vertices composes in any order") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 50; ++trial) {
            Graph g = oracle::random_graph(rng, 8, 0.5);
            Mask a = rng() & g.all(), b = rng() & g.all() & ~a;
            Graph once = delete_vertices(g, VertexSet(a | b)).graph;
            auto first = delete_vertices(g, VertexSet(a));
            Mask b_new = 0;
            for_each_bit(b, [&](int v) { b_new |= bit(first.old_to_new[v]); });
            CHECK(delete_vertices(first.graph, VertexSet(b_new)).graph == once);
        }
    }

    TEST_CASE("suppress 2-vertices") {
        auto k4 = suppress_two_vertices(named::subdivided(named::complete(4)));
        REQUIRE(std::holds_alternative<Graph>(k4));
        CHECK(std::get<Graph>(k4) == named::complete(4));

        auto same = suppress_two_vertices(named::complete(4));
        REQUIRE(std::holds_alternative<Graph>(same));
        CHECK(std::get<Graph>(same) == named::complete(4));

        auto multi = suppress_two_vertices(named::complete_bipartite(2, 3));
        REQUIRE(std::holds_alternative<NonSimpleResult>(multi));
        CHECK(std::get<NonSimpleResult>(multi).u == 0);
        CHECK(std::get<NonSimpleResult>(multi).v == 1);

        CHECK_THROWS_AS(suppress_two_vertices(named::cycle(5)), PreconditionError);
        CHECK_THROWS_AS(suppress_two_vertices(named::disjoint_union(named::complete(4), named::cycle(3))),
                        PreconditionError);
    }

    TEST_CASE("suppression of an independent V2 leaves min degree 3") {
        std::mt19937_64 rng(11);
        int checked = 0;
        for (int trial = 0; trial < 3000; ++trial) {
            Graph g = oracle::random_graph(rng, 9, 0.35);
            if (g.min_degree() < 2 || !adjacent_two_vertices(g).empty()) continue;
            auto s = suppress_two_vertices(g);
            if (auto* h = std::get_if<Graph>(&s)) {
                ++checked;
                if (h->order() > 0) CHECK(h->min_degree() >= 3);
            }
        }
        CHECK(checked > 50);
    }

    TEST_CASE("degree multiset is invariant under relabeling") {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 100; ++trial) {
            Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 12), 0.4);
            CHECK(oracle::shuffled(g, rng).degree_sequence() == g.degree_sequence());
        }
    }

    TEST_CASE("graph6 known encodings") {
        CHECK(to_graph6(named::complete(5)) == "D~{");
        CHECK(to_graph6(named::petersen()) == "IheA@GUAo");
        CHECK(to_graph6(Graph(0)) == "?");
        CHECK(from_graph6(">>graph6<<D~{") == named::complete(5));
        CHECK(from_graph6("IheA@GUAo") == named::petersen());
        CHECK(to_graph6(named::complete_bipartite(2, 3)) == "D]o");
        CHECK(to_graph6(canonical_form(named::complete_bipartite(2, 3)).graph()) == "DFw");
    }

    TEST_CASE("graph6 round trip") {
        std::mt19937_64 rng(5);
        for (int n : {0, 1, 2, 7, 8, 13, 62, 63, 64}) {
            Graph g = oracle::random_graph(rng, n, 0.3);
            CHECK(from_graph6(to_graph6(g)) == g);
        }
    }

    TEST_CASE("graph6 errors carry byte offsets") {
        auto offset_of = [](std::string_view s) -> long {
            try {
                from_graph6(s);
            } catch (const FormatError& e) {
                return static_cast<long>(e.offset());
            }
            return -1;
        };
        CHECK(offset_of("D~") == 2);
        CHECK(offset_of("D~{x") == 3);
        CHECK(offset_of("D\x20{") == 1);
        CHECK(offset_of(">>graph6<<D~") == 12);
        CHECK(offset_of("Bx") == 1);  // padding bits set
        CHECK(offset_of("") == 0);

        std::istringstream lines("DFw\nD~{\nD~\n");
        try {
            read_graph6_lines(lines);
            FAIL("expected FormatError");
        } catch (const FormatError& e) {
            CHECK(e.offset() == 10);
        }
    }

    TEST_CASE("adjacency list format") {
        Graph p = named::petersen();
        std::istringstream in(to_adjacency_list(p));
        CHECK(from_adjacency_list(in) == p);
        std::istringstream bad("3\n0 1\n1 3\n");
        CHECK_THROWS_AS(from_adjacency_list(bad), FormatError);
        std::istringstream loop("3\n1 1\n");
        CHECK_THROWS_AS(from_adjacency_list(loop), FormatError);
    }

    TEST_CASE("mutators keep the graph simple") {
        Graph g(3);
        CHECK_THROWS_AS(g.add_edge(1, 1), UsageError);
        CHECK_THROWS_AS(g.add_edge(0, 3), UsageError);
        g.add_edge(0, 1);
        g.add_edge(1, 0);
        CHECK(g.size() == 1);
        CHECK_THROWS_AS(Graph(65), UsageError);
        CHECK(g.add_vertex(bit(0) | bit(2)) == 3);
        CHECK(g.degree(3) == 2);
    }
}
