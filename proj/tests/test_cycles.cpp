#include <doctest.h>

#include <random>

#include "modcycle/cycles.hpp"
#include "modcycle/families.hpp"
#include "oracles.hpp"

using namespace modcycle;

namespace {

ResidueSet reduce(const std::set<int>& lengths, int k) {
    ResidueSet out(k);
    for (int l : lengths) out.insert(l % k);
    return out;
}

// Every graph on n vertices, by edge subset.
template <class F>
void all_graphs(int n, F&& f) {
    int slots = n * (n - 1) / 2;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << slots); ++s) {
        Graph g(n);
        int e = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++e)
                if ((s >> e) & 1u) g.add_edge(i, j);
        f(g);
    }
}

}  // namespace

TEST_SUITE("cycles") {
    TEST_CASE("find cycle mod k examples") {
        Graph k23 = named::complete_bipartite(2, 3);
        CHECK_FALSE(find_cycle_mod(k23, 3, 0));
        auto c4 = find_cycle_mod(k23, 4, 0);
        REQUIRE(c4);
        CHECK(c4->length() == 4);
        CHECK(validate_certificate(k23, *c4));

        Graph p = named::petersen();
        auto c8 = find_cycle_mod(p, 4, 0);
        REQUIRE(c8);
        CHECK(c8->length() == 8);
        CHECK(validate_certificate(p, *c8));
        CHECK(oracle::cycle_lengths(p) == std::set<int>{5, 6, 8, 9});

        for (const auto& e : generate_exceptional(13)) CHECK_FALSE(find_cycle_mod(e.graph, 3, 0));
    }

    TEST_CASE("cycle length residues examples") {
        CHECK(cycle_length_residues(named::cycle(5), 4) == ResidueSet(4, {1}));
        CHECK(cycle_length_residues(named::complete(4), 3) == ResidueSet(3, {0, 1}));
        CHECK(cycle_length_residues(named::complete_bipartite(2, 3), 3) == ResidueSet(3, {1}));
        CHECK(cycle_length_residues(named::path(6), 3).empty());
    }

    TEST_CASE("path residues examples") {
        Graph k23 = named::complete_bipartite(2, 3);
        CHECK(path_residues(k23, 2, 3, 3) == ResidueSet(3, {1, 2}));
        CHECK(oracle::path_lengths(k23, 2, 3) == std::set<int>{2, 4});
        CHECK(path_residues(named::complete(2), 0, 1, 3) == ResidueSet(3, {1}));

        // P(K23; 3, 4): the two new vertices 5, 6 are adjacent non-root 2-vertices
        Graph g = apply_P(k23, 3, 4);
        CHECK(path_residues(g, 5, 6, 3) == ResidueSet(3, {0, 1}));
        CHECK(path_residues(Graph(3), 0, 2, 3).empty());
    }

    TEST_CASE("argument checks") {
        Graph k4 = named::complete(4);
        CHECK_THROWS_AS(find_cycle_mod(k4, 1, 0), UsageError);
        CHECK_THROWS_AS(find_cycle_mod(k4, 65, 0), UsageError);
        CHECK_THROWS_AS(find_cycle_mod(k4, 3, 3), UsageError);
        CHECK_THROWS_AS(find_cycle_mod(k4, 3, -1), UsageError);
        CHECK_THROWS_AS(path_residues(k4, 1, 1, 3), UsageError);
        CHECK_THROWS_AS(path_residues(k4, 0, 4, 3), UsageError);
        CHECK_THROWS_AS(find_cycle_mod_through(k4, 7, 3, 0), UsageError);
        CHECK_THROWS_AS(ResidueSet(3, {3}), UsageError);
    }

    TEST_CASE("budget exhaustion is an error, not an answer") {
        Graph big = named::complete(14);
        CHECK_THROWS_AS(find_cycle_mod(big, 61, 0, 1000), Indeterminate);
        CHECK_THROWS_AS(cycle_length_residues(big, 64, 1000), Indeterminate);
        CHECK_THROWS_AS(path_residues(big, 0, 1, 64, 1000), Indeterminate);
        try {
            find_cycle_mod(big, 61, 0, 1000);
        } catch (const Indeterminate& e) {
            CHECK(e.budget() == 1000);
        }
    }

    TEST_CASE("certificate validation rejects bad cycles") {
        Graph c5 = named::cycle(5);
        CHECK(validate_certificate(c5, {5, 0, {0, 1, 2, 3, 4}}));
        CHECK_FALSE(validate_certificate(c5, {4, 0, {0, 1, 2, 3, 4}}));
        CHECK_FALSE(validate_certificate(c5, {5, 0, {0, 2, 1, 3, 4}}));
        CHECK_FALSE(validate_certificate(c5, {5, 0, {0, 1, 2, 3, 4, 0}}));
        CHECK_FALSE(validate_certificate(c5, {2, 0, {0, 1}}));
        CHECK_FALSE(validate_certificate(c5, {3, 2, {0, 1, 9}}));
    }

    TEST_CASE("cycle search agrees with plain enumeration on every graph up to 6 vertices") {
        for (int n = 3; n <= 6; ++n)
            all_graphs(n, [&](const Graph& g) {
                auto lengths = oracle::cycle_lengths(g);
                for (int k = 2; k <= 7; ++k) {
                    ResidueSet truth = reduce(lengths, k);
                    CHECK(cycle_length_residues(g, k) == truth);
                    for (int r = 0; r < k; ++r) {
                        auto c = find_cycle_mod(g, k, r);
                        CHECK(c.has_value() == truth.contains(r));
                        if (c) CHECK(validate_certificate(g, *c));
                    }
                }
            });
    }

    TEST_CASE("cycle and path search agree with plain enumeration on random graphs up to 8 vertices") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 1500; ++trial) {
            int n = 3 + static_cast<int>(rng() % 6);
            Graph g = oracle::random_graph(rng, n, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0);
            auto lengths = oracle::cycle_lengths(g);
            int k = 2 + static_cast<int>(rng() % 6);
            ResidueSet truth = reduce(lengths, k);
            CHECK(cycle_length_residues(g, k) == truth);
            int r = static_cast<int>(rng() % k);
            auto c = find_cycle_mod(g, k, r);
            CHECK(c.has_value() == truth.contains(r));
            if (c) CHECK(validate_certificate(g, *c));

            int x = static_cast<int>(rng() % n), y = static_cast<int>(rng() % n);
            if (x == y) continue;
            CHECK(path_residues(g, x, y, k) == reduce(oracle::path_lengths(g, x, y), k));
            auto w = path_residue_witnesses(g, x, y, k);
            for (int res = 0; res < k; ++res) {
                if (w[res].empty()) continue;
                CHECK(w[res].front() == x);
                CHECK(w[res].back() == y);
                CHECK(static_cast<int>(w[res].size() - 1) % k == res);
                for (std::size_t i = 0; i + 1 < w[res].size(); ++i) CHECK(g.adjacent(w[res][i], w[res][i + 1]));
            }
        }
    }

    TEST_CASE("cycles through a vertex") {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 300; ++trial) {
            int n = 4 + static_cast<int>(rng() % 4);
            Graph g = oracle::random_graph(rng, n, 0.5);
            int v = static_cast<int>(rng() % n);
            int k = 2 + static_cast<int>(rng() % 4), r = static_cast<int>(rng() % k);
            // cycles through v: v plus a path between two of its neighbours
            bool truth = false;
            auto rest = delete_vertices(g, VertexSet(bit(v)));
            for_each_bit(g.neighbors(v), [&](int a) {
                for_each_bit(g.neighbors(v), [&](int b) {
                    if (a >= b) return;
                    for (int l : oracle::path_lengths(rest.graph, rest.old_to_new[a], rest.old_to_new[b]))
                        truth = truth || (l + 2) % k == r;
                });
            });
            auto c = find_cycle_mod_through(g, v, k, r);
            CHECK(c.has_value() == truth);
            if (c) {
                CHECK(validate_certificate(g, *c));
                CHECK(std::find(c->vertices.begin(), c->vertices.end(), v) != c->vertices.end());
            }
        }
    }

    TEST_CASE("adding an edge never removes a cycle residue") {
        std::mt19937_64 rng(29);
        for (int trial = 0; trial < 300; ++trial) {
            int n = 4 + static_cast<int>(rng() % 6);
            Graph g = oracle::random_graph(rng, n, 0.35);
            int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
            if (a == b || g.adjacent(a, b)) continue;
            Graph h = g;
            h.add_edge(a, b);
            for (int k = 2; k <= 6; ++k) CHECK(cycle_length_residues(g, k).subset_of(cycle_length_residues(h, k)));
        }
    }
}
