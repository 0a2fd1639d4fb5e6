#ifndef MODCYCLE_GRAPH_HPP
#define MODCYCLE_GRAPH_HPP

// Small simple undirected graphs with one 64-bit adjacency row per vertex.

#include <array>
#include <bit>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "modcycle/errors.hpp"

namespace modcycle {

inline constexpr int kMaxVertices = 64;

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }

/// Iterates the set bits of a mask in ascending order.
template <class F>
void for_each_bit(Mask m, F&& f) {
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        f(v);
    }
}

/// A subset of the vertex ids 0..n-1 of some graph.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Mask members) : members_(members) {}
    VertexSet(std::initializer_list<int> vs);

    constexpr Mask mask() const { return members_; }
    constexpr bool contains(int v) const { return (members_ >> v) & 1u; }
    constexpr int size() const { return std::popcount(members_); }
    constexpr bool empty() const { return members_ == 0; }
    void insert(int v) { members_ |= bit(v); }
    void erase(int v) { members_ &= ~bit(v); }

    std::vector<int> to_vector() const;

    friend constexpr bool operator==(VertexSet, VertexSet) = default;

private:
    Mask members_ = 0;
};

/// Simple undirected graph on vertices 0..n-1, n <= 64.
///
/// Rows are kept symmetric and irreflexive by every mutator, so a Graph value
/// is always a valid simple graph.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int size() const;  // edge count

    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1u; }
    Mask neighbors(int v) const { return rows_[v]; }
    int degree(int v) const { return std::popcount(rows_[v]); }
    Mask all() const { return low_bits(n_); }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    /// Appends a vertex adjacent to `nbrs` and returns its id.
    int add_vertex(Mask nbrs = 0);

    int min_degree() const;
    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> degree_sequence() const;  // sorted ascending

    /// Returns sigma(g): vertex v of this graph becomes perm[v].
    Graph permuted(const std::vector<int>& perm) const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::array<Mask, kMaxVertices> rows_{};
};

// ---- queries --------------------------------------------------------------

/// Degree with range checking; throws UsageError for a bad id.
int degree(const Graph& g, int v);

/// Vertices of degree exactly 2.
VertexSet two_vertex_set(const Graph& g);

/// Pairs {u, v}, u < v, of 2-vertices with identical neighbourhoods.
std::vector<std::pair<int, int>> two_twins(const Graph& g);

/// Edges whose endpoints both have degree 2, as (u, v) with u < v.
std::vector<std::pair<int, int>> adjacent_two_vertices(const Graph& g);

bool is_connected(const Graph& g);

/// Vertex set of the component containing v, restricted to `within`.
Mask component_of(const Graph& g, int v, Mask within);

/// Components of g[within], each as a mask, ordered by smallest member.
std::vector<Mask> components(const Graph& g, Mask within);

// ---- local edits ----------------------------------------------------------

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for deleted vertices
    std::vector<int> new_to_old;
};

/// g - s with ids re-densified in increasing order of the old ids.
InducedSubgraph delete_vertices(const Graph& g, VertexSet s);

/// Suppression would create a loop or a parallel edge between u and v.
struct NonSimpleResult {
    int u = -1;
    int v = -1;
};

using SuppressionResult = std::variant<Graph, NonSimpleResult>;

/// Replaces every maximal path with all-degree-2 interior by one edge.
/// The result keeps the vertices of degree != 2, re-densified in id order.
/// Throws PreconditionError if some component is a cycle of 2-vertices.
SuppressionResult suppress_two_vertices(const Graph& g);

// ---- named graphs ---------------------------------------------------------

namespace named {
Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph complete_bipartite(int a, int b);  // part of size a first
Graph petersen();
Graph prism();                       // triangular prism, C3 x K2
Graph bowtie();                      // two triangles sharing vertex 0
Graph subdivided(const Graph& g);    // every edge subdivided once
Graph disjoint_union(const Graph& a, const Graph& b);
}  // namespace named

// ---- interchange formats --------------------------------------------------

std::string to_graph6(const Graph& g);

/// Decodes one graph6 string; an optional ">>graph6<<" header is accepted.
/// Throws FormatError carrying the byte offset of the first bad byte.
Graph from_graph6(std::string_view text);

/// Reads every non-empty line of `in` as graph6.
std::vector<Graph> read_graph6_lines(std::istream& in);

/// "n" on the first line, then one "u v" edge per line, 0-based.
std::string to_adjacency_list(const Graph& g);
Graph from_adjacency_list(std::istream& in);

}  // namespace modcycle

#endif
