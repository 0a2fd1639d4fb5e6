#include "modcycle/graph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <sstream>

namespace modcycle {

VertexSet::VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) {
        if (v < 0 || v >= kMaxVertices) throw UsageError("vertex id out of range: " + std::to_string(v));
        insert(v);
    }
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    for_each_bit(members_, [&](int v) { out.push_back(v); });
    return out;
}

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw UsageError("graph order must be in [0, 64], got " + std::to_string(n));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw UsageError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

int Graph::size() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw UsageError("loop at vertex " + std::to_string(u));
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    rows_[u] &= ~bit(v);
    rows_[v] &= ~bit(u);
}

int Graph::add_vertex(Mask nbrs) {
    if (n_ == kMaxVertices) throw UsageError("graph already has 64 vertices");
    if (nbrs & ~all()) throw UsageError("neighbour set refers to missing vertices");
    int v = n_++;
    rows_[v] = nbrs;
    for_each_bit(nbrs, [&](int u) { rows_[u] |= bit(v); });
    return v;
}

int Graph::min_degree() const {
    int best = n_ == 0 ? 0 : kMaxVertices;
    for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for_each_bit(rows_[u] & ~low_bits(u + 1), [&](int v) { out.emplace_back(u, v); });
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

Graph Graph::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw UsageError("permutation length mismatch");
    Graph out(n_);
    for (int u = 0; u < n_; ++u) {
        Mask row = 0;
        for_each_bit(rows_[u], [&](int v) { row |= bit(perm[v]); });
        out.rows_[perm[u]] = row;
    }
    return out;
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    return std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
}

int degree(const Graph& g, int v) {
    if (v < 0 || v >= g.order())
        throw UsageError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(g.order()));
    return g.degree(v);
}

VertexSet two_vertex_set(const Graph& g) {
    Mask m = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 2) m |= bit(v);
    return VertexSet(m);
}

std::vector<std::pair<int, int>> two_twins(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    auto twos = two_vertex_set(g).to_vector();
    for (std::size_t i = 0; i < twos.size(); ++i)
        for (std::size_t j = i + 1; j < twos.size(); ++j)
            if (g.neighbors(twos[i]) == g.neighbors(twos[j])) out.emplace_back(twos[i], twos[j]);
    return out;
}

std::vector<std::pair<int, int>> adjacent_two_vertices(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    Mask twos = two_vertex_set(g).mask();
    for_each_bit(twos, [&](int u) {
        for_each_bit(g.neighbors(u) & twos & ~low_bits(u + 1), [&](int v) { out.emplace_back(u, v); });
    });
    return out;
}

Mask component_of(const Graph& g, int v, Mask within) {
    Mask seen = bit(v);
    Mask frontier = seen;
    while (frontier) {
        Mask next = 0;
        for_each_bit(frontier, [&](int u) { next |= g.neighbors(u); });
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

std::vector<Mask> components(const Graph& g, Mask within) {
    std::vector<Mask> out;
    Mask left = within & g.all();
    while (left) {
        Mask c = component_of(g, std::countr_zero(left), left);
        out.push_back(c);
        left &= ~c;
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    return component_of(g, 0, g.all()) == g.all();
}

InducedSubgraph delete_vertices(const Graph& g, VertexSet s) {
    if (s.mask() & ~g.all()) throw UsageError("vertex set refers to missing vertices");
    InducedSubgraph out;
    out.old_to_new.assign(g.order(), -1);
    for (int v = 0; v < g.order(); ++v) {
        if (s.contains(v)) continue;
        out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
        out.new_to_old.push_back(v);
    }
    out.graph = Graph(static_cast<int>(out.new_to_old.size()));
    for (auto [u, v] : g.edges())
        if (!s.contains(u) && !s.contains(v)) out.graph.add_edge(out.old_to_new[u], out.old_to_new[v]);
    return out;
}

SuppressionResult suppress_two_vertices(const Graph& g) {
    Mask twos = two_vertex_set(g).mask();
    for (Mask c : components(g, g.all()))
        if ((c & ~twos) == 0) throw PreconditionError("component is a cycle of 2-vertices; nothing to suppress onto");

    std::vector<int> keep_id(g.order(), -1);
    int kept = 0;
    for (int v = 0; v < g.order(); ++v)
        if (!((twos >> v) & 1u)) keep_id[v] = kept++;

    // Each thread of 2-vertices is walked from both ends; count it from the end
    // with the smaller id (or, for a loop, the direction with smaller first step).
    std::map<std::pair<int, int>, int> multiplicity;
    for (int u = 0; u < g.order(); ++u) {
        if (keep_id[u] < 0) continue;
        for_each_bit(g.neighbors(u), [&](int first) {
            int prev = u, cur = first;
            while (keep_id[cur] < 0) {
                Mask onward = g.neighbors(cur) & ~bit(prev);
                prev = cur;
                cur = std::countr_zero(onward);
            }
            int last = prev;
            bool count_here = u < cur || (u == cur && first <= last);
            if (count_here) ++multiplicity[{u, cur}];
        });
    }

    Graph out(kept);
    for (auto [ends, count] : multiplicity) {
        auto [u, w] = ends;
        if (u == w || count > 1) return NonSimpleResult{u, w};
        out.add_edge(keep_id[u], keep_id[w]);
    }
    return out;
}

namespace named {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw UsageError("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

Graph prism() {
    return Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

Graph bowtie() {
    return Graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
}

Graph subdivided(const Graph& g) {
    Graph out(g.order());
    for (auto [u, v] : g.edges()) {
        int w = out.add_vertex();
        out.add_edge(u, w);
        out.add_edge(w, v);
    }
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph out(a.order() + b.order());
    for (auto [u, v] : a.edges()) out.add_edge(u, v);
    for (auto [u, v] : b.edges()) out.add_edge(a.order() + u, a.order() + v);
    return out;
}

}  // namespace named

// graph6: N(n) followed by the upper triangle read column by column,
// x(0,1) x(0,2) x(1,2) x(0,3) ..., packed big-endian into 6-bit groups + 63.

std::string to_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph from_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    std::size_t base = 0;
    if (text.substr(0, header.size()) == header) base = header.size();
    std::string_view body = text.substr(base);

    auto sextet = [&](std::size_t i) {
        if (i >= body.size()) throw FormatError(base + i, "unexpected end of graph6 data");
        int c = static_cast<unsigned char>(body[i]);
        if (c < 63 || c > 126) throw FormatError(base + i, "byte " + std::to_string(c) + " outside graph6 range 63..126");
        return c - 63;
    };

    std::size_t pos = 0;
    long n = sextet(pos++);
    if (n == 63) {
        if (pos < body.size() && body[pos] == 126) throw FormatError(base + pos, "graph order exceeds 64");
        n = 0;
        for (int k = 0; k < 3; ++k) n = (n << 6) | sextet(pos++);
    }
    if (n > kMaxVertices) throw FormatError(base, "graph order " + std::to_string(n) + " exceeds 64");

    Graph g(static_cast<int>(n));
    long total = n * (n - 1) / 2;
    std::size_t expected = pos + static_cast<std::size_t>((total + 5) / 6);
    if (body.size() > expected) throw FormatError(base + expected, "trailing bytes after graph6 data");

    long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int group = sextet(pos + static_cast<std::size_t>(k / 6));
            if ((group >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    if (total % 6 != 0) {
        std::size_t last = pos + static_cast<std::size_t>(total / 6);
        int pad = 6 - static_cast<int>(total % 6);
        if (sextet(last) & ((1 << pad) - 1)) throw FormatError(base + last, "nonzero padding bits");
    }
    return g;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    std::size_t offset = 0;
    while (std::getline(in, line)) {
        std::size_t line_start = offset;
        offset += line.size() + 1;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back(from_graph6(line));
        } catch (const FormatError& e) {
            throw FormatError(line_start + e.offset(), e.detail());
        }
    }
    return out;
}

std::string to_adjacency_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph from_adjacency_list(std::istream& in) {
    std::string line;
    std::size_t offset = 0;
    auto next_line = [&](std::string& dst) {
        while (std::getline(in, dst)) {
            std::size_t start = offset;
            offset += dst.size() + 1;
            if (dst.find_first_not_of(" \t\r") != std::string::npos) return std::optional<std::size_t>(start);
        }
        return std::optional<std::size_t>();
    };
    auto head = next_line(line);
    if (!head) throw FormatError(0, "missing vertex count");
    std::istringstream first(line);
    int n = -1;
    if (!(first >> n) || n < 0 || n > kMaxVertices) throw FormatError(*head, "bad vertex count");
    Graph g(n);
    while (auto at = next_line(line)) {
        std::istringstream row(line);
        int u = -1, v = -1;
        std::string extra;
        if (!(row >> u >> v) || (row >> extra)) throw FormatError(*at, "expected \"u v\"");
        if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw FormatError(*at, "invalid edge");
        g.add_edge(u, v);
    }
    return g;
}

}  // namespace modcycle
