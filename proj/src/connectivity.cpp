#include "modcycle/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>

namespace modcycle {

bool is_2_connected(const Graph& g) {
    int n = g.order();
    if (n < 3 || !is_connected(g)) return false;
    for (int v = 0; v < n; ++v) {
        Mask rest = g.all() & ~bit(v);
        if (component_of(g, std::countr_zero(rest), rest) != rest) return false;
    }
    return true;
}

BlockDecomposition block_decomposition(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("block decomposition needs a connected graph");
    BlockDecomposition out;
    int n = g.order();
    if (n == 0) return out;
    if (n == 1) {
        out.blocks.emplace_back(bit(0));
        out.end_block.push_back(true);
        return out;
    }

    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> stack;
    std::vector<Mask> blocks;
    int clock = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = clock++;
        for_each_bit(g.neighbors(u), [&](int w) {
            if (w == parent) return;
            if (disc[w] < 0) {
                stack.emplace_back(u, w);
                dfs(w, u);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u]) {
                    Mask block = 0;
                    while (true) {
                        auto [a, b] = stack.back();
                        stack.pop_back();
                        block |= bit(a) | bit(b);
                        if (a == u && b == w) break;
                    }
                    blocks.push_back(block);
                }
            } else if (disc[w] < disc[u]) {
                stack.emplace_back(u, w);
                low[u] = std::min(low[u], disc[w]);
            }
        });
    };
    dfs(0, -1);

    std::sort(blocks.begin(), blocks.end(), [](Mask a, Mask b) {
        return std::countr_zero(a) != std::countr_zero(b) ? std::countr_zero(a) < std::countr_zero(b) : a < b;
    });
    Mask seen_once = 0, cut = 0;
    for (Mask b : blocks) {
        cut |= seen_once & b;
        seen_once |= b;
    }
    out.cut_vertices = VertexSet(cut);
    for (Mask b : blocks) {
        out.blocks.emplace_back(b);
        out.end_block.push_back(std::popcount(b & cut) <= 1);
    }
    return out;
}

DisjointPaths max_disjoint_paths(const Graph& g, VertexSet xs, VertexSet ys) {
    if (xs.empty() || ys.empty()) throw UsageError("X and Y must be nonempty");
    if ((xs.mask() | ys.mask()) & ~g.all()) throw UsageError("X or Y refers to missing vertices");
    int n = g.order();
    // node 2v is v_in, 2v+1 is v_out; source 2n, sink 2n+1
    int nodes = 2 * n + 2, s = 2 * n, t = 2 * n + 1;
    std::vector<std::vector<int>> cap(nodes, std::vector<int>(nodes, 0));
    std::vector<std::vector<int>> adj(nodes);
    auto arc = [&](int a, int b) {
        if (cap[a][b] == 0 && cap[b][a] == 0) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        cap[a][b] += 1;
    };
    for (int v = 0; v < n; ++v) arc(2 * v, 2 * v + 1);
    for (auto [u, v] : g.edges()) {
        arc(2 * u + 1, 2 * v);
        arc(2 * v + 1, 2 * u);
    }
    for_each_bit(xs.mask(), [&](int x) { arc(s, 2 * x); });
    for_each_bit(ys.mask(), [&](int y) { arc(2 * y + 1, t); });
    for (auto& a : adj) std::sort(a.begin(), a.end());

    std::vector<std::vector<int>> flow(nodes, std::vector<int>(nodes, 0));
    int total = 0;
    while (true) {
        std::vector<int> prev(nodes, -1);
        prev[s] = s;
        std::deque<int> queue{s};
        while (!queue.empty() && prev[t] < 0) {
            int a = queue.front();
            queue.pop_front();
            for (int b : adj[a])
                if (prev[b] < 0 && cap[a][b] - flow[a][b] > 0) {
                    prev[b] = a;
                    queue.push_back(b);
                }
        }
        if (prev[t] < 0) break;
        for (int b = t; b != s; b = prev[b]) {
            flow[prev[b]][b] += 1;
            flow[b][prev[b]] -= 1;
        }
        ++total;
    }

    DisjointPaths out;
    out.count = total;
    for (int x = 0; x < n; ++x) {
        if (!xs.contains(x) || flow[s][2 * x] <= 0) continue;
        std::vector<int> walk;
        int node = 2 * x;
        while (node != t) {
            if (node % 2 == 0) walk.push_back(node / 2);
            int next = -1;
            for (int b : adj[node])
                if (flow[node][b] > 0) {
                    next = b;
                    break;
                }
            node = next;
        }
        // trim to an (X, Y)-path: last X vertex, then the first Y vertex after it
        std::size_t from = 0;
        for (std::size_t i = 0; i < walk.size(); ++i)
            if (xs.contains(walk[i])) from = i;
        std::size_t to = from;
        while (!ys.contains(walk[to])) ++to;
        out.paths.emplace_back(walk.begin() + static_cast<long>(from), walk.begin() + static_cast<long>(to) + 1);
    }
    return out;
}

bool is_essentially_3_connected(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("essential connectivity is defined for connected graphs");
    int n = g.order();
    auto essential = [&](Mask cut) {
        int nontrivial = 0;
        for (Mask c : components(g, g.all() & ~cut)) {
            bool has_edge = false;
            for_each_bit(c, [&](int v) { has_edge = has_edge || (g.neighbors(v) & c) != 0; });
            if (has_edge && ++nontrivial >= 2) return true;
        }
        return false;
    };
    for (int a = 0; a < n; ++a) {
        if (essential(bit(a))) return false;
        for (int b = a + 1; b < n; ++b)
            if (essential(bit(a) | bit(b))) return false;
    }
    return true;
}

namespace {

// Path embedding on one 2-connected block `block` of g (>= 3 vertices).
bool block_is_planar(const Graph& g, Mask block) {
    auto nbrs = [&](int v) { return g.neighbors(v) & block; };

    // initial cycle: an edge uv closed by a shortest v-u path avoiding uv
    int u = std::countr_zero(block);
    int v = std::countr_zero(nbrs(u));
    std::vector<int> prev(kMaxVertices, -1);
    std::deque<int> queue{v};
    prev[v] = v;
    while (!queue.empty() && prev[u] < 0) {
        int a = queue.front();
        queue.pop_front();
        for_each_bit(nbrs(a), [&](int b) {
            if (prev[b] >= 0 || (a == v && b == u)) return;
            prev[b] = a;
            queue.push_back(b);
        });
    }
    std::vector<int> cycle;
    for (int a = u; a != v; a = prev[a]) cycle.push_back(a);
    cycle.push_back(v);

    std::vector<std::vector<int>> faces{cycle, cycle};
    Mask embedded = 0;
    std::array<Mask, kMaxVertices> emb{};
    auto embed_edge = [&](int a, int b) {
        emb[a] |= bit(b);
        emb[b] |= bit(a);
    };
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        embedded |= bit(cycle[i]);
        embed_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
    }

    auto face_mask = [](const std::vector<int>& f) {
        Mask m = 0;
        for (int a : f) m |= bit(a);
        return m;
    };

    struct Fragment {
        Mask attachments = 0;
        Mask interior = 0;
        int edge_a = -1, edge_b = -1;
    };

    while (true) {
        std::vector<Fragment> fragments;
        for_each_bit(embedded, [&](int a) {
            for_each_bit(nbrs(a) & embedded & ~emb[a] & ~low_bits(a + 1), [&](int b) {
                fragments.push_back({bit(a) | bit(b), 0, a, b});
            });
        });
        for (Mask comp : components(g, block & ~embedded)) {
            Mask att = 0;
            for_each_bit(comp, [&](int a) { att |= nbrs(a) & embedded; });
            fragments.push_back({att, comp, -1, -1});
        }
        if (fragments.empty()) return true;

        std::vector<Mask> fmasks;
        for (const auto& f : faces) fmasks.push_back(face_mask(f));

        // a fragment with a single admissible face is forced; otherwise take the first
        int chosen = -1, chosen_face = -1;
        bool forced = false;
        for (std::size_t i = 0; i < fragments.size(); ++i) {
            int admissible = 0, first = -1;
            for (std::size_t j = 0; j < faces.size(); ++j)
                if ((fragments[i].attachments & ~fmasks[j]) == 0) {
                    if (first < 0) first = static_cast<int>(j);
                    ++admissible;
                }
            if (admissible == 0) return false;
            if (chosen < 0 || (admissible == 1 && !forced)) {
                chosen = static_cast<int>(i);
                chosen_face = first;
                forced = admissible == 1;
            }
        }

        const Fragment& frag = fragments[chosen];
        std::vector<int> path;
        if (frag.interior == 0) {
            path = {frag.edge_a, frag.edge_b};
        } else {
            int a1 = std::countr_zero(frag.attachments);
            Mask rest = frag.attachments & ~bit(a1);
            int a2 = std::countr_zero(rest);
            std::vector<int> from(kMaxVertices, -1);
            std::deque<int> q;
            for_each_bit(nbrs(a1) & frag.interior, [&](int b) {
                from[b] = a1;
                q.push_back(b);
            });
            int end = -1;
            while (!q.empty()) {
                int a = q.front();
                q.pop_front();
                if (g.adjacent(a, a2)) {
                    end = a;
                    break;
                }
                for_each_bit(nbrs(a) & frag.interior, [&](int b) {
                    if (from[b] >= 0) return;
                    from[b] = a;
                    q.push_back(b);
                });
            }
            path.push_back(a2);
            for (int a = end; a != a1; a = from[a]) path.push_back(a);
            path.push_back(a1);
            std::reverse(path.begin(), path.end());
        }

        std::vector<int> face = faces[chosen_face];
        int a1 = path.front(), a2 = path.back();
        std::size_t i1 = std::find(face.begin(), face.end(), a1) - face.begin();
        std::size_t i2 = std::find(face.begin(), face.end(), a2) - face.begin();
        std::vector<int> side1, side2;
        for (std::size_t i = i1;; i = (i + 1) % face.size()) {
            side1.push_back(face[i]);
            if (i == i2) break;
        }
        for (std::size_t i = i2;; i = (i + 1) % face.size()) {
            side2.push_back(face[i]);
            if (i == i1) break;
        }
        std::vector<int> interior(path.begin() + 1, path.end() - 1);
        std::vector<int> f1 = side1, f2 = side2;
        f1.insert(f1.end(), interior.rbegin(), interior.rend());
        f2.insert(f2.end(), interior.begin(), interior.end());
        faces[chosen_face] = f1;
        faces.push_back(f2);

        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            embedded |= bit(path[i]) | bit(path[i + 1]);
            embed_edge(path[i], path[i + 1]);
        }
    }
}

}  // namespace

bool is_planar(const Graph& g) {
    int n = g.order();
    if (n > kPlanarityOrderLimit)
        throw PreconditionError("planarity test is limited to " + std::to_string(kPlanarityOrderLimit) + " vertices");
    if (n >= 3 && g.size() > 3 * n - 6) return false;
    for (Mask comp : components(g, g.all())) {
        auto sub = delete_vertices(g, VertexSet(g.all() & ~comp));
        auto blocks = block_decomposition(sub.graph);
        for (VertexSet b : blocks.blocks) {
            if (b.size() < 5) continue;
            int edges = 0;
            for_each_bit(b.mask(), [&](int v) { edges += std::popcount(sub.graph.neighbors(v) & b.mask()); });
            if (edges / 2 < 9) continue;
            if (!block_is_planar(sub.graph, b.mask())) return false;
        }
    }
    return true;
}

}  // namespace modcycle
