#include "modcycle/enumerate.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <string>

namespace modcycle {

int ClassConstraints::effective_min_degree() const {
    return std::max(min_degree, min_degree_global.value_or(0));
}

bool ClassConstraints::admits(const Graph& g) const {
    if (g.order() != n) return false;
    if (n > 0 && g.min_degree() < effective_min_degree()) return false;
    if (max_two_vertices >= 0 && two_vertex_set(g).size() > max_two_vertices) return false;
    return !connected || is_connected(g);
}

namespace {

void check_constraints(const ClassConstraints& c) {
    if (c.n < 0 || c.n > kEnumerationOrderLimit)
        throw PreconditionError("enumeration supports 0 <= n <= " + std::to_string(kEnumerationOrderLimit));
}

class Augmenter {
public:
    Augmenter(const ClassConstraints& c, int part, int parts, const GraphSink& sink)
        : c_(c), n_(c.n), dmin_(c.effective_min_degree()),
          max2_(c.max_two_vertices < 0 ? INT_MAX : c.max_two_vertices),
          v2prune_(dmin_ >= 2 && c.max_two_vertices >= 0), part_(part), parts_(parts),
          split_level_(std::max(1, n_ - 3)), canon_(static_cast<std::size_t>(n_) + 1), sink_(sink) {}

    void run() {
        if (n_ == 0) {
            Graph empty(0);
            if (part_ == 0 && c_.admits(empty)) sink_(empty, canonical_form(empty));
            return;
        }
        Graph root(1);
        CanonicalForm key = canonical_form(root);
        if (n_ == 1) {
            if (part_ == 0 && c_.admits(root)) sink_(root, key);
            return;
        }
        // the lone vertex must still be able to reach the degree floor
        if (n_ - 1 < dmin_) return;
        if (v2prune_ && n_ - 1 <= 2 && max2_ < 1) return;
        if (split_level_ == 1 && (split_counter_++ % static_cast<std::uint64_t>(parts_)) != static_cast<std::uint64_t>(part_)) return;
        extend(root, key, false);
    }

private:
    void extend(const Graph& parent, const CanonicalForm& parent_key, bool parent_has_aut) {
        const int m = parent.order();
        const int child_level = m + 1;
        const int slack = n_ - child_level;  // vertices still to come after the child

        std::array<int, kMaxVertices> deg{};
        std::array<Mask, kMaxVertices + 2> below{};  // below[d]: deg < d
        int min_deg = INT_MAX;
        for (int u = 0; u < m; ++u) {
            deg[u] = parent.degree(u);
            min_deg = std::min(min_deg, deg[u]);
        }
        for (int d = 0; d <= m + 1; ++d) {
            Mask b = 0;
            for (int u = 0; u < m; ++u)
                if (deg[u] < d) b |= bit(u);
            below[d] = b;
        }
        auto below_at = [&](int d) -> Mask { return d <= 0 ? 0 : below[std::min(d, m + 1)]; };

        // vertices that must gain the new neighbour to reach the degree floor
        Mask forced = below_at(dmin_ - slack);
        if (below_at(dmin_ - slack - 1)) return;
        Mask free = parent.all() & ~forced;
        int nforced = std::popcount(forced);

        int lo = std::max({nforced, dmin_ - slack, 0});
        int hi = std::min(m, min_deg + 1);

        std::vector<CanonicalForm> siblings;
        Canonizer& cz = canon_[child_level];

        for (int k = lo; k <= hi; ++k) {
            int pick = k - nforced;
            if (pick < 0 || pick > std::popcount(free)) continue;
            for_each_subset(free, pick, [&](Mask chosen) {
                Mask s = forced | chosen;
                // the new vertex must have minimum degree in the child
                if (below_at(k) & ~s) return;
                if (k >= 1 && (below_at(k - 1) & s)) return;
                if (v2prune_) {
                    int twos = std::popcount(below_at(3 - slack) & ~s) + std::popcount(below_at(2 - slack) & s) +
                               (k + slack <= 2 ? 1 : 0);
                    if (twos > max2_) return;
                }
                Graph child = parent;
                child.add_vertex(s);
                if (child_level == n_ && c_.connected && !is_connected(child)) return;
                if (child_level == n_ && !v2prune_ && two_vertex_set(child).size() > max2_) return;

                cz.run(child);
                int last_min = -1;
                for (int pos = m; pos >= 0; --pos) {
                    int v = cz.vertex_at(pos);
                    if (child.degree(v) == k) {
                        last_min = v;
                        break;
                    }
                }
                bool accept = last_min == m || cz.same_orbit(m, last_min);
                if (!accept) {
                    // isomorphic parents are necessary but not sufficient
                    auto reduced = delete_vertices(child, VertexSet(bit(last_min)));
                    accept = canonical_form(reduced.graph) == parent_key && equivalent_vertices(child, m, last_min);
                }
                if (!accept) return;

                CanonicalForm key = cz.form();
                if (parent_has_aut) {
                    if (std::find(siblings.begin(), siblings.end(), key) != siblings.end()) return;
                    siblings.push_back(key);
                }
                if (child_level == split_level_ && (split_counter_++ % static_cast<std::uint64_t>(parts_)) != static_cast<std::uint64_t>(part_)) return;
                if (child_level == n_) {
                    sink_(cz.canonical_graph(), key);
                } else {
                    bool aut = cz.has_automorphisms();
                    extend(child, key, aut);
                }
            });
        }
    }

    // Calls f on every subset of `pool` with exactly `size` members,
    // in increasing order of the subset read as a number.
    template <class F>
    static void for_each_subset(Mask pool, int size, F&& f) {
        std::array<int, kMaxVertices> members;
        int count = 0;
        for_each_bit(pool, [&](int v) { members[count++] = v; });
        if (size == 0) {
            f(Mask{0});
            return;
        }
        if (size > count) return;
        // Gosper's hack over positions, mapped back to vertex ids
        std::uint64_t sel = (std::uint64_t{1} << size) - 1;
        std::uint64_t limit = count >= 64 ? 0 : (std::uint64_t{1} << count);
        while (sel < limit || (limit == 0 && sel != 0)) {
            Mask s = 0;
            for_each_bit(sel, [&](int i) { s |= bit(members[i]); });
            f(s);
            std::uint64_t low = sel & -sel;
            std::uint64_t ripple = sel + low;
            if (ripple == 0) break;
            sel = ripple | (((sel ^ ripple) >> 2) / low);
        }
    }

    const ClassConstraints& c_;
    int n_;
    int dmin_;
    int max2_;
    bool v2prune_;
    int part_, parts_;
    int split_level_;
    std::uint64_t split_counter_ = 0;
    std::vector<Canonizer> canon_;
    const GraphSink& sink_;
};

}  // namespace

void enumerate_partition(const ClassConstraints& c, int part, int parts, const GraphSink& sink) {
    check_constraints(c);
    if (parts < 1 || part < 0 || part >= parts) throw UsageError("bad partition index");
    Augmenter(c, part, parts, sink).run();
}

void enumerate_class(const ClassConstraints& c, const GraphSink& sink) {
    enumerate_partition(c, 0, 1, sink);
}

std::uint64_t count_class(const ClassConstraints& c) {
    std::uint64_t count = 0;
    enumerate_class(c, [&](const Graph&, const CanonicalForm&) { ++count; });
    return count;
}

std::vector<CanonicalForm> naive_enumerate_class(const ClassConstraints& c) {
    if (c.n < 0 || c.n > 7) throw PreconditionError("naive enumeration is limited to n <= 7");
    int n = c.n;
    std::vector<std::pair<int, int>> slots;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
    std::set<CanonicalForm> keys;
    Canonizer cz;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << slots.size()); ++s) {
        Graph g(n);
        for (std::size_t e = 0; e < slots.size(); ++e)
            if ((s >> e) & 1u) g.add_edge(slots[e].first, slots[e].second);
        if (!c.admits(g)) continue;
        cz.run(g);
        keys.insert(cz.form());
    }
    return {keys.begin(), keys.end()};
}

}  // namespace modcycle
