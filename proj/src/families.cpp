#include "modcycle/families.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include "modcycle/connectivity.hpp"

namespace modcycle {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw UsageError(what);
}

void require_vertex(const Graph& h, int v) {
    require(v >= 0 && v < h.order(), "vertex " + std::to_string(v) + " out of range");
}

void require_room(const Graph& h, int extra) {
    require(h.order() + extra <= kMaxVertices, "graph would exceed 64 vertices");
}

Mask two_vertices_within(const Graph& g, Mask alive) {
    Mask out = 0;
    for_each_bit(alive, [&](int v) {
        if (std::popcount(g.neighbors(v) & alive) == 2) out |= bit(v);
    });
    return out;
}

int other_neighbor(const Graph& g, Mask alive, int v, int not_this) {
    return std::countr_zero(g.neighbors(v) & alive & ~bit(not_this));
}

// Breadth-first distance between a and b inside g.
int distance(const Graph& g, int a, int b) {
    Mask seen = bit(a), frontier = bit(a);
    for (int d = 0; frontier; ++d) {
        if ((frontier >> b) & 1u) return d;
        Mask next = 0;
        for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
        frontier = next & ~seen;
        seen |= next;
    }
    return -1;
}

bool is_k23_within(const Graph& g, Mask alive) {
    if (std::popcount(alive) != 5) return false;
    Mask twos = two_vertices_within(g, alive);
    if (std::popcount(twos) != 3) return false;
    Mask hubs = alive & ~twos;
    int p = std::countr_zero(hubs);
    int q = std::countr_zero(hubs & ~bit(p));
    return !g.adjacent(p, q) && (g.neighbors(p) & alive) == twos && (g.neighbors(q) & alive) == twos;
}

struct ReverseStep {
    char op;
    int u, v;
    std::vector<int> created;  // target ids of the vertices the step adds
};

class Peeler {
public:
    explicit Peeler(const Graph& g) : g_(g) {}

    bool peel(Mask alive, int root, int depth) {
        int count = std::popcount(alive);
        if (count == 5) {
            if (is_k23_within(g_, alive)) {
                base_ = alive;
                return true;
            }
            fail(RefutationReason::BaseCaseMismatch, depth, "reduced to 5 vertices that do not form K_{2,3}");
            return false;
        }
        if (count < 5) {
            fail(RefutationReason::BaseCaseMismatch, depth, "reduced below 5 vertices");
            return false;
        }
        Mask twos = two_vertices_within(g_, alive);
        int x = std::countr_zero(twos & ~bit(root));
        int y = std::countr_zero(twos & ~bit(root) & ~bit(x));
        Mask nx = g_.neighbors(x) & alive, ny = g_.neighbors(y) & alive;
        bool tried = false;

        // reverse-C: y is a copy of its twin x
        if (nx == ny) {
            Mask h = alive & ~bit(y);
            int other = -1;
            if (state_ok(h, root, x, other) && g_.adjacent(x, other)) {
                tried = true;
                stack_.push_back({'C', x, -1, {y}});
                if (peel(h, root, depth + 1)) return true;
                stack_.pop_back();
            }
        }
        // reverse-P: x y is the middle edge of an attached path u x y v
        if (g_.adjacent(x, y)) {
            int u = other_neighbor(g_, alive, x, y);
            int v = other_neighbor(g_, alive, y, x);
            Mask h = alive & ~bit(x) & ~bit(y);
            int other = -1;
            if (u != v && !g_.adjacent(u, v) && state_ok(h, root, u, other) && other == v) {
                tried = true;
                stack_.push_back({'P', u, v, {x, y}});
                if (peel(h, root, depth + 1)) return true;
                stack_.pop_back();
            }
        }
        // reverse-F: x and y are b and d of an attached 4-cycle a b c d
        if (nx == ny) {
            int a = std::countr_zero(nx);
            int c = std::countr_zero(nx & ~bit(a));
            Mask h = alive & ~bit(a) & ~bit(c) & ~bit(x) & ~bit(y);
            bool shape = std::popcount(g_.neighbors(a) & alive) == 3 && std::popcount(g_.neighbors(c) & alive) == 3 &&
                         !g_.adjacent(a, c);
            if (shape) {
                int u = std::countr_zero(g_.neighbors(a) & h);
                int v = std::countr_zero(g_.neighbors(c) & h);
                int other = -1;
                if (u != v && g_.adjacent(u, v) && state_ok(h, root, u, other) && other == v) {
                    tried = true;
                    stack_.push_back({'F', u, v, {a, x, c, y}});
                    if (peel(h, root, depth + 1)) return true;
                    stack_.pop_back();
                }
            }
        }
        if (!tried)
            fail(RefutationReason::NoReverseOperation, depth,
                 "no reverse operation applies to 2-vertices " + std::to_string(x) + ", " + std::to_string(y));
        return false;
    }

    // Builds the forward trace from a successful peel rooted at r.
    BuildTrace trace(int root) const {
        Mask twos = two_vertices_within(g_, base_);
        Mask hubs = base_ & ~twos;
        std::vector<int> lab;
        for_each_bit(hubs, [&](int v) { lab.push_back(v); });
        lab.push_back(root);
        for_each_bit(twos & ~bit(root), [&](int v) { lab.push_back(v); });

        std::vector<int> inv(static_cast<std::size_t>(g_.order()), -1);
        for (std::size_t i = 0; i < lab.size(); ++i) inv[lab[i]] = static_cast<int>(i);
        BuildTrace t;
        t.root = 2;
        for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
            t.steps.push_back({it->op, inv[it->u], it->v < 0 ? -1 : inv[it->v]});
            for (int w : it->created) {
                inv[w] = static_cast<int>(lab.size());
                lab.push_back(w);
            }
        }
        bool identity = true;
        for (std::size_t i = 0; i < lab.size(); ++i) identity = identity && lab[i] == static_cast<int>(i);
        if (!identity) t.labeling = lab;
        return t;
    }

    void reset() { stack_.clear(); }

    RefutationReason reason() const { return reason_; }
    const std::string& detail() const { return detail_; }

private:
    // h must have min degree >= 2 and exactly three 2-vertices: root, u and
    // one more, returned in `other`.
    bool state_ok(Mask h, int root, int u, int& other) const {
        bool min_ok = true;
        for_each_bit(h, [&](int v) { min_ok = min_ok && std::popcount(g_.neighbors(v) & h) >= 2; });
        if (!min_ok) return false;
        Mask twos = two_vertices_within(g_, h);
        if (std::popcount(twos) != 3 || !((twos >> root) & 1u) || !((twos >> u) & 1u)) return false;
        other = std::countr_zero(twos & ~bit(root) & ~bit(u));
        return true;
    }

    void fail(RefutationReason r, int depth, std::string detail) {
        if (depth <= fail_depth_) return;
        fail_depth_ = depth;
        reason_ = r;
        detail_ = std::move(detail);
    }

    const Graph& g_;
    std::vector<ReverseStep> stack_;
    Mask base_ = 0;
    int fail_depth_ = -1;
    RefutationReason reason_ = RefutationReason::NoReverseOperation;
    std::string detail_;
};

Refutation refute(const Graph& g, RefutationReason reason, std::string detail, std::uint64_t budget) {
    Refutation r{reason, std::move(detail), std::nullopt};
    if (budget > 0 && g.order() >= 3) r.witness = find_cycle_mod(g, 3, 0, budget);
    return r;
}

}  // namespace

Graph apply_P(const Graph& h, int u, int v) {
    require_vertex(h, u);
    require_vertex(h, v);
    require(u != v, "P needs two distinct vertices");
    require(h.degree(u) == 2 && h.degree(v) == 2, "P needs two 2-vertices");
    require(!h.adjacent(u, v), "P needs non-adjacent vertices");
    require_room(h, 2);
    Graph g = h;
    int w1 = g.add_vertex(bit(u));
    g.add_vertex(bit(w1) | bit(v));
    return g;
}

Graph apply_C(const Graph& h, int u) {
    require_vertex(h, u);
    require(h.degree(u) == 2, "C needs a 2-vertex");
    bool partner = false;
    for_each_bit(h.neighbors(u), [&](int w) { partner = partner || h.degree(w) == 2; });
    require(partner, "C needs a 2-vertex adjacent to another 2-vertex");
    require_room(h, 1);
    Graph g = h;
    g.add_vertex(h.neighbors(u));
    return g;
}

Graph apply_F(const Graph& h, int u, int v) {
    require_vertex(h, u);
    require_vertex(h, v);
    require(u != v, "F needs two distinct vertices");
    require(h.degree(u) == 2 && h.degree(v) == 2, "F needs two 2-vertices");
    require(h.adjacent(u, v), "F needs adjacent vertices");
    require_room(h, 4);
    Graph g = h;
    int a = g.add_vertex(bit(u));
    int b = g.add_vertex(bit(a));
    int c = g.add_vertex(bit(b) | bit(v));
    g.add_vertex(bit(c) | bit(a));
    return g;
}

Graph reference_k23() { return named::complete_bipartite(2, 3); }

Graph replay(const BuildTrace& trace) {
    require(trace.root >= 2 && trace.root <= 4, "root must be a 2-vertex of K_{2,3} (2, 3 or 4)");
    Graph g = reference_k23();
    for (const BuildStep& s : trace.steps) {
        Mask others = two_vertex_set(g).mask() & ~bit(trace.root);
        require(((two_vertex_set(g).mask() >> trace.root) & 1u) && std::popcount(others) == 2,
                "root is no longer one of exactly three 2-vertices");
        int x = std::countr_zero(others);
        int y = std::countr_zero(others & ~bit(x));
        bool adjacent = g.adjacent(x, y);
        switch (s.op) {
            case 'P':
                require(!adjacent, "P applied while the 2-vertices are adjacent");
                require((s.u == x && s.v == y) || (s.u == y && s.v == x), "P must join the non-root 2-vertices");
                g = apply_P(g, s.u, s.v);
                break;
            case 'C':
                require(adjacent, "C applied while the 2-vertices are not adjacent");
                require(s.u == x || s.u == y, "C must copy a non-root 2-vertex");
                g = apply_C(g, s.u);
                break;
            case 'F':
                require(adjacent, "F applied while the 2-vertices are not adjacent");
                require((s.u == x && s.v == y) || (s.u == y && s.v == x), "F must join the non-root 2-vertices");
                g = apply_F(g, s.u, s.v);
                break;
            default:
                throw UsageError(std::string("unknown operation '") + s.op + "'");
        }
    }
    return g;
}

Graph replay_labeled(const BuildTrace& trace) {
    Graph g = replay(trace);
    if (!trace.labeling) return g;
    const auto& lab = *trace.labeling;
    require(static_cast<int>(lab.size()) == g.order(), "labeling length differs from the replayed order");
    std::vector<bool> used(lab.size(), false);
    for (int t : lab) {
        require(t >= 0 && t < g.order() && !used[t], "labeling is not a permutation");
        used[t] = true;
    }
    return g.permuted(lab);
}

std::vector<ExceptionalGraph> generate_exceptional(int max_n) {
    if (max_n < 5 || max_n > kMaxVertices) throw UsageError("max_n must be in [5, 64]");
    struct State {
        Graph g;
        BuildTrace trace;
        int x, y;
    };
    std::vector<ExceptionalGraph> out;
    DedupStore seen;
    std::deque<State> queue;

    Graph k23 = reference_k23();
    CanonicalForm k23_key = canonical_form(k23);
    seen.insert(k23_key);
    out.push_back({k23_key, k23, BuildTrace{}});
    queue.push_back({k23, BuildTrace{}, 3, 4});

    while (!queue.empty()) {
        State s = std::move(queue.front());
        queue.pop_front();
        int n = s.g.order();
        auto offer = [&](Graph g, BuildStep step, int x, int y) {
            if (g.order() > max_n) return;
            CanonicalForm key = canonical_form(g);
            if (!seen.insert(key)) return;
            BuildTrace t = s.trace;
            t.steps.push_back(step);
            out.push_back({key, g, t});
            queue.push_back({std::move(g), std::move(t), x, y});
        };
        if (!s.g.adjacent(s.x, s.y)) {
            offer(apply_P(s.g, s.x, s.y), {'P', s.x, s.y}, n, n + 1);
        } else {
            offer(apply_C(s.g, s.x), {'C', s.x, -1}, s.x, n);
            offer(apply_C(s.g, s.y), {'C', s.y, -1}, s.y, n);
            offer(apply_F(s.g, s.x, s.y), {'F', s.x, s.y}, n + 1, n + 3);
            offer(apply_F(s.g, s.y, s.x), {'F', s.y, s.x}, n + 1, n + 3);
        }
    }
    std::sort(out.begin(), out.end(), [](const ExceptionalGraph& a, const ExceptionalGraph& b) {
        return std::tuple(a.graph.order(), a.key) < std::tuple(b.graph.order(), b.key);
    });
    return out;
}

std::string to_string(RefutationReason r) {
    switch (r) {
        case RefutationReason::MinDegree: return "min_degree";
        case RefutationReason::TwoVertexCount: return "two_vertex_count";
        case RefutationReason::NotTwoConnected: return "not_2_connected";
        case RefutationReason::NoRootCandidate: return "no_root_candidate";
        case RefutationReason::NoReverseOperation: return "no_reverse_operation";
        case RefutationReason::BaseCaseMismatch: return "base_case_mismatch";
    }
    return "unknown";
}

Recognition recognize_exceptional(const Graph& g, std::uint64_t budget, bool with_witness) {
    if (!with_witness) budget = 0;
    int n = g.order();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < 2)
            return refute(g, RefutationReason::MinDegree,
                          "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)), budget);
    Mask twos = two_vertex_set(g).mask();
    if (std::popcount(twos) != 3)
        return refute(g, RefutationReason::TwoVertexCount,
                      "graph has " + std::to_string(std::popcount(twos)) + " 2-vertices, need 3", budget);
    if (!is_2_connected(g)) return refute(g, RefutationReason::NotTwoConnected, "graph is not 2-connected", budget);

    Peeler peeler(g);
    if (n == 5) {
        if (is_k23_within(g, g.all())) {
            peeler.peel(g.all(), std::countr_zero(twos), 0);
            return peeler.trace(std::countr_zero(twos));
        }
        return refute(g, RefutationReason::BaseCaseMismatch, "5 vertices but not K_{2,3}", budget);
    }
    std::vector<int> roots;
    for_each_bit(twos, [&](int r) {
        bool far = true;
        for_each_bit(twos & ~bit(r), [&](int o) { far = far && distance(g, r, o) >= 3; });
        if (far) roots.push_back(r);
    });
    if (roots.empty())
        return refute(g, RefutationReason::NoRootCandidate, "no 2-vertex is at distance >= 3 from the other two",
                      budget);
    for (int r : roots) {
        peeler.reset();
        if (peeler.peel(g.all(), r, 0)) return peeler.trace(r);
    }
    return refute(g, peeler.reason(), peeler.detail(), budget);
}

LemmaResidueReport check_lemma_residues(const Graph& g, const BuildTrace& trace, std::uint64_t budget) {
    LemmaResidueReport rep;
    int root = trace.root;
    if (trace.labeling) {
        if (root < 0 || root >= static_cast<int>(trace.labeling->size())) throw UsageError("root outside labeling");
        root = (*trace.labeling)[root];
    }
    Mask twos = two_vertex_set(g).mask();
    if (root < 0 || root >= g.order() || !((twos >> root) & 1u) || std::popcount(twos) != 3)
        throw PreconditionError("graph must have exactly three 2-vertices including the root");
    rep.root = root;
    rep.x = std::countr_zero(twos & ~bit(root));
    rep.y = std::countr_zero(twos & ~bit(root) & ~bit(rep.x));
    rep.twins = g.neighbors(rep.x) == g.neighbors(rep.y);
    rep.adjacent = g.adjacent(rep.x, rep.y);

    auto witnesses = [&](const Graph& h, int a, int b) {
        std::vector<std::vector<int>> out;
        for (auto& p : path_residue_witnesses(h, a, b, 3, budget))
            if (!p.empty()) out.push_back(p);
        return out;
    };
    auto to_text = [](const ResidueSet& s) {
        std::string t = "{";
        for (int r : s.to_vector()) t += (t.size() > 1 ? "," : "") + std::to_string(r);
        return t + "}";
    };

    rep.xy = path_residues(g, rep.x, rep.y, 3, budget);
    if (rep.twins) {
        if (rep.xy != ResidueSet(3, {1, 2}))
            rep.violations.push_back({"twins", "L(x,y) mod 3 is " + to_text(rep.xy) + ", expected {1,2}",
                                      witnesses(g, rep.x, rep.y)});
    } else if (rep.adjacent) {
        if (rep.xy != ResidueSet(3, {0, 1}))
            rep.violations.push_back({"adjacent", "L(x,y) mod 3 is " + to_text(rep.xy) + ", expected {0,1}",
                                      witnesses(g, rep.x, rep.y)});
    } else {
        rep.violations.push_back({"shape", "x and y are neither 2-twins nor adjacent", {}});
    }

    if (!is_isomorphic(g, reference_k23())) {
        auto side = [&](int keep, int drop, std::optional<ResidueSet>& slot, const char* clause) {
            auto sub = delete_vertices(g, VertexSet(bit(drop)));
            int r = sub.old_to_new[root], k = sub.old_to_new[keep];
            slot = path_residues(sub.graph, r, k, 3, budget);
            if (!ResidueSet(3, {0, 2}).subset_of(*slot)) {
                auto paths = witnesses(sub.graph, r, k);
                for (auto& p : paths)
                    for (int& v : p) v = sub.new_to_old[v];
                rep.violations.push_back({clause, "residues " + to_text(*slot) + " miss part of {0,2}", paths});
            }
        };
        side(rep.x, rep.y, rep.root_x_without_y, "moreover_x");
        side(rep.y, rep.x, rep.root_y_without_x, "moreover_y");
    }
    return rep;
}

bool SpecialCatalog::contains(const CanonicalForm& key) const {
    return std::any_of(entries.begin(), entries.end(), [&](const CatalogEntry& e) { return e.key == key; });
}

namespace {

bool has_partial_two_vertex_pair(const Graph& g, std::uint64_t budget) {
    auto twos = two_vertex_set(g).to_vector();
    for (std::size_t i = 0; i < twos.size(); ++i)
        for (std::size_t j = i + 1; j < twos.size(); ++j)
            if (!path_residues(g, twos[i], twos[j], 4, budget).full()) return true;
    return false;
}

}  // namespace

SpecialCatalog derive_special_catalog(std::uint64_t budget) {
    SpecialCatalog cat;
    std::vector<std::pair<CanonicalForm, Graph>> found;
    for (int n = 1; n <= cat.provenance.max_n; ++n) {
        ClassConstraints c{n, cat.provenance.min_degree, cat.provenance.max_two_vertices, cat.provenance.connected,
                           std::nullopt};
        enumerate_class(c, [&](const Graph& g, const CanonicalForm& key) {
            ++cat.provenance.graphs_examined;
            if (!find_cycle_mod(g, 4, 0, budget)) found.emplace_back(key, g);
        });
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        return std::tuple(a.second.order(), a.second.size(), a.first) <
               std::tuple(b.second.order(), b.second.size(), b.first);
    });
    auto dump = [&] {
        std::string s;
        for (auto& [key, g] : found) s += "\n  " + to_graph6(g);
        return s;
    };
    if (found.size() != 5)
        throw DerivationError("expected 5 special graphs, derived " + std::to_string(found.size()) + ":" + dump());
    std::vector<std::size_t> partial;
    for (std::size_t i = 0; i < found.size(); ++i)
        if (has_partial_two_vertex_pair(found[i].second, budget)) partial.push_back(i);
    if (partial.size() != 1 || partial[0] != 0)
        throw DerivationError("T1 is not uniquely determined by its 2-vertex path residues:" + dump());
    for (std::size_t i = 0; i < found.size(); ++i)
        cat.entries.push_back({"T" + std::to_string(i + 1), found[i].first, found[i].second});
    return cat;
}

ObservationReport check_observation_special(const SpecialCatalog& cat, std::uint64_t budget) {
    ObservationReport rep;
    for (const CatalogEntry& e : cat.entries) {
        const Graph& g = e.graph;
        Mask twos = two_vertex_set(g).mask();
        bool t1 = e.label == "T1";
        bool t45 = e.label == "T4" || e.label == "T5";
        for (int v = 0; v < g.order(); ++v) {
            if (g.degree(v) != 3) continue;
            ++rep.checks;
            if (!find_cycle_mod_through(g, v, 4, 1, budget))
                rep.violations.push_back({e.label, "i", v, -1, "no (1 mod 4)-cycle through this 3-vertex"});
        }
        for_each_bit(twos, [&](int u) {
            for (int v = 0; v < g.order(); ++v) {
                if (v == u) continue;
                ResidueSet l = path_residues(g, u, v, 4, budget);
                ++rep.checks;
                if (!g.adjacent(u, v) && !l.contains(0))
                    rep.violations.push_back({e.label, "ii", u, v, "not adjacent and no (0 mod 4)-path"});
                bool v_two = (twos >> v) & 1u;
                if (!t1 && v_two) {
                    ++rep.checks;
                    if (!l.full()) rep.violations.push_back({e.label, "iii", u, v, "path residues mod 4 not complete"});
                }
                if (t45 && !v_two) {
                    ++rep.checks;
                    if (!l.contains(2)) rep.violations.push_back({e.label, "iv", u, v, "no (2 mod 4)-path"});
                }
            }
        });
    }
    return rep;
}

}  // namespace modcycle
