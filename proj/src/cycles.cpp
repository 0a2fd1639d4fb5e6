#include "modcycle/cycles.hpp"

#include <string>

namespace modcycle {

namespace {

void check_modulus(int k) {
    if (k < 2 || k > kMaxModulus) throw UsageError("modulus must be in [2, 64], got " + std::to_string(k));
}

void check_residue(int k, int r) {
    check_modulus(k);
    if (r < 0 || r >= k) throw UsageError("residue must be in [0, k), got " + std::to_string(r));
}

void check_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw UsageError("vertex " + std::to_string(v) + " out of range");
}

// Rotate a residue mask: every member r becomes (r + by) mod k.
Mask rotate(Mask m, int by, int k) {
    by %= k;
    if (by == 0) return m;
    Mask full = low_bits(k);
    return ((m << by) | (m >> (k - by))) & full;
}

// Residue-reachability over-approximation: reach[u] holds every l mod k such
// that some walk of length l runs from u to `target` with all vertices other
// than `target` inside `allowed`. Walks may repeat vertices, so a missing
// residue proves no path can realise it.
std::array<Mask, kMaxVertices> walk_residues_to(const Graph& g, int target, Mask allowed, int k) {
    std::array<Mask, kMaxVertices> reach{};
    for_each_bit(g.neighbors(target) & allowed, [&](int u) { reach[u] = bit(1 % k); });
    bool changed = true;
    while (changed) {
        changed = false;
        for_each_bit(allowed, [&](int u) {
            Mask acc = reach[u];
            for_each_bit(g.neighbors(u) & allowed, [&](int w) { acc |= rotate(reach[w], 1, k); });
            if (acc != reach[u]) {
                reach[u] = acc;
                changed = true;
            }
        });
    }
    return reach;
}

class PathSearch {
public:
    PathSearch(const Graph& g, int k, std::uint64_t budget) : g_(g), k_(k), budget_(budget) {}

    // Cycles with minimum vertex `anchor` (or through `anchor` when
    // `anchor_is_min` is false), each counted in one orientation: the first
    // step is smaller than the last vertex. Collects residues in `wanted`
    // until all are found; stops at the first hit when `first_only`.
    bool cycles_at(int anchor, bool anchor_is_min, Mask wanted, bool first_only) {
        anchor_ = anchor;
        target_ = anchor;
        Mask allowed = g_.all() & ~bit(anchor);
        if (anchor_is_min) allowed &= ~low_bits(anchor + 1);
        allowed_ = allowed;
        reach_ = walk_residues_to(g_, anchor, allowed, k_);
        wanted_ = wanted & ~found_;
        first_only_ = first_only;
        path_.clear();
        path_.push_back(anchor);
        Mask firsts = g_.neighbors(anchor) & allowed;
        while (firsts) {
            int v1 = std::countr_zero(firsts);
            firsts &= firsts - 1;
            first_ = v1;
            if (cycle_dfs(v1, 1, bit(anchor) | bit(v1))) return true;
            if (wanted_ == 0) return true;
        }
        return false;
    }

    // Simple (x, y)-paths; records the first witness per residue.
    void paths(int x, int y, Mask wanted) {
        target_ = y;
        allowed_ = g_.all() & ~bit(x) & ~bit(y);
        reach_ = walk_residues_to(g_, y, allowed_, k_);
        wanted_ = wanted & ~found_;
        path_.assign(1, x);
        path_dfs(x, 0, bit(x) | bit(y));
    }

    Mask found() const { return found_; }
    const std::vector<int>& hit() const { return hit_; }
    const std::vector<std::vector<int>>& witnesses() const { return witnesses_; }

private:
    void tick() {
        if (++expanded_ > budget_) throw Indeterminate(budget_, "residue search");
    }

    bool cycle_dfs(int u, int len, Mask visited) {
        tick();
        path_.push_back(u);
        if (len >= 2 && u > first_ && g_.adjacent(u, anchor_)) {
            int res = (len + 1) % k_;
            if ((wanted_ >> res) & 1u) {
                found_ |= bit(res);
                wanted_ &= ~bit(res);
                if (first_only_) {
                    hit_ = path_;
                    return true;
                }
                if (wanted_ == 0) return true;
            }
        }
        if (rotate(reach_[u], len, k_) & wanted_) {
            Mask next = g_.neighbors(u) & allowed_ & ~visited;
            while (next) {
                int w = std::countr_zero(next);
                next &= next - 1;
                if (!(rotate(reach_[w], len + 1, k_) & wanted_)) continue;
                if (cycle_dfs(w, len + 1, visited | bit(w))) return true;
            }
        }
        path_.pop_back();
        return false;
    }

    void path_dfs(int u, int len, Mask visited) {
        tick();
        path_.push_back(0);
        if (g_.adjacent(u, target_)) {
            int res = (len + 1) % k_;
            if ((wanted_ >> res) & 1u) {
                found_ |= bit(res);
                wanted_ &= ~bit(res);
                path_.back() = target_;
                if (witnesses_.empty()) witnesses_.resize(k_);
                witnesses_[res] = path_;
            }
        }
        path_.pop_back();
        if (wanted_ == 0) return;
        Mask next = g_.neighbors(u) & allowed_ & ~visited;
        while (next && wanted_) {
            int w = std::countr_zero(next);
            next &= next - 1;
            if (!(rotate(reach_[w], len + 1, k_) & wanted_)) continue;
            path_.push_back(w);
            path_dfs(w, len + 1, visited | bit(w));
            path_.pop_back();
        }
    }

    const Graph& g_;
    int k_;
    std::uint64_t budget_;
    std::uint64_t expanded_ = 0;

    int anchor_ = 0, target_ = 0, first_ = 0;
    Mask allowed_ = 0, wanted_ = 0, found_ = 0;
    bool first_only_ = false;
    std::array<Mask, kMaxVertices> reach_{};
    std::vector<int> path_, hit_;
    std::vector<std::vector<int>> witnesses_;
};

}  // namespace

ResidueSet::ResidueSet(int modulus, Mask members) : k_(modulus), members_(members) {
    check_modulus(modulus);
    if (members & ~low_bits(modulus)) throw UsageError("residue outside [0, k)");
}

ResidueSet::ResidueSet(int modulus, std::initializer_list<int> members) : ResidueSet(modulus) {
    for (int r : members) {
        check_residue(modulus, r);
        insert(r);
    }
}

std::vector<int> ResidueSet::to_vector() const {
    std::vector<int> out;
    for_each_bit(members_, [&](int r) { out.push_back(r); });
    return out;
}

bool validate_certificate(const Graph& g, const CycleCertificate& cert) {
    int m = cert.length();
    if (m < 3 || cert.k < 1 || cert.r < 0 || cert.r >= cert.k) return false;
    if (m % cert.k != cert.r) return false;
    Mask seen = 0;
    for (int i = 0; i < m; ++i) {
        int v = cert.vertices[i];
        if (v < 0 || v >= g.order() || ((seen >> v) & 1u)) return false;
        seen |= bit(v);
        if (!g.adjacent(v, cert.vertices[(i + 1) % m])) return false;
    }
    return true;
}

std::optional<CycleCertificate> find_cycle_mod(const Graph& g, int k, int r, std::uint64_t budget) {
    check_residue(k, r);
    PathSearch search(g, k, budget);
    for (int a = 0; a + 2 < g.order(); ++a)
        if (search.cycles_at(a, true, bit(r), true)) return CycleCertificate{k, r, search.hit()};
    return std::nullopt;
}

std::optional<CycleCertificate> find_cycle_mod_through(const Graph& g, int v, int k, int r,
                                                       std::uint64_t budget) {
    check_residue(k, r);
    check_vertex(g, v);
    PathSearch search(g, k, budget);
    if (search.cycles_at(v, false, bit(r), true)) return CycleCertificate{k, r, search.hit()};
    return std::nullopt;
}

ResidueSet cycle_length_residues(const Graph& g, int k, std::uint64_t budget) {
    check_modulus(k);
    PathSearch search(g, k, budget);
    for (int a = 0; a + 2 < g.order(); ++a) {
        search.cycles_at(a, true, low_bits(k), false);
        if (search.found() == low_bits(k)) break;
    }
    return ResidueSet(k, search.found());
}

std::vector<std::vector<int>> path_residue_witnesses(const Graph& g, int x, int y, int k, std::uint64_t budget) {
    check_modulus(k);
    check_vertex(g, x);
    check_vertex(g, y);
    if (x == y) throw UsageError("path endpoints must differ");
    PathSearch search(g, k, budget);
    search.paths(x, y, low_bits(k));
    auto w = search.witnesses();
    w.resize(k);
    return w;
}

ResidueSet path_residues(const Graph& g, int x, int y, int k, std::uint64_t budget) {
    auto w = path_residue_witnesses(g, x, y, k, budget);
    ResidueSet out(k);
    for (int r = 0; r < k; ++r)
        if (!w[r].empty()) out.insert(r);
    return out;
}

}  // namespace modcycle
