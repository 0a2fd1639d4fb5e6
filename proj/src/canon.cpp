#include "modcycle/canon.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace modcycle {

namespace {

constexpr int kNoJump = INT_MAX;
constexpr std::size_t kMaxStoredGenerators = 256;

int lcp(const std::array<int, kMaxVertices>& a, const std::array<int, kMaxVertices>& b, int len) {
    int i = 0;
    while (i < len && a[i] == b[i]) ++i;
    return i;
}

}  // namespace

std::string CanonicalForm::hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes_.size() * 2);
    for (unsigned char c : bytes_) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

CanonicalForm CanonicalForm::from_hex(const std::string& hex) {
    auto nibble = [&](std::size_t i) {
        char c = hex[i];
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        throw FormatError(i, "not a lowercase hex digit");
    };
    if (hex.size() % 2 != 0) throw FormatError(hex.size(), "odd-length hex key");
    std::string bytes;
    for (std::size_t i = 0; i < hex.size(); i += 2) bytes.push_back(static_cast<char>(nibble(i) * 16 + nibble(i + 1)));
    CanonicalForm f(bytes);
    int n = f.order();
    std::size_t expected = 1 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 7) / 8;
    if (n > kMaxVertices || bytes.size() != expected) throw FormatError(0, "key length does not match its order byte");
    return f;
}

Graph CanonicalForm::graph() const {
    int n = order();
    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((static_cast<unsigned char>(bytes_[1 + k / 8]) >> (7 - k % 8)) & 1) g.add_edge(i, j);
    return g;
}

void Canonizer::refine(Partition& p, Mask first_splitter) const {
    std::array<Mask, 2 * kMaxVertices + 2> queue;
    int head = 0, tail = 0;
    queue[tail++] = first_splitter;
    std::array<int, kMaxVertices> count{};

    while (head < tail && p.count < n_) {
        Mask splitter = queue[head++];
        for (int i = 0; i < p.count; ++i) {
            Mask cell = p.cells[i];
            if ((cell & (cell - 1)) == 0) continue;
            int lo = INT_MAX, hi = -1;
            for_each_bit(cell, [&](int v) {
                int c = std::popcount(rows_[v] & splitter);
                count[v] = c;
                lo = std::min(lo, c);
                hi = std::max(hi, c);
            });
            if (lo == hi) continue;

            std::array<Mask, kMaxVertices> pieces;
            int k = 0;
            int next = lo;
            while (next <= hi) {
                Mask piece = 0;
                int after = INT_MAX;
                for_each_bit(cell, [&](int v) {
                    if (count[v] == next) piece |= bit(v);
                    else if (count[v] > next) after = std::min(after, count[v]);
                });
                pieces[k++] = piece;
                next = after;
            }
            for (int j = p.count - 1; j > i; --j) p.cells[j + k - 1] = p.cells[j];
            for (int j = 0; j < k; ++j) {
                p.cells[i + j] = pieces[j];
                queue[tail++] = pieces[j];
            }
            p.count += k - 1;
            i += k - 1;
        }
    }
}

void Canonizer::run(const Graph& g, int pinned) {
    g_ = &g;
    n_ = g.order();
    for (int v = 0; v < n_; ++v) rows_[v] = g.neighbors(v);
    have_leaf_ = false;
    generators_.clear();
    generator_fixed_.clear();
    orbits_built_from_ = SIZE_MAX;

    Partition root;
    root.count = n_ == 0 ? 0 : 1;
    root.cells[0] = g.all();
    if (pinned >= 0 && n_ > 1) {
        root.cells[0] = bit(pinned);
        root.cells[1] = g.all() & ~bit(pinned);
        root.count = 2;
        refine(root, bit(pinned));
    }
    if (n_ > 0) refine(root, g.all());
    search(root, 0);
    for (int i = 0; i < n_; ++i) best_pos_[best_lab_[i]] = static_cast<std::uint8_t>(i);
}

int Canonizer::search(Partition& p, int depth) {
    if (p.count == n_) return at_leaf(p, depth);

    int target = 0;
    while ((p.cells[target] & (p.cells[target] - 1)) == 0) ++target;
    const Mask cell = p.cells[target];

    Mask prefix = 0;
    for (int i = 0; i < depth; ++i) prefix |= bit(path_[i]);

    std::array<std::uint8_t, kMaxVertices> uf;
    std::size_t uf_gens = SIZE_MAX;
    Mask explored = 0;

    Mask todo = cell;
    while (todo) {
        int w = std::countr_zero(todo);
        todo &= todo - 1;

        if (explored && !generators_.empty()) {
            if (uf_gens != generators_.size()) {
                std::iota(uf.begin(), uf.begin() + n_, std::uint8_t{0});
                for (std::size_t gi = 0; gi < generators_.size(); ++gi) {
                    if (prefix & ~generator_fixed_[gi]) continue;
                    for (int v = 0; v < n_; ++v) {
                        int a = find(uf, v), b = find(uf, generators_[gi][v]);
                        if (a != b) uf[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
                    }
                }
                uf_gens = generators_.size();
            }
            int root = find(uf, w);
            bool pruned = false;
            for_each_bit(explored, [&](int u) { pruned = pruned || find(uf, u) == root; });
            if (pruned) continue;
        }

        Partition child = p;
        for (int j = child.count - 1; j > target; --j) child.cells[j + 1] = child.cells[j];
        child.cells[target] = bit(w);
        child.cells[target + 1] = cell & ~bit(w);
        ++child.count;
        refine(child, bit(w));

        path_[depth] = w;
        int jump = search(child, depth + 1);
        explored |= bit(w);
        if (jump < depth) return jump;
    }
    return kNoJump;
}

int Canonizer::at_leaf(const Partition& p, int depth) {
    std::array<std::uint8_t, kMaxVertices> pos;
    for (int i = 0; i < n_; ++i) {
        cur_lab_[i] = static_cast<std::uint8_t>(std::countr_zero(p.cells[i]));
        pos[cur_lab_[i]] = static_cast<std::uint8_t>(i);
    }
    std::array<Mask, kMaxVertices> code;
    for (int i = 0; i < n_; ++i) {
        Mask row = 0;
        for_each_bit(rows_[cur_lab_[i]], [&](int v) { row |= bit(pos[v]); });
        code[i] = row;
    }

    if (!have_leaf_) {
        have_leaf_ = true;
        first_lab_ = best_lab_ = cur_lab_;
        first_code_ = best_code_ = code;
        first_path_ = best_path_ = path_;
        first_depth_ = best_depth_ = depth;
        return kNoJump;
    }
    if (std::equal(code.begin(), code.begin() + n_, first_code_.begin())) {
        record_automorphism(cur_lab_, first_lab_);
        return lcp(path_, first_path_, std::min(depth, first_depth_));
    }
    int cmp = 0;
    for (int i = 0; i < n_ && cmp == 0; ++i)
        if (code[i] != best_code_[i]) cmp = code[i] < best_code_[i] ? -1 : 1;
    if (cmp < 0) {
        best_lab_ = cur_lab_;
        best_code_ = code;
        best_path_ = path_;
        best_depth_ = depth;
        return kNoJump;
    }
    if (cmp == 0) {
        record_automorphism(cur_lab_, best_lab_);
        return lcp(path_, best_path_, std::min(depth, best_depth_));
    }
    return kNoJump;
}

void Canonizer::record_automorphism(const Perm& from, const Perm& to) {
    if (generators_.size() >= kMaxStoredGenerators) return;
    Perm gamma{};
    Mask fixed = 0;
    for (int i = 0; i < n_; ++i) {
        gamma[from[i]] = to[i];
        if (from[i] == to[i]) fixed |= bit(from[i]);
    }
    generators_.push_back(gamma);
    generator_fixed_.push_back(fixed);
}

int Canonizer::find(std::array<std::uint8_t, kMaxVertices>& uf, int v) const {
    while (uf[v] != v) {
        uf[v] = uf[uf[v]];
        v = uf[v];
    }
    return v;
}

bool Canonizer::same_orbit(int u, int v) {
    if (u == v) return true;
    if (generators_.empty()) return false;
    if (orbits_built_from_ != generators_.size()) {
        std::iota(orbits_.begin(), orbits_.begin() + n_, std::uint8_t{0});
        for (const auto& gamma : generators_)
            for (int x = 0; x < n_; ++x) {
                int a = find(orbits_, x), b = find(orbits_, gamma[x]);
                if (a != b) orbits_[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
            }
        orbits_built_from_ = generators_.size();
    }
    return find(orbits_, u) == find(orbits_, v);
}

Graph Canonizer::canonical_graph() const {
    Graph h(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if ((rows_[best_lab_[i]] >> best_lab_[j]) & 1u) h.add_edge(i, j);
    return h;
}

CanonicalForm Canonizer::form() const {
    std::string bytes(1 + (static_cast<std::size_t>(n_) * (n_ - 1) / 2 + 7) / 8, '\0');
    bytes[0] = static_cast<char>(n_);
    std::size_t k = 0;
    for (int j = 1; j < n_; ++j) {
        Mask row = rows_[best_lab_[j]];
        for (int i = 0; i < j; ++i, ++k)
            if ((row >> best_lab_[i]) & 1u) bytes[1 + k / 8] = static_cast<char>(bytes[1 + k / 8] | (0x80 >> (k % 8)));
    }
    return CanonicalForm(std::move(bytes));
}

CanonicalForm canonical_form(const Graph& g) {
    Canonizer c;
    c.run(g);
    return c.form();
}

namespace {

struct IsoSearch {
    const Graph& g;
    const Graph& h;
    std::vector<int> order;
    std::vector<long> g_inv, h_inv;
    std::vector<int> map;
    Mask used = 0;

    bool extend(std::size_t i) {
        if (i == order.size()) return true;
        int gv = order[i];
        for (int hv = 0; hv < h.order(); ++hv) {
            if ((used >> hv) & 1u || h_inv[hv] != g_inv[gv]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                ok = g.adjacent(gv, order[j]) == h.adjacent(hv, map[order[j]]);
            if (!ok) continue;
            map[gv] = hv;
            used |= bit(hv);
            if (extend(i + 1)) return true;
            used &= ~bit(hv);
        }
        return false;
    }
};

// degree, then sorted neighbour degrees folded into one number
std::vector<long> vertex_invariants(const Graph& g) {
    std::vector<long> inv(g.order());
    for (int v = 0; v < g.order(); ++v) {
        std::vector<int> nd;
        for_each_bit(g.neighbors(v), [&](int u) { nd.push_back(g.degree(u)); });
        std::sort(nd.begin(), nd.end());
        long x = g.degree(v);
        for (int d : nd) x = x * 67 + d + 1;
        inv[v] = x;
    }
    return inv;
}

}  // namespace

bool equivalent_vertices(const Graph& g, int u, int v) {
    if (u == v) return true;
    if (g.degree(u) != g.degree(v)) return false;
    Canonizer a, b;
    a.run(g, u);
    b.run(g, v);
    return a.form() == b.form();
}

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    if (g.degree_sequence() != h.degree_sequence()) return false;
    IsoSearch s{g, h, {}, vertex_invariants(g), vertex_invariants(h), std::vector<int>(g.order(), -1)};
    {
        auto a = s.g_inv, b = s.h_inv;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    // Grow the order greedily by most already-ordered neighbours so that
    // adjacency constraints bite early.
    Mask placed = 0;
    for (int step = 0; step < g.order(); ++step) {
        int pick = -1, score = -1;
        for (int v = 0; v < g.order(); ++v) {
            if ((placed >> v) & 1u) continue;
            int sc = std::popcount(g.neighbors(v) & placed) * 128 + g.degree(v);
            if (sc > score) score = sc, pick = v;
        }
        placed |= bit(pick);
        s.order.push_back(pick);
    }
    return s.extend(0);
}

std::vector<CanonicalForm> DedupStore::sorted() const {
    std::vector<CanonicalForm> out(keys_.begin(), keys_.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace modcycle
