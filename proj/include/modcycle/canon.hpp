#ifndef MODCYCLE_CANON_HPP
#define MODCYCLE_CANON_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "modcycle/graph.hpp"

namespace modcycle {

/// Isomorphism-invariant key: byte 0 is n, then the upper triangle of the
/// canonically relabeled adjacency matrix in graph6 bit order, 8 bits a byte.
class CanonicalForm {
public:
    CanonicalForm() = default;
    explicit CanonicalForm(std::string bytes) : bytes_(std::move(bytes)) {}

    const std::string& bytes() const { return bytes_; }
    int order() const { return bytes_.empty() ? 0 : static_cast<unsigned char>(bytes_[0]); }
    std::string hex() const;
    static CanonicalForm from_hex(const std::string& hex);

    /// The canonical representative graph this key encodes.
    Graph graph() const;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
        return a.bytes_ <=> b.bytes_;
    }

private:
    std::string bytes_;
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& f) const { return std::hash<std::string>{}(f.bytes()); }
};

/// Reusable canonical labeler. One instance per thread; not thread-safe.
///
/// Equitable partition refinement seeded by degree, then individualization
/// and backtracking over the first non-singleton cell. Leaves are compared by
/// the relabeled adjacency rows (row 0 first, each row read as an unsigned
/// word) and the minimum wins. Automorphisms discovered at equal leaves prune
/// sibling orbits and trigger back-jumps to the divergence node.
class Canonizer {
public:
    /// With `pinned` >= 0 the vertex is individualized first and lands at
    /// position 0, so two pinned forms agree exactly when an automorphism
    /// maps one pinned vertex to the other.
    void run(const Graph& g, int pinned = -1);

    /// position -> vertex of the canonical labeling from the last run().
    int vertex_at(int position) const { return best_lab_[position]; }
    /// vertex -> position.
    int position_of(int vertex) const { return best_pos_[vertex]; }

    Graph canonical_graph() const;
    CanonicalForm form() const;

    /// True if some discovered automorphism product maps u to v. Discovered
    /// generators may span only a subgroup, so false is not a proof; see
    /// equivalent_vertices() for an exact answer.
    bool same_orbit(int u, int v);

    /// No automorphism found means every leaf was visited, so the group is
    /// trivial; this answer is exact.
    bool has_automorphisms() const { return !generators_.empty(); }

private:
    using Perm = std::array<std::uint8_t, kMaxVertices>;
    struct Partition {
        std::array<Mask, kMaxVertices> cells;
        int count = 0;
    };

    void refine(Partition& p, Mask first_splitter) const;
    int search(Partition& p, int depth);
    int at_leaf(const Partition& p, int depth);
    void record_automorphism(const Perm& from, const Perm& to);
    int find(std::array<std::uint8_t, kMaxVertices>& uf, int v) const;

    const Graph* g_ = nullptr;
    int n_ = 0;
    std::array<Mask, kMaxVertices> rows_{};

    std::array<int, kMaxVertices> path_{};
    std::array<int, kMaxVertices> first_path_{}, best_path_{};
    int first_depth_ = 0, best_depth_ = 0;
    bool have_leaf_ = false;

    Perm first_lab_{}, best_lab_{}, cur_lab_{};
    std::array<std::uint8_t, kMaxVertices> best_pos_{};
    std::array<Mask, kMaxVertices> first_code_{}, best_code_{};

    std::vector<Perm> generators_;
    std::vector<Mask> generator_fixed_;
    std::array<std::uint8_t, kMaxVertices> orbits_{};
    std::size_t orbits_built_from_ = 0;
};

CanonicalForm canonical_form(const Graph& g);

/// Exact test that some automorphism of g maps u to v.
bool equivalent_vertices(const Graph& g, int u, int v);

/// Direct backtracking search for an adjacency-preserving bijection.
/// Deliberately independent of the canonical labeler.
bool is_isomorphic(const Graph& g, const Graph& h);

/// Insert-only set of canonical forms; merge is set union.
class DedupStore {
public:
    /// Returns true if `key` was not present before.
    bool insert(const CanonicalForm& key) { return keys_.insert(key).second; }
    bool contains(const CanonicalForm& key) const { return keys_.contains(key); }
    std::size_t size() const { return keys_.size(); }
    void merge(const DedupStore& other) { keys_.insert(other.keys_.begin(), other.keys_.end()); }
    std::vector<CanonicalForm> sorted() const;

private:
    std::unordered_set<CanonicalForm, CanonicalFormHash> keys_;
};

}  // namespace modcycle

#endif
