#ifndef MODCYCLE_FAMILIES_HPP
#define MODCYCLE_FAMILIES_HPP

// The exceptional family (no cycle of length 0 mod 3) and the special
// catalog (no cycle of length 0 mod 4).

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "modcycle/canon.hpp"
#include "modcycle/cycles.hpp"
#include "modcycle/enumerate.hpp"
#include "modcycle/graph.hpp"

namespace modcycle {

/// P(h; u, v): a path u w1 w2 v of length 3; w1 = n, w2 = n + 1.
Graph apply_P(const Graph& h, int u, int v);

/// C(h; u): a new vertex w = n with N(w) = N(u). u must be a 2-vertex with
/// a 2-vertex neighbour.
Graph apply_C(const Graph& h, int u);

/// F(h; u, v): a 4-cycle a b c d with edges u a and c v; a..d = n..n+3.
Graph apply_F(const Graph& h, int u, int v);

struct BuildStep {
    char op = 'P';  // 'P', 'C' or 'F'
    int u = 0;
    int v = -1;  // unused for 'C'

    friend bool operator==(const BuildStep&, const BuildStep&) = default;
};

/// Construction history from the reference K_{2,3} (vertices 0 and 1 of
/// degree 3, vertices 2, 3, 4 of degree 2). Step ids and `root` refer to the
/// replayed graph, whose new vertices are numbered in order of creation.
/// `labeling`, when present, maps replayed vertex i to vertex labeling[i] of
/// the graph the trace describes.
struct BuildTrace {
    int root = 2;
    std::vector<BuildStep> steps;
    std::optional<std::vector<int>> labeling;

    friend bool operator==(const BuildTrace&, const BuildTrace&) = default;
};

Graph reference_k23();

/// Replays the trace from reference_k23(). Throws UsageError if a step
/// violates its operation's precondition or does not act on the two
/// non-root 2-vertices in the state the definition prescribes.
Graph replay(const BuildTrace& trace);

/// Replays and applies `labeling`: the result is the described graph itself.
Graph replay_labeled(const BuildTrace& trace);

struct ExceptionalGraph {
    CanonicalForm key;
    Graph graph;  // equal to replay(trace)
    BuildTrace trace;
};

/// Every exceptional graph with at most max_n vertices, one per
/// isomorphism class, sorted by (order, key).
std::vector<ExceptionalGraph> generate_exceptional(int max_n);

enum class RefutationReason {
    MinDegree,
    TwoVertexCount,
    NotTwoConnected,
    NoRootCandidate,
    NoReverseOperation,
    BaseCaseMismatch,
};

std::string to_string(RefutationReason r);

struct Refutation {
    RefutationReason reason;
    std::string detail;
    std::optional<CycleCertificate> witness;  // a cycle of length 0 mod 3
};

using Recognition = std::variant<BuildTrace, Refutation>;

/// Peels reverse operations (C, then P, then F, each by ascending vertex
/// id) back to K_{2,3}, backtracking on failure. An accepted trace replays
/// to g through its labeling. With `with_witness`, a refutation carries a
/// (0 mod 3)-cycle when g has one; that search may throw Indeterminate.
Recognition recognize_exceptional(const Graph& g, std::uint64_t budget = kDefaultNodeBudget,
                                  bool with_witness = true);

struct ResidueViolation {
    std::string clause;
    std::string detail;
    std::vector<std::vector<int>> paths;  // one witness path per residue seen
};

struct LemmaResidueReport {
    int root = -1, x = -1, y = -1;
    bool twins = false;
    bool adjacent = false;
    ResidueSet xy;
    std::optional<ResidueSet> root_x_without_y;
    std::optional<ResidueSet> root_y_without_x;
    std::vector<ResidueViolation> violations;

    bool ok() const { return violations.empty(); }
};

/// Path residues mod 3 between the non-root 2-vertices, and from the root
/// to each of them with the other deleted.
LemmaResidueReport check_lemma_residues(const Graph& g, const BuildTrace& trace,
                                        std::uint64_t budget = kDefaultNodeBudget);

struct CatalogEntry {
    std::string label;  // "T1" .. "T5"
    CanonicalForm key;
    Graph graph;  // canonical representative
};

struct CatalogProvenance {
    int max_n = 8;
    int min_degree = 2;
    int max_two_vertices = 3;
    bool connected = true;
    std::uint64_t graphs_examined = 0;
};

struct SpecialCatalog {
    std::vector<CatalogEntry> entries;
    CatalogProvenance provenance;

    bool contains(const CanonicalForm& key) const;
};

/// Raised when the derived catalog does not have the expected shape.
class DerivationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Connected graphs with min degree >= 2, at most three 2-vertices and at
/// most 8 vertices that have no (0 mod 4)-cycle. Labels follow ascending
/// (order, edges, key); T1 must also be the only entry with a pair of
/// 2-vertices whose path residues mod 4 are not all of {0, 1, 2, 3}.
/// Throws DerivationError, listing the graphs found, otherwise.
SpecialCatalog derive_special_catalog(std::uint64_t budget = kDefaultNodeBudget);

struct ObservationViolation {
    std::string label;
    std::string clause;  // "i" .. "iv"
    int u = -1, v = -1;
    std::string detail;
};

struct ObservationReport {
    int checks = 0;
    std::vector<ObservationViolation> violations;

    bool ok() const { return violations.empty(); }
};

/// Clauses (i)-(iv) of the special-graph properties on every entry:
/// (i) each 3-vertex lies on a (1 mod 4)-cycle; (ii) for u in V2 and any
/// v != u, uv is an edge or some (u, v)-path has length 0 mod 4; (iii) for
/// entries other than T1, two 2-vertices see every residue mod 4; (iv) on
/// T4 and T5, a 2-vertex and a non-2-vertex are joined by a (2 mod 4)-path.
ObservationReport check_observation_special(const SpecialCatalog& cat,
                                            std::uint64_t budget = kDefaultNodeBudget);

}  // namespace modcycle

#endif
