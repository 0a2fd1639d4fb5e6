#ifndef MODCYCLE_ENUMERATE_HPP
#define MODCYCLE_ENUMERATE_HPP

// Isomorph-free generation of small graphs under degree constraints.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "modcycle/canon.hpp"
#include "modcycle/graph.hpp"

namespace modcycle {

inline constexpr int kEnumerationOrderLimit = 12;

struct ClassConstraints {
    int n = 1;
    int min_degree = 0;
    int max_two_vertices = -1;  // negative: unbounded
    bool connected = false;
    std::optional<int> min_degree_global;  // whole-graph scans: delta >= k

    int effective_min_degree() const;
    bool admits(const Graph& g) const;
};

/// Called once per isomorphism class with the canonical representative.
using GraphSink = std::function<void(const Graph& g, const CanonicalForm& key)>;

/// Every graph of order c.n satisfying c, once per isomorphism class.
///
/// Canonical augmentation: a child P + v is kept only when v lies in the
/// orbit of the canonically last minimum-degree vertex, so each class has a
/// single parent. The stream order is deterministic.
void enumerate_class(const ClassConstraints& c, const GraphSink& sink);

/// The subtree slice owned by worker `part` of `parts`. Slices are disjoint
/// and their union is the full stream.
void enumerate_partition(const ClassConstraints& c, int part, int parts, const GraphSink& sink);

std::uint64_t count_class(const ClassConstraints& c);

/// Reference oracle: filter all 2^(n(n-1)/2) labeled graphs, dedup by key.
/// Only for n <= 7. Returns sorted keys.
std::vector<CanonicalForm> naive_enumerate_class(const ClassConstraints& c);

}  // namespace modcycle

#endif
