#ifndef MODCYCLE_CONNECTIVITY_HPP
#define MODCYCLE_CONNECTIVITY_HPP

#include <vector>

#include "modcycle/graph.hpp"

namespace modcycle {

inline constexpr int kPlanarityOrderLimit = 16;

/// Blocks are maximal 2-connected subgraphs, bridges, or an isolated vertex.
struct BlockDecomposition {
    std::vector<VertexSet> blocks;
    VertexSet cut_vertices;
    std::vector<bool> end_block;  // block holds at most one cut vertex
};

bool is_2_connected(const Graph& g);

/// Throws PreconditionError for a disconnected graph.
BlockDecomposition block_decomposition(const Graph& g);

struct DisjointPaths {
    int count = 0;
    std::vector<std::vector<int>> paths;  // each runs from X to Y
};

/// Maximum family of pairwise vertex-disjoint (X, Y)-paths, by unit vertex
/// capacity max flow with lowest-id BFS augmentation. A vertex of X and Y is
/// a path on its own. `count` equals the minimum (X, Y)-separator size.
DisjointPaths max_disjoint_paths(const Graph& g, VertexSet x, VertexSet y);

/// No vertex cut of size <= 2 leaves two components that each carry an edge.
/// Decided from the definition by trying every such cut.
bool is_essentially_3_connected(const Graph& g);

/// Planarity for n <= 16: edge-count screen, then path embedding
/// (Demoucron-Malgrange-Pertuiset) on every block.
bool is_planar(const Graph& g);

}  // namespace modcycle

#endif
