#pragma once

#include "lozenge/numbers.hpp"
#include "lozenge/region.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace lozenge {

// A finite edge-weighted graph with exact integer planar positions and a
// distinguished set of free vertices (those allowed to stay unmatched).
//
// M_f(G) = sum over matchings that cover every non-free vertex of the
// product of matched edge weights. With unit weights this counts matchings.
//
// Positions drive the planar embedding: rotation systems and face walks are
// computed from exact cross products, never floating point. Edges are
// assumed straight; face tracing is only meaningful when no two edges cross.
class FreeMatchGraph {
public:
    struct Pos {
        std::int64_t x = 0;
        std::int64_t y = 0;
        auto operator<=>(const Pos&) const = default;
    };

    // Returns the id of the new vertex; ids are dense and 0-based.
    int add_vertex(Pos p, bool free_vertex = false);

    // Undirected; throws on self-loops, duplicate edges, zero weight.
    void add_edge(int u, int v, Rat w = Rat(1));

    int vertex_count() const { return static_cast<int>(pos_.size()); }
    std::size_t edge_count() const { return edge_count_; }
    Pos pos(int v) const { return pos_.at(static_cast<std::size_t>(v)); }
    bool is_free(int v) const { return free_.at(static_cast<std::size_t>(v)); }
    std::vector<int> free_vertices() const;

    const std::vector<std::pair<int, Rat>>& neighbors(int v) const {
        return adj_.at(static_cast<std::size_t>(v));
    }
    bool has_edge(int u, int v) const { return weight(u, v) != nullptr; }
    // Null when the edge is absent.
    const Rat* weight(int u, int v) const;

    void set_free(int v, bool f) { free_.at(static_cast<std::size_t>(v)) = f; }
    void set_weight(int u, int v, const Rat& w);

    // Copy with the listed vertices deleted. Remaining vertices are
    // renumbered in increasing old-id order; old_of_new[new_id] = old_id
    // when requested.
    FreeMatchGraph without(const std::vector<int>& removed,
                           std::vector<int>* old_of_new = nullptr) const;

    bool connected() const;

    // rotation[v] = neighbor ids of v sorted counterclockwise starting from
    // the +x direction. Throws when two edges at a vertex point the same way
    // (overlapping straight edges).
    std::vector<std::vector<int>> rotation_system() const;

    // Faces of the straight-line embedding. Each face is the vertex sequence
    // of its boundary walk; faces[outer] is the unbounded one. Requires a
    // connected graph with at least one edge; validates Euler's relation
    // V - E + F = 2 and throws when it fails (crossing edges break it).
    struct Faces {
        std::vector<std::vector<int>> faces;
        std::size_t outer = 0;
    };
    Faces trace_faces() const;

    // Boundary walk of the unbounded face (cyclic, may repeat cut vertices).
    std::vector<int> outer_walk() const;

    // True when every free vertex lies on the outer walk.
    bool free_set_on_outer_face() const;

private:
    std::vector<Pos> pos_;
    std::vector<char> free_;
    std::vector<std::vector<std::pair<int, Rat>>> adj_;
    std::size_t edge_count_ = 0;
};

// Dual of a region: one vertex per cell at its centroid (scaled by 6 to stay
// integral), unit-weight edges between cells sharing a non-cut edge, free
// vertices = cells incident to a free edge.
struct RegionDual {
    FreeMatchGraph graph;
    std::vector<TriCell> cell_of; // cell_of[vertex id]
    std::unordered_map<TriCell, int, TriCellHash> vertex_map;
    int vertex_of(TriCell c) const; // -1 when absent
};

RegionDual dual_graph(const Region& r);

} // namespace lozenge
