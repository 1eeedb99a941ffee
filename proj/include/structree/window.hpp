#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "structree/bitset.hpp"
#include "structree/group.hpp"

namespace structree {

// Finite ball of a locally finite graph. Vertices are canonical id strings in
// lexicographic order; a vertex is interior iff its depth is below the radius,
// in which case all of its neighbors in the ambient graph are present.
struct GraphWindow {
    std::vector<std::string> ids;
    std::unordered_map<std::string, int> index_of;
    std::vector<std::vector<int>> adj;
    std::vector<std::pair<int, int>> edges; // u < v, sorted
    std::vector<int> depth;
    std::vector<bool> frontier;
    int radius = 0;
    int origin = -1;

    // Present for Cayley windows: the group element of each vertex.
    OraclePtr oracle;
    std::vector<NormalForm> element;
    std::vector<Letter> generators;

    int num_vertices() const { return static_cast<int>(ids.size()); }
    int vertex(const std::string& id) const;
    bool has_edge(int u, int v) const;
    bool is_interior(int v) const { return !frontier[v]; }
    Bitset full_set() const;
};

using NeighborFn = std::function<std::vector<std::string>(const std::string&)>;

// Ball of radius R around origin_id in the (possibly infinite) graph described
// by the neighbor function.
GraphWindow build_window(const std::string& origin_id, int radius, const NeighborFn& neighbors);

GraphWindow build_cayley_window(const OraclePtr& oracle, const std::vector<Letter>& generators,
                                int radius);

// Ball inside an explicitly given finite graph.
GraphWindow build_custom_window(const std::vector<std::string>& ids,
                                const std::vector<std::pair<std::string, std::string>>& edge_list,
                                const std::string& origin_id, int radius);

struct Component {
    Bitset vertices;
    bool reaches_frontier = false;
};

// Connected components of the window minus `removed`, sorted by smallest member.
std::vector<Component> components(const GraphWindow& window, const Bitset& removed);

struct Neighborhood {
    Bitset vertices;
    bool reliable = true; // false when the result may be truncated by the frontier
};

Neighborhood neighborhood(const GraphWindow& window, const Bitset& seed, int k);

// BFS distances from the seed set; -1 for unreachable vertices.
std::vector<int> bfs_distances(const GraphWindow& window, const std::vector<int>& sources);

// Longest window-geodesic passing through v0, maximal under extension at both
// endpoints. Deterministic tie-breaking by vertex id.
std::vector<int> longest_geodesic_through(const GraphWindow& window, int v0);

// Two vertex-disjoint simple paths from a common basepoint to the frontier;
// the finite stand-in for a bi-infinite simple path.
struct RayPair {
    int base = -1;
    std::vector<int> left;  // base ... frontier
    std::vector<int> right; // base ... frontier
};

// Checks the RayPair invariants; throws input errors on violation.
void validate_ray(const GraphWindow& window, const RayPair& ray);

// Last tail_depth vertices of each side (frontier end).
std::vector<int> ray_tail(const RayPair& ray, bool left_side, int tail_depth);

// Splits a geodesic path at a chosen interior basepoint into a RayPair;
// returns false when either side misses the frontier.
bool ray_from_path(const GraphWindow& window, const std::vector<int>& path, int base,
                   RayPair& out);

// Geodesic rays through every interior vertex (deduplicated, canonical order).
std::vector<RayPair> auto_rays(const GraphWindow& window);

} // namespace structree
