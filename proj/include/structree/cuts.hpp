#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "structree/window.hpp"

namespace structree {

// One side of a finite-weight bipartition of the window. Both the side and its
// complement are non-empty and connected.
struct Cut {
    Bitset side;
    std::vector<std::pair<int, int>> boundary_edges; // sorted, u < v
    std::vector<int> boundary_vertices;              // endpoints of boundary edges
    int weight = 0;
    bool side_reaches_frontier = false;
    bool complement_reaches_frontier = false;
    bool certified = false; // boundary clear of the frontier margin
};

// Builds a cut from an explicit side; throws when either side is empty or
// disconnected (the message names the offending side).
Cut make_cut(const GraphWindow& window, const Bitset& side);

Cut cut_complement(const GraphWindow& window, const Cut& cut);

// Certification margin: every boundary vertex has depth <= R - k - 1.
bool cut_is_certified(const GraphWindow& window, const Cut& cut, int weight_bound);

bool is_nested(const Cut& a, const Cut& b);

// Corners in the fixed order side&side, side&co, co&side, co&co.
// Opposite pairs are (0,3) and (1,2).
std::array<Bitset, 4> corners(const Cut& a, const Cut& b);

// All cuts of weight <= weight_bound whose vertex boundary meets the seed,
// one per unordered pair, represented by the side containing the smallest
// vertex. weight_bound <= 0 yields the empty list.
std::vector<Cut> enumerate_k_cuts(const GraphWindow& window, const Bitset& seed,
                                  int weight_bound);

// All certified cuts of the window at the fixed weight bound, with the
// uncertified remainder kept for reporting and open-class detection.
struct CutUniverse {
    const GraphWindow* window = nullptr;
    int weight_bound = 0;
    std::vector<Cut> cuts;        // certified, canonical sides, sorted
    std::vector<Cut> uncertified; // reported, excluded from crossing counts
};

CutUniverse build_cut_universe(const GraphWindow& window, int weight_bound);

// Number of universe cuts not nested with the given cut, counting both
// orientations of each pair.
int crossing_count(const CutUniverse& universe, const Cut& cut);

// Does the cut separate the two ray tails? Returns the orientation whose side
// contains the left tail, or nothing.
std::optional<Cut> orient_splitting(const GraphWindow& window, const Cut& cut,
                                    const RayPair& ray, int tail_depth);

std::vector<Cut> cuts_splitting_ray(const CutUniverse& universe, const RayPair& ray,
                                    int tail_depth);

std::vector<Cut> min_weight_splitters(const CutUniverse& universe, const RayPair& ray,
                                      int tail_depth);

// Minimal-weight splitters of each ray filtered to minimal crossing count,
// deduplicated over rays. Every returned pair is verified pairwise nested;
// a violation raises an internal-consistency error naming the pair.
std::vector<Cut> optimal_cuts(const CutUniverse& universe, const std::vector<RayPair>& rays,
                              int tail_depth);

// Largest weight over the rays' minimal splitters, probing up to probe_bound;
// at least 1.
int choose_weight_bound(const GraphWindow& window, const std::vector<RayPair>& rays,
                        int tail_depth, int probe_bound);

std::string cut_to_string(const GraphWindow& window, const Cut& cut);

} // namespace structree
