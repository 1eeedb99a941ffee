#pragma once

#include <string>
#include <vector>

#include "structree/cuts.hpp"

namespace structree {

// Complement-closed, pairwise nested family of cuts over one window.
// Oriented cuts are indexed so that 2*i is the canonical side (containing
// vertex 0) of pair i and 2*i + 1 is its complement.
struct TreeSet {
    const GraphWindow* window = nullptr;
    std::vector<Cut> cuts; // size 2 * pairs
    std::vector<Cut> excluded; // window cuts outside the family (non-optimal or uncertified)

    int pair_count() const { return static_cast<int>(cuts.size()) / 2; }
    int complement_of(int oriented) const { return oriented ^ 1; }
};

// Builds the family from canonical (vertex-0-side) cuts; verifies pairwise
// nestedness. Window cuts outside the family are carried along for open-class
// detection: a class is open when such a cut would join it.
TreeSet make_tree_set(const GraphWindow& window, const std::vector<Cut>& canonical,
                      std::vector<Cut> excluded = {});

// The standard pipeline: optimal cuts as the family, everything else in the
// universe as excluded cuts.
TreeSet optimal_tree_set(const CutUniverse& universe, const std::vector<RayPair>& rays,
                         int tail_depth);

// Interval query {E in family : lower <= E <= upper}.
std::vector<int> cuts_between(const TreeSet& ts, const Cut& lower, const Cut& upper);

// The tree-set relation: C ~ D iff C = D, or co-C is strictly contained in D
// with no family member strictly between.
bool related(const TreeSet& ts, int c, int d);

struct CutClass {
    std::vector<int> members;     // oriented indices, sorted
    bool open = false;            // a non-family window cut would join this class
    std::vector<Cut> extensions;  // non-family cuts that belong to the class
};

// Partition of the oriented cuts under ~. Verifies that ~ is transitive on the
// family and throws an internal-consistency error otherwise.
std::vector<CutClass> equivalence_classes(const TreeSet& ts);

struct StructureTree {
    const TreeSet* family = nullptr;
    std::vector<CutClass> classes;            // tree vertices
    std::vector<int> class_of;                // oriented cut -> class index
    std::vector<std::pair<int, int>> edges;   // per pair: (class of 2i, class of 2i+1)
    std::vector<std::vector<int>> adjacency;  // class -> incident pair indices
};

// Vertices are ~-classes, edges are complement pairs. Validated: no
// self-loops, no parallel edges (directed-edge bijection), connected, and
// |E| = |V| - 1; violations raise internal-consistency errors with witnesses.
StructureTree build_structure_tree(const TreeSet& ts);

struct BlockRadius {
    int value = 0;
    bool reliable = true; // false when a neighborhood touched the frontier
};

// Least radius r >= 1 such that N^r(C) meets the complement of C in a
// connected set, for every cut of the family. Errors when no r <= R works.
BlockRadius compute_block_radius(const TreeSet& ts);

struct Block {
    int class_index = -1;
    Bitset vertices;
    int ell = 0;       // uniform diameter bound over the class's halo sets
    bool open = false; // inherited from the class
};

// Intersection of the block-radius neighborhoods over the class (extended by
// the class's uncertified members). Cross-checked against the equivalent
// core-plus-halo formula; disagreement raises an internal error.
Block block_of_class(const TreeSet& ts, const std::vector<CutClass>& classes,
                     int class_index, int block_radius);

struct EndEstimate {
    int ends = 0; // 0, 1, or 2 (meaning "more than one")
    bool stable = false;
    std::vector<int> per_probe;
};

// Frontier-reaching components of the block minus a ball around its basepoint,
// probed at increasing radii; stable when the last two probes agree.
EndEstimate block_end_estimate(const GraphWindow& window, const Block& block,
                               const std::vector<int>& probe_radii);

} // namespace structree
