#include "structree/structure_tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "structree/errors.hpp"

namespace structree {

namespace {

bool strict_subset(const Bitset& a, const Bitset& b) {
    return a.is_subset_of(b) && !(a == b);
}

bool induced_connected(const GraphWindow& window, const Bitset& set) {
    if (set.none()) return false;
    return components(window, set.complement()).size() == 1;
}

} // namespace

TreeSet make_tree_set(const GraphWindow& window, const std::vector<Cut>& canonical,
                      std::vector<Cut> excluded) {
    TreeSet ts;
    ts.window = &window;
    ts.excluded = std::move(excluded);
    for (const Cut& c : canonical) {
        ts.cuts.push_back(c);
        ts.cuts.push_back(cut_complement(window, c));
    }
    for (std::size_t i = 0; i < ts.cuts.size(); i += 2)
        for (std::size_t j = i + 2; j < ts.cuts.size(); j += 2)
            if (!is_nested(ts.cuts[i], ts.cuts[j]))
                fail(error_kind::internal,
                     "tree set requires pairwise nested cuts: " +
                         cut_to_string(window, ts.cuts[i]) + " vs " +
                         cut_to_string(window, ts.cuts[j]));
    return ts;
}

TreeSet optimal_tree_set(const CutUniverse& universe, const std::vector<RayPair>& rays,
                         int tail_depth) {
    std::vector<Cut> family = optimal_cuts(universe, rays, tail_depth);
    std::set<Bitset> family_sides;
    for (const Cut& c : family) family_sides.insert(c.side);
    std::vector<Cut> excluded = universe.uncertified;
    for (const Cut& c : universe.cuts)
        if (!family_sides.count(c.side)) excluded.push_back(c);
    return make_tree_set(*universe.window, family, std::move(excluded));
}

std::vector<int> cuts_between(const TreeSet& ts, const Cut& lower, const Cut& upper) {
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(ts.cuts.size()); ++e)
        if (lower.side.is_subset_of(ts.cuts[e].side) &&
            ts.cuts[e].side.is_subset_of(upper.side))
            out.push_back(e);
    return out;
}

bool related(const TreeSet& ts, int c, int d) {
    if (c == d) return true;
    const Bitset& co_c = ts.cuts[ts.complement_of(c)].side;
    const Bitset& side_d = ts.cuts[d].side;
    if (!strict_subset(co_c, side_d)) return false;
    for (const Cut& e : ts.cuts)
        if (strict_subset(co_c, e.side) && strict_subset(e.side, side_d)) return false;
    return true;
}

namespace {

// Minimal strict supersets of `target` within the family alone and within the
// family plus the excluded cuts (both orientations of each).
struct SupersetScan {
    std::vector<std::pair<Bitset, int>> minimal_family;
    std::vector<Cut> minimal_excluded;
    bool has_excluded_minimal = false;
    bool family_demoted = false; // a family minimal loses minimality combined
};

SupersetScan minimal_supersets(const TreeSet& ts, const Bitset& target) {
    struct Candidate {
        const Bitset* side;
        int family_index; // -1 for uncertified
        const Cut* cut;
    };
    std::vector<Candidate> cands;
    for (int e = 0; e < static_cast<int>(ts.cuts.size()); ++e)
        if (strict_subset(target, ts.cuts[e].side))
            cands.push_back({&ts.cuts[e].side, e, &ts.cuts[e]});
    std::vector<Cut> flipped;
    flipped.reserve(ts.excluded.size());
    for (const Cut& u : ts.excluded) flipped.push_back(cut_complement(*ts.window, u));
    const std::vector<Cut>* lists[2] = {&ts.excluded, &flipped};
    for (const std::vector<Cut>* list : lists)
        for (const Cut& u : *list)
            if (strict_subset(target, u.side)) cands.push_back({&u.side, -1, &u});
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        return std::tie(*a.side) < std::tie(*b.side);
    });
    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        return a.side->count() < b.side->count();
    });

    SupersetScan scan;
    std::vector<const Bitset*> accepted;        // combined minimals
    std::vector<const Bitset*> accepted_family; // family-only minimals
    for (const auto& cand : cands) {
        bool min_combined = true;
        for (const Bitset* p : accepted)
            if (strict_subset(*p, *cand.side)) {
                min_combined = false;
                break;
            }
        bool min_family = cand.family_index >= 0;
        if (min_family)
            for (const Bitset* p : accepted_family)
                if (strict_subset(*p, *cand.side)) {
                    min_family = false;
                    break;
                }
        if (min_combined) accepted.push_back(cand.side);
        if (cand.family_index >= 0 && min_family) {
            accepted_family.push_back(cand.side);
            scan.minimal_family.push_back({*cand.side, cand.family_index});
            if (!min_combined) scan.family_demoted = true;
        }
        if (cand.family_index < 0 && min_combined) {
            scan.has_excluded_minimal = true;
            scan.minimal_excluded.push_back(*cand.cut);
        }
    }
    return scan;
}

} // namespace

std::vector<CutClass> equivalence_classes(const TreeSet& ts) {
    int n = static_cast<int>(ts.cuts.size());
    std::vector<std::vector<int>> members_of(n);
    std::vector<bool> open(n, false);
    std::vector<std::vector<Cut>> extensions(n);
    for (int c = 0; c < n; ++c) {
        SupersetScan scan = minimal_supersets(ts, ts.cuts[ts.complement_of(c)].side);
        std::vector<int> members{c};
        for (const auto& [side, index] : scan.minimal_family) members.push_back(index);
        std::sort(members.begin(), members.end());
        members_of[c] = std::move(members);
        open[c] = scan.has_excluded_minimal || scan.family_demoted;
        extensions[c] = std::move(scan.minimal_excluded);
    }
    // The relation must already be transitive on the family (it is an
    // equivalence relation on nested cuts); verify member lists agree.
    std::vector<CutClass> classes;
    std::vector<bool> seen(n, false);
    for (int c = 0; c < n; ++c) {
        if (seen[c]) continue;
        CutClass cls;
        cls.members = members_of[c];
        for (int m : cls.members) {
            if (members_of[m] != cls.members)
                fail(error_kind::internal,
                     "cut equivalence is not transitive on this family (truncated or "
                     "non-nested input)");
            seen[m] = true;
            cls.open = cls.open || open[m];
            for (Cut& e : extensions[m]) cls.extensions.push_back(e);
        }
        classes.push_back(std::move(cls));
    }
    return classes;
}

StructureTree build_structure_tree(const TreeSet& ts) {
    StructureTree tree;
    tree.family = &ts;
    tree.classes = equivalence_classes(ts);
    tree.class_of.assign(ts.cuts.size(), -1);
    for (int k = 0; k < static_cast<int>(tree.classes.size()); ++k)
        for (int m : tree.classes[k].members) tree.class_of[m] = k;

    std::map<std::pair<int, int>, int> directed_seen;
    tree.adjacency.resize(tree.classes.size());
    for (int pair = 0; pair < ts.pair_count(); ++pair) {
        int a = tree.class_of[2 * pair];
        int b = tree.class_of[2 * pair + 1];
        if (a == b)
            fail(error_kind::internal, "structure tree edge is a self-loop at class " +
                                           std::to_string(a));
        auto [it, fresh] = directed_seen.emplace(std::make_pair(a, b), pair);
        if (!fresh)
            fail(error_kind::internal,
                 "two distinct cut pairs join the same classes (" + std::to_string(a) +
                     ", " + std::to_string(b) + "): directed-edge bijection violated");
        tree.edges.push_back({a, b});
        tree.adjacency[a].push_back(pair);
        tree.adjacency[b].push_back(pair);
    }
    // double edges in opposite orientations are parallel edges as well
    for (const auto& [key, pair] : directed_seen) {
        auto rev = directed_seen.find({key.second, key.first});
        if (rev != directed_seen.end() && rev->second != pair)
            fail(error_kind::internal, "parallel structure tree edges between classes " +
                                           std::to_string(key.first) + " and " +
                                           std::to_string(key.second));
    }

    if (!tree.classes.empty()) {
        if (tree.edges.size() + 1 != tree.classes.size())
            fail(error_kind::internal,
                 "structure tree has " + std::to_string(tree.classes.size()) +
                     " vertices but " + std::to_string(tree.edges.size()) + " edges");
        std::vector<bool> visited(tree.classes.size(), false);
        std::deque<int> queue{0};
        visited[0] = true;
        std::size_t reached = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int pair : tree.adjacency[v]) {
                int w = tree.edges[pair].first == v ? tree.edges[pair].second
                                                    : tree.edges[pair].first;
                if (visited[w]) continue;
                visited[w] = true;
                ++reached;
                queue.push_back(w);
            }
        }
        if (reached != tree.classes.size())
            fail(error_kind::internal, "structure tree is disconnected");
    }
    return tree;
}

BlockRadius compute_block_radius(const TreeSet& ts) {
    if (ts.cuts.empty()) fail(error_kind::input, "empty tree set has no block radius");
    const GraphWindow& w = *ts.window;
    for (int r = 1; r <= w.radius; ++r) {
        bool ok = true;
        bool reliable = true;
        for (const Cut& c : ts.cuts) {
            Neighborhood nb = neighborhood(w, c.side, r);
            reliable &= nb.reliable;
            Bitset halo = nb.vertices & c.side.complement();
            if (!induced_connected(w, halo)) {
                ok = false;
                break;
            }
        }
        if (ok) return {r, reliable};
    }
    fail(error_kind::window_too_small,
         "no block radius up to the window radius makes all halos connected");
}

Block block_of_class(const TreeSet& ts, const std::vector<CutClass>& classes,
                     int class_index, int block_radius) {
    const GraphWindow& w = *ts.window;
    const CutClass& cls = classes[class_index];
    std::vector<const Cut*> members;
    for (int m : cls.members) members.push_back(&ts.cuts[m]);
    for (const Cut& e : cls.extensions) members.push_back(&e);

    Block block;
    block.class_index = class_index;
    block.open = cls.open;
    Bitset meet = w.full_set();
    Bitset core = w.full_set();
    Bitset halo_union(w.num_vertices());
    int ell = 0;
    for (const Cut* c : members) {
        Bitset nbh = neighborhood(w, c->side, block_radius).vertices;
        meet = meet & nbh;
        core = core & c->side;
        Bitset halo = nbh & c->side.complement();
        halo_union = halo_union | halo;
        // diameter of the halo in the window metric
        for (int v : halo.members()) {
            auto dist = bfs_distances(w, {v});
            for (int u : halo.members()) {
                if (dist[u] < 0)
                    fail(error_kind::internal, "halo is disconnected in the window");
                ell = std::max(ell, dist[u]);
            }
        }
    }
    Bitset alt = core | halo_union;
    if (!(alt == meet))
        fail(error_kind::internal,
             "block formulas disagree on class " + std::to_string(class_index));
    block.vertices = meet;
    block.ell = ell;
    return block;
}

EndEstimate block_end_estimate(const GraphWindow& window, const Block& block,
                               const std::vector<int>& probe_radii) {
    EndEstimate est;
    // basepoint: the block vertex closest to the origin, smallest id first
    int base = -1;
    for (int v : block.vertices.members())
        if (base == -1 || window.depth[v] < window.depth[base]) base = v;
    if (base == -1) return est;

    // distances within the block's induced subgraph
    std::vector<int> dist(window.num_vertices(), -1);
    std::deque<int> queue{base};
    dist[base] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : window.adj[u]) {
            if (!block.vertices.test(v) || dist[v] != -1) continue;
            dist[v] = dist[u] + 1;
            queue.push_back(v);
        }
    }

    for (int n : probe_radii) {
        Bitset removed = block.vertices.complement();
        for (int v : block.vertices.members())
            if (dist[v] != -1 && dist[v] <= n) removed.set(v);
        int frontier_comps = 0;
        for (const Component& comp : components(window, removed))
            frontier_comps += comp.reaches_frontier;
        est.per_probe.push_back(std::min(frontier_comps, 2));
    }
    if (!est.per_probe.empty()) est.ends = est.per_probe.back();
    std::size_t k = est.per_probe.size();
    est.stable = k >= 2 && est.per_probe[k - 1] == est.per_probe[k - 2];
    return est;
}

} // namespace structree
