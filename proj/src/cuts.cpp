#include "structree/cuts.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "structree/errors.hpp"

namespace structree {

namespace {

bool set_is_connected(const GraphWindow& window, const Bitset& set) {
    int start = -1;
    for (int v = 0; v < window.num_vertices(); ++v)
        if (set.test(v)) {
            start = v;
            break;
        }
    if (start == -1) return false;
    std::deque<int> queue{start};
    Bitset seen(window.num_vertices());
    seen.set(start);
    std::size_t visited = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : window.adj[u]) {
            if (!set.test(v) || seen.test(v)) continue;
            seen.set(v);
            ++visited;
            queue.push_back(v);
        }
    }
    return visited == set.count();
}

bool reaches_frontier(const GraphWindow& window, const Bitset& set) {
    for (int v = 0; v < window.num_vertices(); ++v)
        if (set.test(v) && window.frontier[v]) return true;
    return false;
}

void fill_boundary(const GraphWindow& window, Cut& cut) {
    cut.boundary_edges.clear();
    std::set<int> bverts;
    for (auto [u, v] : window.edges) {
        if (cut.side.test(u) != cut.side.test(v)) {
            cut.boundary_edges.push_back({u, v});
            bverts.insert(u);
            bverts.insert(v);
        }
    }
    cut.boundary_vertices.assign(bverts.begin(), bverts.end());
    cut.weight = static_cast<int>(cut.boundary_edges.size());
}

} // namespace

Cut make_cut(const GraphWindow& window, const Bitset& side) {
    if (side.none()) fail(error_kind::input, "cut side is empty");
    Bitset co = side.complement();
    if (co.none()) fail(error_kind::input, "cut complement is empty");
    if (!set_is_connected(window, side))
        fail(error_kind::input, "not a cut: the designated side is disconnected");
    if (!set_is_connected(window, co))
        fail(error_kind::input, "not a cut: the complement is disconnected");
    Cut cut;
    cut.side = side;
    fill_boundary(window, cut);
    cut.side_reaches_frontier = reaches_frontier(window, side);
    cut.complement_reaches_frontier = reaches_frontier(window, co);
    return cut;
}

Cut cut_complement(const GraphWindow& window, const Cut& cut) {
    Cut co = cut;
    co.side = cut.side.complement();
    std::swap(co.side_reaches_frontier, co.complement_reaches_frontier);
    (void)window;
    return co;
}

bool cut_is_certified(const GraphWindow& window, const Cut& cut, int weight_bound) {
    int margin = window.radius - weight_bound - 1;
    for (int v : cut.boundary_vertices)
        if (window.depth[v] > margin) return false;
    return true;
}

bool is_nested(const Cut& a, const Cut& b) {
    if (a.side.is_subset_of(b.side)) return true;       // A <= B
    if (!a.side.intersects(b.side)) return true;        // A <= co-B
    if (a.side.union_is_all(b.side)) return true;       // co-A <= B
    if (b.side.is_subset_of(a.side)) return true;       // co-A <= co-B
    return false;
}

std::array<Bitset, 4> corners(const Cut& a, const Cut& b) {
    Bitset ca = a.side.complement();
    Bitset cb = b.side.complement();
    return {a.side & b.side, a.side & cb, ca & b.side, ca & cb};
}

namespace {

// Depth-first enumeration of the vertex-0-free side of every bounded-weight
// cut. Each such side is grown from its smallest vertex, so every unordered
// cut is found exactly once. Vertices below the root are permanently outside,
// and every in/out decision adds its crossing edges to the committed boundary,
// which prunes once it exceeds the budget. At a closed state the side's whole
// neighborhood is decided, so the committed count equals the final weight.
class SideEnumerator {
public:
    SideEnumerator(const GraphWindow& window, int budget)
        : window_(window), budget_(budget) {}

    std::vector<Bitset> run() {
        int n = window_.num_vertices();
        for (root_ = 1; root_ < n; ++root_) {
            in_ = Bitset(n);
            out_ = Bitset(n);
            candidates_.clear();
            committed_ = 0;
            for (int u : window_.adj[root_]) committed_ += u < root_;
            if (committed_ > budget_) continue;
            in_.set(root_);
            push_candidates(root_);
            recurse();
        }
        return std::move(results_);
    }

private:
    bool decided(int v) const { return v < root_ || in_.test(v) || out_.test(v); }

    void push_candidates(int joined) {
        for (int u : window_.adj[joined])
            if (!decided(u)) candidates_.push_back(u);
    }

    // Next undecided vertex adjacent to the side, preferring one that also
    // touches the outside so hopeless regions commit their boundary early.
    int pick() const {
        int best = -1;
        for (int v : candidates_) {
            if (decided(v)) continue;
            if (best == -1) best = v;
            for (int u : window_.adj[v])
                if (u < root_ || out_.test(u)) return v;
        }
        return best;
    }

    void recurse() {
        int v = pick();
        if (v == -1) {
            close();
            return;
        }
        int cross_out = 0, cross_in = 0;
        for (int u : window_.adj[v]) {
            cross_out += u < root_ || out_.test(u);
            cross_in += in_.test(u);
        }
        if (committed_ + cross_out <= budget_) {
            in_.set(v);
            committed_ += cross_out;
            std::size_t mark = candidates_.size();
            push_candidates(v);
            recurse();
            candidates_.resize(mark);
            in_.reset(v);
            committed_ -= cross_out;
        }
        if (committed_ + cross_in <= budget_) {
            out_.set(v);
            committed_ += cross_in;
            recurse();
            out_.reset(v);
            committed_ -= cross_in;
        }
    }

    void close() {
        if (committed_ < 1 || committed_ > budget_) return;
        Bitset co = in_.complement();
        if (!set_is_connected(window_, co)) return;
        results_.push_back(in_);
    }

    const GraphWindow& window_;
    int budget_;
    int root_ = 1;
    Bitset in_, out_;
    std::vector<int> candidates_;
    int committed_ = 0;
    std::vector<Bitset> results_;
};

std::vector<Cut> enumerate_sides(const GraphWindow& window, int weight_bound) {
    std::vector<Cut> cuts;
    if (weight_bound <= 0 || window.num_vertices() < 2) return cuts;
    SideEnumerator en(window, weight_bound);
    for (Bitset& zero_free_side : en.run()) {
        Cut cut;
        cut.side = zero_free_side.complement(); // canonical side contains vertex 0
        fill_boundary(window, cut);
        cut.side_reaches_frontier = reaches_frontier(window, cut.side);
        cut.complement_reaches_frontier = reaches_frontier(window, cut.side.complement());
        cut.certified = cut_is_certified(window, cut, weight_bound);
        cuts.push_back(std::move(cut));
    }
    std::sort(cuts.begin(), cuts.end(), [](const Cut& a, const Cut& b) {
        return std::tie(a.weight, a.side) < std::tie(b.weight, b.side);
    });
    return cuts;
}

} // namespace

std::vector<Cut> enumerate_k_cuts(const GraphWindow& window, const Bitset& seed,
                                  int weight_bound) {
    std::vector<Cut> out;
    if (seed.none()) return out;
    for (Cut& cut : enumerate_sides(window, weight_bound)) {
        bool touches = false;
        for (int v : cut.boundary_vertices) touches |= seed.test(v);
        if (touches) out.push_back(std::move(cut));
    }
    return out;
}

CutUniverse build_cut_universe(const GraphWindow& window, int weight_bound) {
    CutUniverse u;
    u.window = &window;
    u.weight_bound = weight_bound;
    for (Cut& cut : enumerate_sides(window, weight_bound)) {
        if (cut.certified)
            u.cuts.push_back(std::move(cut));
        else
            u.uncertified.push_back(std::move(cut));
    }
    return u;
}

int crossing_count(const CutUniverse& universe, const Cut& cut) {
    int crossings = 0;
    for (const Cut& d : universe.cuts)
        if (!is_nested(cut, d)) ++crossings;
    return 2 * crossings; // both orientations of each crossing pair
}

std::optional<Cut> orient_splitting(const GraphWindow& window, const Cut& cut,
                                    const RayPair& ray, int tail_depth) {
    auto contained = [&](const std::vector<int>& tail, const Bitset& set) {
        for (int v : tail)
            if (!set.test(v)) return false;
        return true;
    };
    if (static_cast<int>(ray.left.size()) <= tail_depth ||
        static_cast<int>(ray.right.size()) <= tail_depth)
        return std::nullopt; // too short to have tails clear of the basepoint
    std::vector<int> lt = ray_tail(ray, true, tail_depth);
    std::vector<int> rt = ray_tail(ray, false, tail_depth);
    Bitset co = cut.side.complement();
    if (contained(lt, cut.side) && contained(rt, co)) return cut;
    if (contained(lt, co) && contained(rt, cut.side)) return cut_complement(window, cut);
    return std::nullopt;
}

std::vector<Cut> cuts_splitting_ray(const CutUniverse& universe, const RayPair& ray,
                                    int tail_depth) {
    std::vector<Cut> out;
    for (const Cut& cut : universe.cuts) {
        auto oriented = orient_splitting(*universe.window, cut, ray, tail_depth);
        if (oriented) out.push_back(std::move(*oriented));
    }
    return out;
}

std::vector<Cut> min_weight_splitters(const CutUniverse& universe, const RayPair& ray,
                                      int tail_depth) {
    std::vector<Cut> all = cuts_splitting_ray(universe, ray, tail_depth);
    int best = -1;
    for (const Cut& c : all)
        if (best == -1 || c.weight < best) best = c.weight;
    std::vector<Cut> out;
    for (Cut& c : all)
        if (c.weight == best) out.push_back(std::move(c));
    return out;
}

std::vector<Cut> optimal_cuts(const CutUniverse& universe, const std::vector<RayPair>& rays,
                              int tail_depth) {
    std::map<Bitset, Cut> chosen; // keyed by canonical (smallest-vertex) side
    std::map<Bitset, int> crossing_cache;
    auto crossing_of = [&](const Cut& c) {
        Bitset key = c.side.test(0) ? c.side : c.side.complement();
        auto it = crossing_cache.find(key);
        if (it != crossing_cache.end()) return it->second;
        int m = crossing_count(universe, c);
        crossing_cache.emplace(key, m);
        return m;
    };
    for (const RayPair& ray : rays) {
        std::vector<Cut> candidates = min_weight_splitters(universe, ray, tail_depth);
        if (candidates.empty()) continue;
        int best = -1;
        for (const Cut& c : candidates) {
            int m = crossing_of(c);
            if (best == -1 || m < best) best = m;
        }
        for (Cut& c : candidates) {
            if (crossing_of(c) != best) continue;
            Bitset key = c.side.test(0) ? c.side : c.side.complement();
            if (!chosen.count(key)) {
                Cut canonical = c.side.test(0) ? std::move(c) : cut_complement(*universe.window, c);
                chosen.emplace(key, std::move(canonical));
            }
        }
    }
    std::vector<Cut> out;
    for (auto& [key, cut] : chosen) out.push_back(std::move(cut));
    std::sort(out.begin(), out.end(), [](const Cut& a, const Cut& b) {
        return std::tie(a.weight, a.side) < std::tie(b.weight, b.side);
    });
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (!is_nested(out[i], out[j]))
                fail(error_kind::internal,
                     "optimal cuts are not pairwise nested (window or weight bound too "
                     "small): " +
                         cut_to_string(*universe.window, out[i]) + " vs " +
                         cut_to_string(*universe.window, out[j]));
    return out;
}

int choose_weight_bound(const GraphWindow& window, const std::vector<RayPair>& rays,
                        int tail_depth, int probe_bound) {
    // Probe weights upward so each probe certifies cuts at its own margin.
    int bound = 1;
    std::vector<char> split(rays.size(), 0);
    for (int w = 1; w <= probe_bound; ++w) {
        CutUniverse probe = build_cut_universe(window, w);
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (split[i]) continue;
            if (!cuts_splitting_ray(probe, rays[i], tail_depth).empty()) {
                split[i] = 1;
                bound = std::max(bound, w);
            }
        }
    }
    return bound;
}

std::string cut_to_string(const GraphWindow& window, const Cut& cut) {
    std::string out = "weight=" + std::to_string(cut.weight) + " side={";
    auto members = cut.side.members();
    std::size_t shown = std::min<std::size_t>(members.size(), 12);
    for (std::size_t i = 0; i < shown; ++i) {
        if (i) out += ",";
        out += window.ids[members[i]];
    }
    if (members.size() > shown)
        out += ",... (" + std::to_string(members.size()) + " vertices)";
    out += "}";
    return out;
}

} // namespace structree
