#include "structree/window.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "structree/errors.hpp"

namespace structree {

int GraphWindow::vertex(const std::string& id) const {
    auto it = index_of.find(id);
    if (it == index_of.end()) fail(error_kind::input, "unknown vertex id: " + id);
    return it->second;
}

bool GraphWindow::has_edge(int u, int v) const {
    const auto& n = adj[u];
    return std::binary_search(n.begin(), n.end(), v);
}

Bitset GraphWindow::full_set() const {
    Bitset all(num_vertices());
    for (int v = 0; v < num_vertices(); ++v) all.set(v);
    return all;
}

namespace {

GraphWindow assemble(std::map<std::string, int>&& depth_by_id,
                     const std::function<std::vector<std::string>(const std::string&)>& neighbors,
                     const std::string& origin_id, int radius) {
    GraphWindow w;
    w.radius = radius;
    for (const auto& [id, d] : depth_by_id) w.ids.push_back(id);
    std::sort(w.ids.begin(), w.ids.end());
    for (int i = 0; i < static_cast<int>(w.ids.size()); ++i) w.index_of[w.ids[i]] = i;
    w.depth.resize(w.ids.size());
    w.frontier.resize(w.ids.size());
    for (int i = 0; i < static_cast<int>(w.ids.size()); ++i) {
        w.depth[i] = depth_by_id.at(w.ids[i]);
        w.frontier[i] = w.depth[i] == radius;
    }
    w.origin = w.index_of.at(origin_id);
    w.adj.resize(w.ids.size());
    std::set<std::pair<int, int>> edge_set;
    for (int u = 0; u < static_cast<int>(w.ids.size()); ++u) {
        for (const std::string& nid : neighbors(w.ids[u])) {
            auto it = w.index_of.find(nid);
            if (it == w.index_of.end()) continue;
            int v = it->second;
            if (u == v) continue; // no loops
            edge_set.insert({std::min(u, v), std::max(u, v)});
        }
    }
    for (auto [u, v] : edge_set) {
        w.edges.push_back({u, v});
        w.adj[u].push_back(v);
        w.adj[v].push_back(u);
    }
    for (auto& n : w.adj) std::sort(n.begin(), n.end());
    return w;
}

} // namespace

GraphWindow build_window(const std::string& origin_id, int radius, const NeighborFn& neighbors) {
    if (radius < 1) fail(error_kind::input, "window radius must be at least 1");
    std::map<std::string, int> depth_by_id;
    std::deque<std::string> queue;
    depth_by_id[origin_id] = 0;
    queue.push_back(origin_id);
    while (!queue.empty()) {
        std::string cur = queue.front();
        queue.pop_front();
        int d = depth_by_id[cur];
        if (d == radius) continue;
        for (const std::string& nid : neighbors(cur)) {
            if (depth_by_id.count(nid)) continue;
            depth_by_id[nid] = d + 1;
            queue.push_back(nid);
        }
    }
    return assemble(std::move(depth_by_id), neighbors, origin_id, radius);
}

GraphWindow build_cayley_window(const OraclePtr& oracle, const std::vector<Letter>& generators,
                                int radius) {
    if (radius < 1) fail(error_kind::input, "window radius must be at least 1");
    for (Letter a : generators) {
        if (a < 0 || a >= oracle->alphabet().size())
            fail(error_kind::input, "generator letter out of range");
        Letter inv = oracle->alphabet().inverse[a];
        if (inv != -1 && std::find(generators.begin(), generators.end(), inv) == generators.end())
            fail(error_kind::input, "Cayley generators must be closed under involution");
    }
    auto ball = oracle->enumerate_ball(generators, radius);
    std::unordered_map<std::string, NormalForm> by_name;
    std::map<std::string, int> depth_by_id;
    for (const auto& e : ball) {
        by_name.emplace(e.name, e.element);
        depth_by_id[e.name] = e.distance;
    }
    NeighborFn neighbors = [&](const std::string& id) {
        std::vector<std::string> out;
        const NormalForm& g = by_name.at(id);
        for (Letter a : generators) {
            if (oracle->letter_is_identity(a)) continue;
            Word w = oracle->word_of(g);
            w.push_back(a);
            out.push_back(oracle->name_of(oracle->normal_form(w)));
        }
        return out;
    };
    GraphWindow w = assemble(std::move(depth_by_id), neighbors, "1", radius);
    w.oracle = oracle;
    w.generators = generators;
    w.element.resize(w.ids.size());
    for (int v = 0; v < w.num_vertices(); ++v) w.element[v] = by_name.at(w.ids[v]);
    return w;
}

GraphWindow build_custom_window(const std::vector<std::string>& ids,
                                const std::vector<std::pair<std::string, std::string>>& edge_list,
                                const std::string& origin_id, int radius) {
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& id : ids) adj[id];
    for (const auto& [a, b] : edge_list) {
        if (!adj.count(a) || !adj.count(b))
            fail(error_kind::input, "edge references unknown vertex");
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    if (!adj.count(origin_id)) fail(error_kind::input, "unknown origin vertex");
    return build_window(origin_id, radius,
                        [adj](const std::string& id) { return adj.at(id); });
}

std::vector<Component> components(const GraphWindow& window, const Bitset& removed) {
    int n = window.num_vertices();
    std::vector<Component> out;
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (seen[s] || removed.test(s)) continue;
        Component comp;
        comp.vertices = Bitset(n);
        std::deque<int> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            comp.vertices.set(u);
            comp.reaches_frontier |= window.frontier[u];
            for (int v : window.adj[u]) {
                if (seen[v] || removed.test(v)) continue;
                seen[v] = true;
                queue.push_back(v);
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

Neighborhood neighborhood(const GraphWindow& window, const Bitset& seed, int k) {
    int n = window.num_vertices();
    Neighborhood out;
    out.vertices = Bitset(n);
    std::vector<int> dist(n, -1);
    std::deque<int> queue;
    for (int v = 0; v < n; ++v) {
        if (seed.test(v)) {
            dist[v] = 0;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        out.vertices.set(u);
        if (window.depth[u] > window.radius - k) out.reliable = false;
        if (dist[u] == k) continue;
        for (int v : window.adj[u]) {
            if (dist[v] != -1) continue;
            dist[v] = dist[u] + 1;
            queue.push_back(v);
        }
    }
    return out;
}

std::vector<int> bfs_distances(const GraphWindow& window, const std::vector<int>& sources) {
    std::vector<int> dist(window.num_vertices(), -1);
    std::deque<int> queue;
    for (int s : sources) {
        dist[s] = 0;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : window.adj[u]) {
            if (dist[v] != -1) continue;
            dist[v] = dist[u] + 1;
            queue.push_back(v);
        }
    }
    return dist;
}

namespace {

// Geodesic from `from` to the BFS source of `dist`, starting at `from`.
std::vector<int> descend(const GraphWindow& window, const std::vector<int>& dist, int from) {
    std::vector<int> path{from};
    int cur = from;
    while (dist[cur] > 0) {
        for (int v : window.adj[cur]) {
            if (dist[v] == dist[cur] - 1) {
                cur = v;
                break;
            }
        }
        path.push_back(cur);
    }
    return path;
}

} // namespace

std::vector<int> longest_geodesic_through(const GraphWindow& window, int v0) {
    if (!window.is_interior(v0))
        fail(error_kind::input, "geodesic basepoint must be an interior vertex");
    std::vector<int> d0 = bfs_distances(window, {v0});

    auto pick_far = [&](const std::vector<int>& dist) {
        int best = -1;
        for (int v = 0; v < window.num_vertices(); ++v) {
            if (dist[v] < 0) continue;
            if (best == -1 || dist[v] > dist[best] ||
                (dist[v] == dist[best] && window.ids[v] < window.ids[best]))
                best = v;
        }
        return best;
    };

    int u = pick_far(d0);
    std::vector<int> du = bfs_distances(window, {u});
    int w = -1;
    for (int x = 0; x < window.num_vertices(); ++x) {
        if (du[x] != du[v0] + d0[x]) continue;
        if (w == -1 || d0[x] > d0[w] || (d0[x] == d0[w] && window.ids[x] < window.ids[w]))
            w = x;
    }

    // Extend both endpoints while the whole path stays geodesic.
    for (int guard = 0; guard < 4 * window.radius + 8; ++guard) {
        bool extended = false;
        std::vector<int> dw = bfs_distances(window, {w});
        for (int x : window.adj[u]) {
            if (dw[x] == dw[u] + 1) {
                u = x;
                extended = true;
                break;
            }
        }
        du = bfs_distances(window, {u});
        for (int x : window.adj[w]) {
            if (du[x] == du[w] + 1) {
                w = x;
                extended = true;
                break;
            }
        }
        if (!extended) break;
    }

    du = bfs_distances(window, {u});
    // walk from w towards v0 picking neighbors that descend in both metrics
    std::vector<int> right;
    int cur = w;
    right.push_back(cur);
    while (cur != v0) {
        int next = -1;
        for (int x : window.adj[cur]) {
            if (d0[x] == d0[cur] - 1 && du[x] == du[cur] - 1) {
                if (next == -1 || window.ids[x] < window.ids[next]) next = x;
            }
        }
        if (next == -1) fail(error_kind::internal, "geodesic reconstruction failed");
        cur = next;
        right.push_back(cur);
    }
    std::reverse(right.begin(), right.end()); // v0 ... w
    std::vector<int> left = descend(window, du, v0); // v0 ... u

    std::vector<int> path(left.rbegin(), left.rend()); // u ... v0
    path.insert(path.end(), right.begin() + 1, right.end());
    return path;
}

void validate_ray(const GraphWindow& window, const RayPair& ray) {
    auto check_path = [&](const std::vector<int>& p) {
        if (p.empty() || p.front() != ray.base)
            fail(error_kind::input, "ray path must start at the basepoint");
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (!window.has_edge(p[i], p[i + 1]))
                fail(error_kind::input, "ray path uses a non-edge");
        std::set<int> seen(p.begin(), p.end());
        if (seen.size() != p.size()) fail(error_kind::input, "ray path is not simple");
        if (!window.frontier[p.back()])
            fail(error_kind::input, "ray path must end on the frontier");
    };
    check_path(ray.left);
    check_path(ray.right);
    std::set<int> l(ray.left.begin(), ray.left.end());
    for (std::size_t i = 1; i < ray.right.size(); ++i)
        if (l.count(ray.right[i]))
            fail(error_kind::input, "ray sides may share only the basepoint");
}

std::vector<int> ray_tail(const RayPair& ray, bool left_side, int tail_depth) {
    const std::vector<int>& p = left_side ? ray.left : ray.right;
    int n = static_cast<int>(p.size());
    int from = std::max(0, n - tail_depth);
    return std::vector<int>(p.begin() + from, p.end());
}

bool ray_from_path(const GraphWindow& window, const std::vector<int>& path, int base,
                   RayPair& out) {
    auto it = std::find(path.begin(), path.end(), base);
    if (it == path.end()) return false;
    std::size_t pos = static_cast<std::size_t>(it - path.begin());
    if (pos == 0 || pos + 1 == path.size()) return false;
    out.base = base;
    out.left = std::vector<int>(path.begin(), path.begin() + pos + 1);
    std::reverse(out.left.begin(), out.left.end()); // base ... path.front()
    out.right.assign(path.begin() + pos, path.end());
    if (!window.frontier[out.left.back()] || !window.frontier[out.right.back()]) return false;
    return true;
}

std::vector<RayPair> auto_rays(const GraphWindow& window) {
    std::vector<RayPair> rays;
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    for (int v = 0; v < window.num_vertices(); ++v) {
        if (!window.is_interior(v)) continue;
        std::vector<int> path = longest_geodesic_through(window, v);
        RayPair ray;
        if (!ray_from_path(window, path, v, ray)) continue;
        // canonical orientation: lexicographically smaller side first
        if (ray.right < ray.left) std::swap(ray.left, ray.right);
        if (!seen.insert({ray.left, ray.right}).second) continue;
        validate_ray(window, ray);
        rays.push_back(std::move(ray));
    }
    return rays;
}

} // namespace structree
