#include "structree/fixtures.hpp"

#include <algorithm>
#include <set>

#include "structree/errors.hpp"

namespace structree {

namespace {

std::string coord_id(long i, long j) {
    return std::to_string(i) + "," + std::to_string(j);
}

std::pair<long, long> parse_coord(const std::string& id) {
    auto comma = id.find(',');
    return {std::stol(id.substr(0, comma)), std::stol(id.substr(comma + 1))};
}

std::vector<std::string> grid_neighbors(const std::string& id) {
    auto [i, j] = parse_coord(id);
    return {coord_id(i + 1, j), coord_id(i - 1, j), coord_id(i, j + 1), coord_id(i, j - 1)};
}

// Two-row strip j in {0,1} with a one-way vertical spike at i = 0, j >= 0.
bool spike_member(long i, long j) { return j == 0 || j == 1 || (i == 0 && j >= 0); }

std::vector<std::string> spike_neighbors(const std::string& id) {
    auto [i, j] = parse_coord(id);
    std::vector<std::string> out;
    const long di[4] = {1, -1, 0, 0};
    const long dj[4] = {0, 0, 1, -1};
    for (int d = 0; d < 4; ++d) {
        long ni = i + di[d], nj = j + dj[d];
        if (spike_member(ni, nj)) out.push_back(coord_id(ni, nj));
    }
    return out;
}

// 4-cycle c0 c1 c2 c3 with rays l0 l1 ... at c0 and r0 r1 ... at c2.
std::vector<std::string> ring_neighbors(const std::string& id) {
    if (id == "c0") return {"c1", "c3", "l0"};
    if (id == "c1") return {"c0", "c2"};
    if (id == "c2") return {"c1", "c3", "r0"};
    if (id == "c3") return {"c0", "c2"};
    char side = id[0];
    long k = std::stol(id.substr(1));
    std::vector<std::string> out;
    if (k == 0)
        out.push_back(side == 'l' ? "c0" : "c2");
    else
        out.push_back(side + std::to_string(k - 1));
    out.push_back(side + std::to_string(k + 1));
    return out;
}

RayPair make_ray(const GraphWindow& w, const std::vector<std::string>& left,
                 const std::vector<std::string>& right) {
    RayPair ray;
    ray.base = w.vertex(left.front());
    for (const auto& id : left) ray.left.push_back(w.vertex(id));
    for (const auto& id : right) ray.right.push_back(w.vertex(id));
    validate_ray(w, ray);
    return ray;
}

// Ray through the origin of a Cayley window following fixed letters each way.
RayPair cayley_axis_ray(const GraphWindow& w, const std::vector<Letter>& left_letters,
                        const std::vector<Letter>& right_letters) {
    const OraclePtr& g = w.oracle;
    auto extend = [&](const std::vector<Letter>& letters) {
        std::vector<int> path{w.origin};
        NormalForm cur = w.element[w.origin];
        std::size_t step = 0;
        while (!w.frontier[path.back()]) {
            Word word = g->word_of(cur);
            word.push_back(letters[step % letters.size()]);
            cur = g->normal_form(word);
            path.push_back(w.vertex(g->name_of(cur)));
            ++step;
        }
        return path;
    };
    RayPair ray;
    ray.base = w.origin;
    ray.left = extend(left_letters);
    ray.right = extend(right_letters);
    validate_ray(w, ray);
    return ray;
}

} // namespace

std::vector<std::string> fixture_names() {
    return {"f2", "dinf", "pgl", "zz2", "gridz2", "grid", "spike", "ring"};
}

Fixture make_fixture(const std::string& name, int radius) {
    if (radius < 2) fail(error_kind::input, "fixture radius must be at least 2");
    Fixture fx;
    fx.name = name;
    if (name == "grid") {
        fx.window = build_window("0,0", radius, grid_neighbors);
        fx.default_weight_bound = 4;
        std::vector<std::string> xl{"0,0"}, xr{"0,0"}, yl{"0,0"}, yr{"0,0"};
        for (int k = 1; k <= radius; ++k) {
            xl.push_back(coord_id(-k, 0));
            xr.push_back(coord_id(k, 0));
            yl.push_back(coord_id(0, -k));
            yr.push_back(coord_id(0, k));
        }
        fx.named_rays.push_back(make_ray(fx.window, xl, xr));
        fx.named_rays.push_back(make_ray(fx.window, yl, yr));
    } else if (name == "spike") {
        fx.window = build_window("0,0", radius, spike_neighbors);
        fx.default_weight_bound = 2;
        // alpha: up the spike, then rightwards along the j = 1 row
        std::vector<std::string> al, ar;
        al.push_back("0,1");
        for (int j = 2; j <= radius; ++j) al.push_back(coord_id(0, j));
        ar.push_back("0,1");
        for (int i = 1; i + 1 <= radius; ++i) ar.push_back(coord_id(i, 1));
        fx.named_rays.push_back(make_ray(fx.window, al, ar));
        // beta: the j = 0 row
        std::vector<std::string> bl{"0,0"}, br{"0,0"};
        for (int k = 1; k <= radius; ++k) {
            bl.push_back(coord_id(-k, 0));
            br.push_back(coord_id(k, 0));
        }
        fx.named_rays.push_back(make_ray(fx.window, bl, br));
    } else if (name == "ring") {
        fx.window = build_window("c0", radius, ring_neighbors);
        fx.default_weight_bound = 2;
        if (radius >= 3) {
            std::vector<std::string> left{"c0"}, right{"c0", "c1", "c2"};
            for (int k = 0; k + 1 <= radius; ++k) left.push_back("l" + std::to_string(k));
            for (int k = 0; k + 3 <= radius; ++k) right.push_back("r" + std::to_string(k));
            fx.named_rays.push_back(make_ray(fx.window, left, right));
        }
    } else if (name == "f2") {
        auto g = oracle_f2();
        fx.window = build_cayley_window(g, g->default_generators(), radius);
        fx.default_weight_bound = 1;
        const auto& a = g->alphabet();
        fx.named_rays.push_back(cayley_axis_ray(fx.window, {a.require("a^-1")}, {a.require("a")}));
        fx.named_rays.push_back(cayley_axis_ray(fx.window, {a.require("b^-1")}, {a.require("b")}));
    } else if (name == "dinf") {
        auto g = oracle_dinf();
        const auto& a = g->alphabet();
        std::vector<Letter> gens{a.require("a"), a.require("a^-1"), a.require("t")};
        fx.window = build_cayley_window(g, gens, radius);
        fx.default_weight_bound = 2;
        fx.named_rays.push_back(cayley_axis_ray(fx.window, {a.require("a^-1")}, {a.require("a")}));
    } else if (name == "pgl") {
        auto g = oracle_pgl();
        fx.window = build_cayley_window(g, g->default_generators(), radius);
        fx.default_weight_bound = 1;
        const auto& a = g->alphabet();
        fx.named_rays.push_back(cayley_axis_ray(fx.window, {a.require("a"), a.require("b")},
                                                {a.require("b"), a.require("a")}));
    } else if (name == "zz2") {
        auto g = oracle_zz2();
        fx.window = build_cayley_window(g, g->default_generators(), radius);
        fx.default_weight_bound = 2;
        const auto& a = g->alphabet();
        // a ladder ray inside the Z x Z/2 sheet and a ray crossing a c-bridge
        fx.named_rays.push_back(cayley_axis_ray(fx.window, {a.require("a^-1")}, {a.require("a")}));
        fx.named_rays.push_back(cayley_axis_ray(fx.window, {a.require("a^-1")},
                                                {a.require("c"), a.require("a")}));
    } else if (name == "gridz2") {
        auto g = oracle_gridz2();
        fx.window = build_cayley_window(g, g->default_generators(), radius);
        fx.default_weight_bound = 1;
        const auto& a = g->alphabet();
        fx.named_rays.push_back(cayley_axis_ray(fx.window, {a.require("x^-1")}, {a.require("x")}));
        fx.named_rays.push_back(cayley_axis_ray(fx.window, {a.require("x^-1")},
                                                {a.require("c"), a.require("x")}));
    } else {
        fail(error_kind::input, "unknown fixture: " + name);
    }
    return fx;
}

std::vector<RayPair> fixture_rays(const Fixture& fixture) {
    std::vector<RayPair> rays = fixture.named_rays;
    std::vector<RayPair> generated = auto_rays(fixture.window);
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    std::vector<RayPair> out;
    for (auto& r : rays) {
        if (seen.insert({r.left, r.right}).second) out.push_back(std::move(r));
    }
    for (auto& r : generated) {
        if (seen.insert({r.left, r.right}).second) out.push_back(std::move(r));
    }
    return out;
}

} // namespace structree
