#include <doctest.h>

#include <set>

#include "structree/cuts.hpp"
#include "structree/fixtures.hpp"

using namespace structree;

namespace {

Bitset set_of(const GraphWindow& w, const std::vector<std::string>& ids) {
    Bitset s(w.num_vertices());
    for (const auto& id : ids) s.set(w.vertex(id));
    return s;
}

// sides of the ring fixture, by prefix
Bitset ring_side(const GraphWindow& w, const std::string& ray_prefix,
                 const std::vector<std::string>& extra) {
    Bitset s(w.num_vertices());
    for (int v = 0; v < w.num_vertices(); ++v)
        if (w.ids[v].substr(0, 1) == ray_prefix) s.set(v);
    for (const auto& id : extra) s.set(w.vertex(id));
    return s;
}

// Exhaustive reference enumeration over all vertex subsets; usable for
// windows with at most ~20 vertices.
std::set<Bitset> powerset_cut_sides(const GraphWindow& w, int weight_bound) {
    int n = w.num_vertices();
    REQUIRE(n <= 20);
    std::set<Bitset> sides;
    for (unsigned long mask = 1; mask < (1ul << n); mask += 2) { // always contain vertex 0
        Bitset side(n);
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) side.set(v);
        if (side.complement().none()) continue;
        int weight = 0;
        for (auto [u, v] : w.edges) weight += side.test(u) != side.test(v);
        if (weight > weight_bound) continue;
        // connectivity of both sides via components()
        if (components(w, side.complement()).size() != 1) continue;
        if (components(w, side).size() != 1) continue;
        sides.insert(side);
    }
    return sides;
}

} // namespace

TEST_CASE("make_cut computes boundaries and weights") {
    auto spike = make_fixture("spike", 6);
    const auto& w = spike.window;

    Bitset spike_tail(w.num_vertices());
    for (int j = 3; j <= 6; ++j) spike_tail.set(w.vertex(std::to_string(0) + "," + std::to_string(j)));
    Cut c1 = make_cut(w, spike_tail);
    CHECK(c1.weight == 1);

    Bitset strip(w.num_vertices());
    for (int v = 0; v < w.num_vertices(); ++v) {
        const std::string& id = w.ids[v];
        auto comma = id.find(',');
        long i = std::stol(id.substr(0, comma));
        long j = std::stol(id.substr(comma + 1));
        if (i >= 2 && (j == 0 || j == 1)) strip.set(v);
    }
    Cut c2 = make_cut(w, strip);
    CHECK(c2.weight == 2);

    auto grid = make_fixture("grid", 3);
    Bitset origin_only(grid.window.num_vertices());
    origin_only.set(grid.window.origin);
    Cut c3 = make_cut(grid.window, origin_only);
    CHECK(c3.weight == 4);

    // disconnected side is rejected
    Bitset bad(grid.window.num_vertices());
    bad.set(grid.window.vertex("-1,0"));
    bad.set(grid.window.vertex("1,0"));
    CHECK_THROWS_AS((void)make_cut(grid.window, bad), error);
    CHECK_THROWS_AS((void)make_cut(grid.window, Bitset(grid.window.num_vertices())), error);
}

TEST_CASE("boundary duality") {
    auto ring = make_fixture("ring", 4);
    Cut c = make_cut(ring.window, ring_side(ring.window, "l", {"c0", "c1"}));
    Cut cc = cut_complement(ring.window, c);
    CHECK(c.boundary_edges == cc.boundary_edges);
    CHECK(c.boundary_vertices == cc.boundary_vertices);
    CHECK(c.weight == cc.weight);
}

TEST_CASE("enumeration matches the exhaustive reference on small windows") {
    for (const auto& [name, radius, k] :
         std::vector<std::tuple<std::string, int, int>>{{"ring", 3, 2},
                                                        {"grid", 2, 4},
                                                        {"pgl", 2, 2},
                                                        {"spike", 3, 2},
                                                        {"f2", 2, 3}}) {
        auto fx = make_fixture(name, radius);
        auto expected = powerset_cut_sides(fx.window, k);
        auto got = enumerate_k_cuts(fx.window, fx.window.full_set(), k);
        std::set<Bitset> got_sides;
        for (const auto& c : got) got_sides.insert(c.side);
        CHECK(got_sides == expected);
    }
}

TEST_CASE("enumerate_k_cuts spec examples") {
    auto f2 = make_fixture("f2", 3);
    Bitset seed(f2.window.num_vertices());
    seed.set(f2.window.origin);
    auto cuts = enumerate_k_cuts(f2.window, seed, 1);
    CHECK(cuts.size() == 4); // one per edge at the origin

    auto grid = make_fixture("grid", 4);
    Bitset gseed(grid.window.num_vertices());
    gseed.set(grid.window.origin);
    CHECK(enumerate_k_cuts(grid.window, gseed, 3).empty());
    CHECK(enumerate_k_cuts(grid.window, gseed, 0).empty());

    auto ring = make_fixture("ring", 4);
    Bitset rseed(ring.window.num_vertices());
    rseed.set(ring.window.vertex("c0"));
    auto rcuts = enumerate_k_cuts(ring.window, rseed, 2);
    std::set<Bitset> sides;
    for (const auto& c : rcuts) {
        sides.insert(c.side);
        sides.insert(c.side.complement());
    }
    CHECK(sides.count(ring_side(ring.window, "l", {"c0"})));
    CHECK(sides.count(ring_side(ring.window, "l", {"c0", "c1"})));
    CHECK(sides.count(ring_side(ring.window, "l", {"c0", "c3"})));
}

TEST_CASE("nestedness and corners") {
    auto ring = make_fixture("ring", 4);
    const auto& w = ring.window;
    Cut c = make_cut(w, ring_side(w, "l", {"c0", "c1"}));
    Cut d = make_cut(w, ring_side(w, "l", {"c0", "c3"}));
    CHECK(is_nested(c, c));
    CHECK_FALSE(is_nested(c, d));
    auto quad = corners(c, d);
    CHECK(quad[0] == ring_side(w, "l", {"c0"}));
    CHECK(quad[1] == set_of(w, {"c1"}));
    CHECK(quad[2] == set_of(w, {"c3"}));
    CHECK(quad[3] == ring_side(w, "r", {"c2"}));

    // symmetry in orientation
    Cut cc = cut_complement(w, c);
    CHECK(is_nested(c, d) == is_nested(d, c));
    CHECK(is_nested(c, d) == is_nested(cc, d));

    auto grid = make_fixture("grid", 3);
    Bitset left(grid.window.num_vertices()), bottom(grid.window.num_vertices());
    for (int v = 0; v < grid.window.num_vertices(); ++v) {
        const std::string& id = grid.window.ids[v];
        auto comma = id.find(',');
        long i = std::stol(id.substr(0, comma));
        long j = std::stol(id.substr(comma + 1));
        if (i < 0) left.set(v);
        if (j < 0) bottom.set(v);
    }
    Cut cl = make_cut(grid.window, left);
    Cut cb = make_cut(grid.window, bottom);
    CHECK_FALSE(is_nested(cl, cb));
    for (const auto& corner : corners(cl, cb)) CHECK(corner.any());
}

TEST_CASE("crossing counts") {
    auto f2 = make_fixture("f2", 4);
    CutUniverse fu = build_cut_universe(f2.window, 1);
    CHECK(!fu.cuts.empty());
    for (const auto& c : fu.cuts) CHECK(crossing_count(fu, c) == 0);

    auto ring = make_fixture("ring", 5);
    CutUniverse ru = build_cut_universe(ring.window, 2);
    const auto& w = ring.window;
    Cut c = make_cut(w, ring_side(w, "l", {"c0", "c1"}));
    Cut d = make_cut(w, ring_side(w, "l", {"c0", "c3"}));
    Cut e = make_cut(w, ring_side(w, "l", {"c0"}));
    Cut ep = make_cut(w, ring_side(w, "r", {"c2"}));
    CHECK(crossing_count(ru, c) == 2);
    CHECK(crossing_count(ru, d) == 2);
    CHECK(crossing_count(ru, e) == 0);
    CHECK(crossing_count(ru, ep) == 0);
    // complement invariance
    CHECK(crossing_count(ru, cut_complement(w, c)) == 2);
    // the corner inequality, frozen from this exhaustive 2-cut enumeration
    CHECK(crossing_count(ru, e) + crossing_count(ru, ep) <
          crossing_count(ru, c) + crossing_count(ru, d));
}

TEST_CASE("splitting rays") {
    auto spike = make_fixture("spike", 6);
    CutUniverse su = build_cut_universe(spike.window, 2);
    const auto& alpha = spike.named_rays[0];
    const auto& beta = spike.named_rays[1];
    auto alpha_min = min_weight_splitters(su, alpha, 3);
    REQUIRE(!alpha_min.empty());
    CHECK(alpha_min.front().weight == 1);
    auto beta_min = min_weight_splitters(su, beta, 3);
    REQUIRE(!beta_min.empty());
    CHECK(beta_min.front().weight == 2);

    for (int radius : {4, 5, 6, 7}) {
        auto grid = make_fixture("grid", radius);
        for (int k = 1; k <= 4; ++k) {
            CutUniverse gu = build_cut_universe(grid.window, k);
            for (const auto& ray : grid.named_rays)
                CHECK(cuts_splitting_ray(gu, ray, 3).empty());
        }
    }
}

TEST_CASE("optimal cuts") {
    auto pgl = make_fixture("pgl", 4);
    CutUniverse pu = build_cut_universe(pgl.window, 1);
    auto rays = fixture_rays(pgl);
    auto opt = optimal_cuts(pu, rays, 3);
    REQUIRE(!opt.empty());
    const auto& w = pgl.window;
    for (const auto& c : opt) {
        CHECK(c.weight == 1);
        // the single boundary edge joins g and g*a
        auto [u, v] = c.boundary_edges.front();
        NormalForm diff = w.oracle->multiply(w.oracle->inverse(w.element[u]), w.element[v]);
        CHECK(w.oracle->name_of(diff) == "a");
    }

    auto ring = make_fixture("ring", 5);
    CutUniverse ru = build_cut_universe(ring.window, 2);
    auto ring_opt = optimal_cuts(ru, fixture_rays(ring), 3);
    REQUIRE(!ring_opt.empty());
    for (const auto& c : ring_opt) {
        CHECK(c.weight == 1); // ray-tail cuts beat the weight-2 cycle cuts
        CHECK(crossing_count(ru, c) == 0);
    }

    auto zz2 = make_fixture("zz2", 5);
    CutUniverse zu = build_cut_universe(zz2.window, 2);
    auto zz2_opt = optimal_cuts(zu, fixture_rays(zz2), 3);
    std::set<int> weights;
    for (const auto& c : zz2_opt) weights.insert(c.weight);
    CHECK(weights == std::set<int>{1, 2});
}

TEST_CASE("weight bound selection") {
    for (const auto& [name, expected] : std::vector<std::pair<std::string, int>>{
             {"f2", 1}, {"pgl", 1}, {"dinf", 2}, {"zz2", 2}, {"spike", 2}}) {
        auto fx = make_fixture(name, 5);
        CHECK(choose_weight_bound(fx.window, fixture_rays(fx), 3, 4) == expected);
    }
}
