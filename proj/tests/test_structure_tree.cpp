#include <doctest.h>

#include <map>
#include <set>

#include "structree/fixtures.hpp"
#include "structree/structure_tree.hpp"

using namespace structree;

namespace {

struct Pipeline {
    Fixture fixture;
    CutUniverse universe;
    std::vector<RayPair> rays;
    TreeSet family;

    Pipeline(const std::string& name, int radius, int weight_bound)
        : fixture(make_fixture(name, radius)),
          universe(build_cut_universe(fixture.window, weight_bound)),
          rays(fixture_rays(fixture)),
          family(optimal_tree_set(universe, rays, 3)) {}
};

// boundary edges as id pairs, a radius-independent key for a cut
std::set<std::pair<std::string, std::string>> boundary_key(const GraphWindow& w,
                                                           const Cut& c) {
    std::set<std::pair<std::string, std::string>> key;
    for (auto [u, v] : c.boundary_edges) {
        std::string a = w.ids[u], b = w.ids[v];
        if (b < a) std::swap(a, b);
        key.insert({a, b});
    }
    return key;
}

} // namespace

TEST_CASE("related on the free group window") {
    Pipeline p("f2", 5, 1);
    const auto& ts = p.family;
    REQUIRE(ts.pair_count() > 0);
    CHECK(related(ts, 0, 0));

    // the four cuts whose sides contain the origin, one per origin edge,
    // are pairwise related
    std::vector<int> at_origin;
    for (int c = 0; c < static_cast<int>(ts.cuts.size()); ++c) {
        if (!ts.cuts[c].side.test(p.fixture.window.origin)) continue;
        bool incident = false;
        for (int v : ts.cuts[c].boundary_vertices) incident |= v == p.fixture.window.origin;
        if (incident) at_origin.push_back(c);
    }
    REQUIRE(at_origin.size() == 4);
    for (int c : at_origin)
        for (int d : at_origin) CHECK(related(ts, c, d));
    // opposite orientations are not related
    CHECK_FALSE(related(ts, at_origin[0], ts.complement_of(at_origin[0])));
}

TEST_CASE("equivalence classes") {
    Pipeline f2("f2", 5, 1);
    auto classes = equivalence_classes(f2.family);
    std::map<int, int> closed_sizes;
    for (const auto& cls : classes)
        if (!cls.open) closed_sizes[static_cast<int>(cls.members.size())]++;
    REQUIRE(!closed_sizes.empty());
    CHECK(closed_sizes.size() == 1);
    CHECK(closed_sizes.begin()->first == 4); // one class per group element

    Pipeline pgl("pgl", 5, 1);
    auto pgl_classes = equivalence_classes(pgl.family);
    std::map<int, int> pgl_closed;
    for (const auto& cls : pgl_classes)
        if (!cls.open) pgl_closed[static_cast<int>(cls.members.size())]++;
    REQUIRE(!pgl_closed.empty());
    CHECK(pgl_closed.size() == 1);
    CHECK(pgl_closed.begin()->first == 3); // one class per b-triangle
}

TEST_CASE("singleton pair gives a two-class tree") {
    auto ring = make_fixture("ring", 4);
    const auto& w = ring.window;
    Bitset side(w.num_vertices());
    for (int v = 0; v < w.num_vertices(); ++v)
        if (w.ids[v][0] == 'l') side.set(v);
    side.set(w.vertex("c0"));
    Cut c = make_cut(w, side);
    Cut canonical = side.test(0) ? c : cut_complement(w, c);
    TreeSet ts = make_tree_set(w, {canonical});
    auto classes = equivalence_classes(ts);
    CHECK(classes.size() == 2);
    StructureTree tree = build_structure_tree(ts);
    CHECK(tree.classes.size() == 2);
    CHECK(tree.edges.size() == 1);
}

TEST_CASE("structure trees are trees on every fixture") {
    for (const auto& [name, k] : std::vector<std::pair<std::string, int>>{
             {"f2", 1}, {"pgl", 1}, {"dinf", 2}, {"ring", 2}, {"zz2", 2},
             {"gridz2", 1}, {"spike", 2}}) {
        for (int radius : {4, 5}) {
            Pipeline p(name, radius, k);
            if (p.family.cuts.empty()) continue;
            StructureTree tree = build_structure_tree(p.family);
            CHECK(tree.edges.size() + 1 == tree.classes.size());
        }
    }
}

TEST_CASE("non-nested family is rejected") {
    auto ring = make_fixture("ring", 4);
    const auto& w = ring.window;
    auto side_with = [&](std::vector<std::string> extra) {
        Bitset side(w.num_vertices());
        for (int v = 0; v < w.num_vertices(); ++v)
            if (w.ids[v][0] == 'l') side.set(v);
        for (const auto& id : extra) side.set(w.vertex(id));
        return side;
    };
    Cut c = make_cut(w, side_with({"c0", "c1"}));
    Cut d = make_cut(w, side_with({"c0", "c3"}));
    CHECK_THROWS_AS((void)make_tree_set(w, {c, d}), error);
}

TEST_CASE("block radius") {
    Pipeline pgl("pgl", 5, 1);
    CHECK(compute_block_radius(pgl.family).value == 1);
    Pipeline f2("f2", 5, 1);
    CHECK(compute_block_radius(f2.family).value == 1);
    Pipeline ring("ring", 5, 2);
    CHECK(compute_block_radius(ring.family).value == 1);
}

TEST_CASE("blocks") {
    Pipeline pgl("pgl", 5, 1);
    auto classes = equivalence_classes(pgl.family);
    int radius = compute_block_radius(pgl.family).value;
    bool found_triangle_block = false;
    for (int k = 0; k < static_cast<int>(classes.size()); ++k) {
        if (classes[k].open || classes[k].members.size() != 3) continue;
        Block b = block_of_class(pgl.family, classes, k, radius);
        CHECK(b.vertices.count() == 6);
        found_triangle_block = true;
    }
    CHECK(found_triangle_block);

    Pipeline f2("f2", 5, 1);
    auto f2_classes = equivalence_classes(f2.family);
    int f2_radius = compute_block_radius(f2.family).value;
    bool found_f2_block = false;
    for (int k = 0; k < static_cast<int>(f2_classes.size()); ++k) {
        if (f2_classes[k].open) continue;
        Block b = block_of_class(f2.family, f2_classes, k, f2_radius);
        CHECK(b.vertices.count() == 5); // the element and its four neighbors
        found_f2_block = true;
    }
    CHECK(found_f2_block);
}

TEST_CASE("block end estimates") {
    // closed classes on tree-like fixtures have finite blocks: zero ends
    for (const auto& [name, k] : std::vector<std::pair<std::string, int>>{
             {"f2", 1}, {"pgl", 1}, {"dinf", 2}}) {
        Pipeline p(name, 5, k);
        auto classes = equivalence_classes(p.family);
        int radius = compute_block_radius(p.family).value;
        for (int i = 0; i < static_cast<int>(classes.size()); ++i) {
            if (classes[i].open) continue;
            Block b = block_of_class(p.family, classes, i, radius);
            EndEstimate est = block_end_estimate(p.fixture.window, b, {2, 3});
            CHECK(est.ends == 0);
            CHECK(est.stable);
        }
    }

    // the plane class of (Z x Z) * Z/2 is open; its window block is the plane
    // plus pendant involution tips, with exactly one end
    Pipeline gz("gridz2", 5, 1);
    auto classes = equivalence_classes(gz.family);
    int radius = compute_block_radius(gz.family).value;
    int plane_class = -1;
    std::size_t best = 0;
    for (int i = 0; i < static_cast<int>(classes.size()); ++i) {
        std::size_t size = classes[i].members.size() + classes[i].extensions.size();
        if (size > best) {
            best = size;
            plane_class = i;
        }
    }
    REQUIRE(plane_class >= 0);
    CHECK(classes[plane_class].open);
    Block plane = block_of_class(gz.family, classes, plane_class, radius);
    EndEstimate est = block_end_estimate(gz.fixture.window, plane, {1, 2, 3});
    CHECK(est.ends == 1);
    CHECK(est.stable);
}

TEST_CASE("classes at one radius embed into the next") {
    for (const auto& name : {"f2", "pgl"}) {
        Pipeline small(name, 4, 1);
        Pipeline big(name, 5, 1);
        auto small_classes = equivalence_classes(small.family);
        auto big_classes = equivalence_classes(big.family);
        // match cuts across radii by their boundary-edge id sets
        std::map<std::set<std::pair<std::string, std::string>>, int> big_class_of;
        for (int i = 0; i < static_cast<int>(big_classes.size()); ++i)
            for (int m : big_classes[i].members) {
                const Cut& c = big.family.cuts[m];
                if (c.side.test(big.fixture.window.vertex("1")))
                    big_class_of[boundary_key(big.fixture.window, c)] = i;
            }
        for (const auto& cls : small_classes) {
            if (cls.open) continue;
            std::set<int> targets;
            for (int m : cls.members) {
                const Cut& c = small.family.cuts[m];
                if (!c.side.test(small.fixture.window.vertex("1"))) continue;
                auto key = boundary_key(small.fixture.window, c);
                auto it = big_class_of.find(key);
                if (it != big_class_of.end()) targets.insert(it->second);
            }
            CHECK(targets.size() <= 1); // classmates stay classmates
        }
    }
}
