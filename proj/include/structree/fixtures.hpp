#pragma once

#include <string>
#include <vector>

#include "structree/window.hpp"

namespace structree {

// A ready-to-run window with canonical rays and a sensible cut-weight bound.
struct Fixture {
    std::string name;
    GraphWindow window;
    std::vector<RayPair> named_rays;
    int default_weight_bound = 1;
};

// Known fixtures: f2, dinf, pgl, zz2, gridz2 (Cayley windows) and
// grid, spike, ring (coordinate-generated windows).
std::vector<std::string> fixture_names();

Fixture make_fixture(const std::string& name, int radius);

// Named plus generated rays, deduplicated, canonical order.
std::vector<RayPair> fixture_rays(const Fixture& fixture);

} // namespace structree
