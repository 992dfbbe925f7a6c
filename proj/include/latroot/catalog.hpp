#pragma once

// Built-in fans: projective spaces, products, Hirzebruch surfaces and the
// five-ray smooth complete surface.

#include <cstddef>
#include <string>
#include <vector>

#include "latroot/errors.hpp"
#include "latroot/fan.hpp"
#include "latroot/integers.hpp"

namespace latroot {

// Rays e_1..e_n and -(e_1+..+e_n); maximal cones omit one ray each.
inline Fan projective_space_fan(std::size_t n) {
    std::vector<IntVec> rays;
    for (std::size_t i = 0; i < n; ++i) {
        IntVec e(n, Int(0));
        e[i] = 1;
        rays.push_back(e);
    }
    rays.push_back(IntVec(n, Int(-1)));
    std::vector<std::vector<std::size_t>> cones;
    for (std::size_t omit = 0; omit <= n; ++omit) {
        std::vector<std::size_t> cone;
        for (std::size_t i = 0; i <= n; ++i)
            if (i != omit) cone.push_back(i);
        cones.push_back(cone);
    }
    return Fan(n, rays, cones);
}

inline Fan product_cp1_cp1_fan() {
    std::vector<IntVec> rays = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return Fan(2, rays, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

inline Fan product_cp1_cp2_fan() {
    std::vector<IntVec> rays = {
        {1, 0, 0}, {-1, 0, 0},             // the line factor
        {0, 1, 0}, {0, 0, 1}, {0, -1, -1}  // the plane factor
    };
    std::vector<std::vector<std::size_t>> cones;
    for (std::size_t a : {0, 1})
        for (std::size_t omit : {2, 3, 4}) {
            std::vector<std::size_t> cone = {a};
            for (std::size_t i : {2, 3, 4})
                if (i != omit) cone.push_back(i);
            cones.push_back(cone);
        }
    return Fan(3, rays, cones);
}

inline Fan hirzebruch_fan(std::size_t k) {
    std::vector<IntVec> rays = {{1, 0}, {0, 1}, {-1, Int(k)}, {0, -1}};
    return Fan(2, rays, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

// Smooth complete surface on five rays; consecutive ray pairs are bases.
inline Fan pentagon_fan() {
    std::vector<IntVec> rays = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}};
    return Fan(2, rays, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
}

inline const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "cp1",         "cp2",         "cp3",         "cp4",        "cp5",
        "cp1xcp1",     "cp1xcp2",     "hirzebruch0", "hirzebruch1", "hirzebruch2",
        "hirzebruch3", "pentagon"};
    return names;
}

inline bool is_catalog_name(const std::string& name) {
    for (const std::string& n : catalog_names())
        if (n == name) return true;
    return false;
}

inline Fan catalog_fan(const std::string& name) {
    if (name == "cp1") return projective_space_fan(1);
    if (name == "cp2") return projective_space_fan(2);
    if (name == "cp3") return projective_space_fan(3);
    if (name == "cp4") return projective_space_fan(4);
    if (name == "cp5") return projective_space_fan(5);
    if (name == "cp1xcp1") return product_cp1_cp1_fan();
    if (name == "cp1xcp2") return product_cp1_cp2_fan();
    if (name == "hirzebruch0") return hirzebruch_fan(0);
    if (name == "hirzebruch1") return hirzebruch_fan(1);
    if (name == "hirzebruch2") return hirzebruch_fan(2);
    if (name == "hirzebruch3") return hirzebruch_fan(3);
    if (name == "pentagon") return pentagon_fan();
    throw InputError("unknown catalog fan '" + name + "'");
}

// Subdivide the maximal cone {i, j} of a rank-2 fan at the ray v_i + v_j.
// Keeps the fan smooth and complete; used to grow surface fans.
inline Fan blow_up_corner(const Fan& f, std::size_t i, std::size_t j) {
    if (f.rank() != 2) throw InputError("corner subdivision requires a rank-2 fan");
    std::vector<std::size_t> target = {std::min(i, j), std::max(i, j)};
    std::vector<IntVec> rays = f.rays();
    IntVec fresh(2);
    fresh[0] = rays[i][0] + rays[j][0];
    fresh[1] = rays[i][1] + rays[j][1];
    std::size_t fresh_idx = rays.size();
    rays.push_back(fresh);
    std::vector<std::vector<std::size_t>> cones;
    bool found = false;
    for (const auto& cone : f.max_cones()) {
        if (cone == target) {
            cones.push_back({target[0], fresh_idx});
            cones.push_back({target[1], fresh_idx});
            found = true;
        } else {
            cones.push_back(cone);
        }
    }
    if (!found) throw InputError("no maximal cone on rays " + detail::format_indices(target));
    return Fan(2, rays, cones);
}

}  // namespace latroot
