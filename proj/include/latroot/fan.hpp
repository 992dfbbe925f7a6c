#pragma once

// Complete non-singular simplicial fans and their symmetry analysis.
// A fan is the pair (simplicial complex on [m], primitive ray vectors);
// validation checks primitivity, unimodularity of every maximal cone and
// the wall condition: every wall lies in exactly two maximal cones whose
// opposite rays sit strictly on opposite sides of the wall hyperplane.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "latroot/classify.hpp"
#include "latroot/configuration.hpp"
#include "latroot/errors.hpp"
#include "latroot/integers.hpp"
#include "latroot/matrix.hpp"
#include "latroot/root_system.hpp"

namespace latroot {

namespace detail {

inline std::string format_indices(const std::vector<std::size_t>& idx) {
    std::string s = "{";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(idx[i] + 1);  // 1-based for humans
    }
    return s + "}";
}

}  // namespace detail

class Fan {
public:
    // `max_cones` uses 0-based ray indices; every cone has exactly `rank`
    // of them. Throws when any fan axiom checked here fails.
    Fan(std::size_t rank, std::vector<IntVec> rays,
        std::vector<std::vector<std::size_t>> max_cones)
        : rank_(rank), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
        validate();
    }

    std::size_t rank() const { return rank_; }
    std::size_t ray_count() const { return rays_.size(); }
    const std::vector<IntVec>& rays() const { return rays_; }
    const IntVec& ray(std::size_t i) const { return rays_[i]; }
    const std::vector<std::vector<std::size_t>>& max_cones() const { return max_cones_; }

    bool is_face(const std::vector<std::size_t>& sigma) const {
        for (const auto& cone : max_cones_)
            if (std::includes(cone.begin(), cone.end(), sigma.begin(), sigma.end())) return true;
        return false;
    }

    VectorConfiguration configuration() const {
        return VectorConfiguration(rank_, rays_);
    }

private:
    void validate() {
        const std::size_t n = rank_, m = rays_.size();
        if (n == 0) throw InputError("fan rank must be positive");
        if (m == 0) throw InputError("fan has no rays");
        for (std::size_t i = 0; i < m; ++i) {
            if (rays_[i].size() != n)
                throw InputError("ray " + std::to_string(i + 1) + " has length " +
                                 std::to_string(rays_[i].size()) + ", expected " +
                                 std::to_string(n));
            if (is_zero(rays_[i]))
                throw NonPrimitiveRayError("ray " + std::to_string(i + 1) + " is zero");
            Int g = 0;
            for (const Int& x : rays_[i]) g = gcd(g, x);
            if (g != 1)
                throw NonPrimitiveRayError("ray " + std::to_string(i + 1) + " = " +
                                           format_vector(rays_[i]) + " has coordinate gcd " +
                                           g.get_str());
        }

        if (max_cones_.empty()) throw InputError("fan has no maximal cones");
        for (auto& cone : max_cones_) {
            if (cone.size() != n)
                throw InputError("maximal cone " + detail::format_indices(cone) + " has " +
                                 std::to_string(cone.size()) + " rays, expected " +
                                 std::to_string(n));
            std::sort(cone.begin(), cone.end());
            if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
                throw InputError("maximal cone " + detail::format_indices(cone) +
                                 " repeats a ray");
            for (std::size_t i : cone)
                if (i >= m)
                    throw InputError("cone index " + std::to_string(i + 1) + " out of range");
        }
        std::sort(max_cones_.begin(), max_cones_.end());
        if (std::adjacent_find(max_cones_.begin(), max_cones_.end()) != max_cones_.end())
            throw InputError("duplicate maximal cone");

        // non-singularity: the rays of each maximal cone form a lattice basis
        for (const auto& cone : max_cones_) {
            std::vector<IntVec> rows;
            for (std::size_t i : cone) rows.push_back(rays_[i]);
            Int det = determinant(IntegerMatrix(rows));
            if (det != 1 && det != -1)
                throw SingularConeError("cone " + detail::format_indices(cone) +
                                        " has determinant " + det.get_str());
        }

        std::vector<bool> used(m, false);
        for (const auto& cone : max_cones_)
            for (std::size_t i : cone) used[i] = true;
        for (std::size_t i = 0; i < m; ++i)
            if (!used[i])
                throw NotCompleteError("ray " + std::to_string(i + 1) +
                                       " lies in no maximal cone");

        // wall condition
        std::map<std::vector<std::size_t>, std::vector<std::size_t>> wall_opposite;
        for (const auto& cone : max_cones_)
            for (std::size_t drop = 0; drop < n; ++drop) {
                std::vector<std::size_t> wall;
                for (std::size_t i = 0; i < n; ++i)
                    if (i != drop) wall.push_back(cone[i]);
                wall_opposite[wall].push_back(cone[drop]);
            }
        for (const auto& [wall, opposite] : wall_opposite) {
            if (opposite.size() != 2)
                throw NotCompleteError("wall " + detail::format_indices(wall) + " lies in " +
                                       std::to_string(opposite.size()) +
                                       " maximal cones, expected 2");
            IntVec normal = wall_normal(wall);
            Int s0 = dot(normal, rays_[opposite[0]]);
            Int s1 = dot(normal, rays_[opposite[1]]);
            if (s0 == 0 || s1 == 0 || sgn(s0) == sgn(s1))
                throw NotCompleteError("rays " + std::to_string(opposite[0] + 1) + " and " +
                                       std::to_string(opposite[1] + 1) +
                                       " do not lie strictly on opposite sides of wall " +
                                       detail::format_indices(wall));
        }
    }

    // primitive normal of the hyperplane spanned by the wall's rays
    IntVec wall_normal(const std::vector<std::size_t>& wall) const {
        if (wall.empty()) {
            IntVec e(rank_, Int(0));
            e[0] = 1;
            return e;
        }
        std::vector<IntVec> rows;
        for (std::size_t i : wall) rows.push_back(rays_[i]);
        auto sol = solve_diophantine(IntegerMatrix(rows), IntVec(wall.size(), Int(0)));
        if (!sol || sol->kernel.size() != 1)
            throw InternalError("wall rays do not span a corank-one sublattice");
        return sol->kernel.front();
    }

    std::size_t rank_;
    std::vector<IntVec> rays_;
    std::vector<std::vector<std::size_t>> max_cones_;
};

inline VectorConfiguration fan_configuration(const Fan& f) { return f.configuration(); }

// Root system of the fan's ray configuration; with a sign assignment, the
// signed variant over the flipped rays.
inline RootSystem fan_roots(const Fan& f, const std::optional<SignAssignment>& omega = {}) {
    VectorConfiguration v = f.configuration();
    if (!omega) return compute_roots(v);
    return compute_signed_roots(v, *omega);
}

// Inclusion-minimal index sets that are not faces of the fan's simplicial
// complex. Candidates never exceed rank+1 elements: all proper subsets must
// be faces, and faces have at most `rank` elements.
inline std::vector<std::vector<std::size_t>> minimal_nonfaces(const Fan& f) {
    const std::size_t m = f.ray_count(), n = f.rank();
    std::vector<std::vector<std::size_t>> result;
    std::set<std::vector<std::size_t>> known_nonfaces;

    std::vector<std::size_t> comb;
    auto enumerate = [&](auto&& self, std::size_t start, std::size_t k) -> void {
        if (comb.size() == k) {
            bool proper_subsets_are_faces = true;
            for (std::size_t drop = 0; drop < k && proper_subsets_are_faces; ++drop) {
                std::vector<std::size_t> sub;
                for (std::size_t i = 0; i < k; ++i)
                    if (i != drop) sub.push_back(comb[i]);
                if (known_nonfaces.count(sub)) proper_subsets_are_faces = false;
            }
            if (!f.is_face(comb)) {
                known_nonfaces.insert(comb);
                if (proper_subsets_are_faces) result.push_back(comb);
            }
            return;
        }
        for (std::size_t i = start; i < m; ++i) {
            comb.push_back(i);
            self(self, i + 1, k);
            comb.pop_back();
        }
    };
    for (std::size_t k = 2; k <= std::min(n + 1, m); ++k) enumerate(enumerate, 0, k);
    return result;
}

// The invariance criterion behind the coordinate-subgroup action: every
// minimal non-face contains both support indices of the root or neither.
inline bool nonfaces_respect_support(const Fan& f, const Root& alpha) {
    RootSystem roots = fan_roots(f);
    const Root* found = roots.find(alpha.alpha);
    if (!found || found->pairing != alpha.pairing)
        throw InputError(format_vector(alpha.alpha) + " is not a root of the fan");
    std::vector<std::size_t> supp = found->support();
    if (supp.size() != 2)
        throw InputError("root " + format_vector(alpha.alpha) + " is not two-index");
    for (const auto& nonface : minimal_nonfaces(f)) {
        bool has_i = std::binary_search(nonface.begin(), nonface.end(), supp[0]);
        bool has_j = std::binary_search(nonface.begin(), nonface.end(), supp[1]);
        if (has_i != has_j) return false;
    }
    return true;
}

// Secondary completeness oracle: every lattice point of the box
// [-radius, radius]^n must lie in some maximal cone. Over a unimodular cone
// the coefficients of an integer point are themselves integers, so the
// point-location test is exact. Returns the first uncovered point, if any.
// This samples; the wall condition in the validator is the real check.
inline std::optional<IntVec> uncovered_grid_point(const Fan& f, long radius) {
    const std::size_t n = f.rank();
    std::vector<IntegerMatrix> cone_columns;
    for (const auto& cone : f.max_cones()) {
        std::vector<IntVec> rows;
        for (std::size_t i : cone) rows.push_back(f.ray(i));
        cone_columns.push_back(IntegerMatrix(rows).transposed());
    }
    IntVec point(n, Int(-radius));
    while (true) {
        bool covered = false;
        for (const IntegerMatrix& cols : cone_columns) {
            auto sol = solve_diophantine(cols, point);
            if (!sol) continue;
            bool nonneg = true;
            for (const Int& c : sol->particular)
                if (c < 0) { nonneg = false; break; }
            if (nonneg) { covered = true; break; }
        }
        if (!covered) return point;
        std::size_t d = 0;
        while (d < n && point[d] == radius) point[d++] = -radius;
        if (d == n) return std::nullopt;
        ++point[d];
    }
}

struct PartitionReport {
    std::vector<std::vector<std::size_t>> classes;  // partition of 0..m-1, sorted
    std::vector<std::size_t> factor_ranks;          // |class| - 1; 0 means no factor
};

// Orbit partition of the ray indices under the reflections of the fan's
// roots: each two-index root swaps its two support rays, so classes are the
// connected components of the support graph.
inline PartitionReport reflection_partition(const Fan& f) {
    const std::size_t m = f.ray_count();
    std::vector<std::size_t> parent(m);
    for (std::size_t i = 0; i < m; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Root& r : fan_roots(f).roots) {
        std::vector<std::size_t> supp = r.support();
        if (supp.size() == 2) parent[find(supp[0])] = find(supp[1]);
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < m; ++i) groups[find(i)].push_back(i);

    PartitionReport rep;
    for (auto& [rep_idx, members] : groups) {
        std::sort(members.begin(), members.end());
        rep.classes.push_back(members);
    }
    std::sort(rep.classes.begin(), rep.classes.end());
    for (const auto& cls : rep.classes) rep.factor_ranks.push_back(cls.size() - 1);
    return rep;
}

struct SymmetryReport {
    RootSystem roots;                    // standard (unsigned) roots
    ClassificationReport classification;
    PartitionReport partition;
    bool identity_holds = false;         // components match the partition factors
    std::string identity_detail;

    std::optional<RootSystem> signed_roots;
    std::optional<ClassificationReport> signed_classification;
    bool signed_subset = true;  // signed roots are a subset of the unsigned ones

    explicit SymmetryReport(RootSystem r) : roots(std::move(r)) {}
};

namespace detail {

// The structural identity: components of the root system correspond one to
// one with partition classes of size >= 2, each of type A with rank
// |class| - 1, and every root's support stays inside its class.
inline bool check_partition_identity(const ClassificationReport& cls, const PartitionReport& part,
                                     std::string& detail) {
    std::vector<std::size_t> expected;  // ranks from classes of size >= 2
    for (const auto& c : part.classes)
        if (c.size() >= 2) expected.push_back(c.size() - 1);
    std::sort(expected.begin(), expected.end());

    std::vector<std::size_t> got;
    for (const auto& comp : cls.components) {
        if (comp.label.family != Family::A) {
            detail = "component " + comp.label.str() + " is not of type A";
            return false;
        }
        got.push_back(comp.label.rank);
        // supports of the component roots must fill exactly one class
        std::set<std::size_t> indices;
        for (const Root& r : comp.roots)
            for (std::size_t i : r.support()) indices.insert(i);
        std::vector<std::size_t> sorted(indices.begin(), indices.end());
        bool matched = false;
        for (const auto& c : part.classes)
            if (c == sorted) matched = true;
        if (!matched) {
            detail = "supports of component " + comp.label.str() + " do not form a class";
            return false;
        }
    }
    std::sort(got.begin(), got.end());
    if (got != expected) {
        detail = "component ranks do not match class sizes";
        return false;
    }
    detail.clear();
    return true;
}

}  // namespace detail

// Full symmetry analysis of a fan: roots, their classification, the orbit
// partition, the product-of-type-A identity, and (optionally) the signed
// variant for a sign assignment.
inline SymmetryReport symmetry_report(const Fan& f,
                                      const std::optional<SignAssignment>& omega = {}) {
    SymmetryReport rep{fan_roots(f)};
    rep.partition = reflection_partition(f);
    rep.classification = classify_system(rep.roots);
    rep.identity_holds =
        detail::check_partition_identity(rep.classification, rep.partition, rep.identity_detail);

    if (omega) {
        rep.signed_roots = fan_roots(f, omega);
        rep.signed_classification = classify_system(*rep.signed_roots);
        for (const Root& r : rep.signed_roots->roots)
            if (!rep.roots.contains(r.alpha)) rep.signed_subset = false;
    }
    return rep;
}

}  // namespace latroot
