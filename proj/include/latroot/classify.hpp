#pragma once

// Decomposition of a root system into irreducible components and their
// classification into the classical families. Two routes are kept: a
// Dynkin-diagram shape match on the Cartan matrix, and the type-1 /
// conjugate-pair criteria available whenever the roots carry pairing
// pattern data. On any genuine system both must agree; disagreement is a
// library bug, not a data error.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "latroot/errors.hpp"
#include "latroot/integers.hpp"
#include "latroot/matrix.hpp"
#include "latroot/root_system.hpp"

namespace latroot {

enum class Family { A, B, C, D };

inline char family_letter(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
        case Family::D: return 'D';
    }
    return '?';
}

struct TypeLabel {
    Family family;
    std::size_t rank;

    std::string str() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

    friend bool operator==(const TypeLabel& a, const TypeLabel& b) {
        return a.family == b.family && a.rank == b.rank;
    }
    friend bool operator!=(const TypeLabel& a, const TypeLabel& b) { return !(a == b); }
};

// Connected components under the non-orthogonality relation. Negation pairs
// land in one component automatically since (alpha, -alpha) < 0.
inline std::vector<std::vector<Root>> components(const std::vector<Root>& roots) {
    const std::size_t n = roots.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (dot(roots[i].pairing, roots[j].pairing) != 0) parent[find(i)] = find(j);

    std::vector<std::vector<Root>> comps;
    std::vector<std::size_t> comp_of_rep(n, SIZE_MAX);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t rep = find(i);
        if (comp_of_rep[rep] == SIZE_MAX) {
            comp_of_rep[rep] = comps.size();
            comps.emplace_back();
        }
        comps[comp_of_rep[rep]].push_back(roots[i]);
    }
    std::sort(comps.begin(), comps.end(),
              [](const std::vector<Root>& a, const std::vector<Root>& b) {
                  return a.front().alpha < b.front().alpha;
              });
    return comps;
}

inline std::vector<std::vector<Root>> components(const RootSystem& r) {
    return components(r.roots);
}

// Generic positivity functional w = (1, B, B^2, ...) with B large enough
// that base-B digits of any root are its coordinates; then <alpha, w> != 0
// for every root, with no randomness involved.
inline IntVec positivity_functional(const std::vector<Root>& roots) {
    if (roots.empty()) return {};
    const std::size_t n = roots.front().alpha.size();
    Int maxc = 0;
    for (const Root& r : roots)
        for (const Int& x : r.alpha) {
            Int a = abs(x);
            if (a > maxc) maxc = a;
        }
    Int b = 2 * maxc + 1;
    IntVec w(n);
    Int p = 1;
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = p;
        p *= b;
    }
    return w;
}

// Simple roots of one irreducible component: positive roots (under the
// generic functional) that are not sums of two positive roots.
inline std::vector<Root> simple_roots(const std::vector<Root>& component) {
    if (component.empty()) return {};
    IntVec w = positivity_functional(component);
    std::vector<Root> positives;
    std::vector<IntVec> positive_alphas;
    for (const Root& r : component) {
        Int h = dot(r.alpha, w);
        if (h == 0) throw InternalError("positivity functional vanished on a root");
        if (h > 0) positives.push_back(r);
    }
    for (const Root& r : positives) positive_alphas.push_back(r.alpha);
    std::sort(positive_alphas.begin(), positive_alphas.end());
    auto is_positive = [&](const IntVec& a) {
        return std::binary_search(positive_alphas.begin(), positive_alphas.end(), a);
    };

    std::vector<Root> simple;
    for (const Root& cand : positives) {
        bool decomposable = false;
        for (const Root& beta : positives) {
            if (beta.alpha == cand.alpha) continue;
            IntVec gamma(cand.alpha.size());
            for (std::size_t i = 0; i < gamma.size(); ++i)
                gamma[i] = cand.alpha[i] - beta.alpha[i];
            if (is_positive(gamma)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple.push_back(cand);
    }
    std::sort(simple.begin(), simple.end());

    std::vector<IntVec> alphas;
    for (const Root& r : component) alphas.push_back(r.alpha);
    if (simple.size() != rank(IntegerMatrix(alphas)))
        throw InternalError("simple root count differs from component rank");
    return simple;
}

// Cartan matrix over the given simple roots: entry (i, j) = a_{s_i, s_j}.
inline IntegerMatrix cartan_matrix(const std::vector<Root>& simple) {
    const std::size_t k = simple.size();
    IntegerMatrix c(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            c(i, j) = cartan_integer(simple[i], simple[j]);
            if (i == j && c(i, j) != 2) throw InternalError("Cartan diagonal entry is not 2");
            if (i != j && c(i, j) > 0)
                throw InternalError("positive off-diagonal Cartan entry between simple roots");
        }
    return c;
}

// Label a component from the shape of its Cartan matrix: vertex degrees,
// edge multiplicities and arrow direction. `min_norm2` is the smallest
// squared root length in the component; it settles the rank-2 double-bond
// tie, where unit-length short roots mean B and doubled systems mean C.
inline TypeLabel label_from_cartan(const IntegerMatrix& cartan, const Int& min_norm2) {
    const std::size_t k = cartan.rows();
    if (k == 0) throw InputError("cannot label an empty component");
    if (k == 1) return {Family::A, 1};

    struct Edge {
        std::size_t u, v;
        long weight;
    };
    std::vector<Edge> edges;
    std::vector<std::size_t> degree(k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            bool ij = cartan(i, j) != 0, ji = cartan(j, i) != 0;
            if (ij != ji) throw InternalError("one-sided Cartan adjacency");
            if (!ij) continue;
            Int w = cartan(i, j) * cartan(j, i);
            if (w > 2)
                throw UnexpectedTypeError("edge multiplicity " + w.get_str() +
                                          " is outside the A/B/C/D catalog");
            edges.push_back({i, j, w.get_si()});
            ++degree[i];
            ++degree[j];
        }

    // component diagrams must be connected trees
    if (edges.size() != k - 1)
        throw UnexpectedTypeError("diagram with " + std::to_string(edges.size()) +
                                  " edges on " + std::to_string(k) + " vertices is not a tree");
    {
        std::vector<std::size_t> parent(k);
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const Edge& e : edges) parent[find(e.u)] = find(e.v);
        for (std::size_t i = 1; i < k; ++i)
            if (find(i) != find(0)) throw InternalError("disconnected diagram inside a component");
    }

    std::size_t doubles = 0;
    for (const Edge& e : edges)
        if (e.weight == 2) ++doubles;

    if (doubles == 0) {
        std::size_t branch = SIZE_MAX;
        for (std::size_t i = 0; i < k; ++i) {
            if (degree[i] >= 4)
                throw UnexpectedTypeError("vertex of degree " + std::to_string(degree[i]) +
                                          " is outside the A/B/C/D catalog");
            if (degree[i] == 3) {
                if (branch != SIZE_MAX)
                    throw UnexpectedTypeError("two branch vertices are outside the catalog");
                branch = i;
            }
        }
        if (branch == SIZE_MAX) return {Family::A, k};

        // arm lengths from the branch vertex; D needs two arms of length 1
        std::vector<std::vector<std::size_t>> adj(k);
        for (const Edge& e : edges) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        std::vector<std::size_t> arms;
        for (std::size_t start : adj[branch]) {
            std::size_t len = 1, prev = branch, cur = start;
            while (true) {
                std::size_t next = SIZE_MAX;
                for (std::size_t nb : adj[cur])
                    if (nb != prev) next = nb;
                if (next == SIZE_MAX) break;
                prev = cur;
                cur = next;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1) return {Family::D, k};
        throw UnexpectedTypeError("branched diagram with arms (" + std::to_string(arms[0]) + "," +
                                  std::to_string(arms[1]) + "," + std::to_string(arms[2]) +
                                  ") is outside the A/B/C/D catalog");
    }
    if (doubles > 1) throw UnexpectedTypeError("multiple double bonds are outside the catalog");
    for (std::size_t i = 0; i < k; ++i)
        if (degree[i] > 2)
            throw UnexpectedTypeError("branched diagram with a double bond is outside the catalog");

    const Edge* dbl = nullptr;
    for (const Edge& e : edges)
        if (e.weight == 2) dbl = &e;
    // |a_{u,v}| = 2 exactly when s_v is the shorter root of the bond
    bool uv2 = abs(cartan(dbl->u, dbl->v)) == 2, vu2 = abs(cartan(dbl->v, dbl->u)) == 2;
    if (uv2 == vu2) throw InternalError("double bond without a direction");
    std::size_t short_node = uv2 ? dbl->v : dbl->u;

    if (k == 2) return {min_norm2 == 1 ? Family::B : Family::C, 2};
    std::size_t end_node;
    if (degree[dbl->u] == 1 && degree[dbl->v] != 1) end_node = dbl->u;
    else if (degree[dbl->v] == 1 && degree[dbl->u] != 1) end_node = dbl->v;
    else
        throw UnexpectedTypeError("interior double bond is outside the A/B/C/D catalog");
    return {end_node == short_node ? Family::B : Family::C, k};
}

// Conjugate pairs: linearly independent two-index roots over the same
// support. With unit pairing entries, dependence means equal or opposite
// pairing vectors.
inline std::vector<std::pair<Root, Root>> conjugate_pairs(const std::vector<Root>& roots) {
    std::vector<std::pair<Root, Root>> pairs;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (roots[i].kind() != RootKind::type2) continue;
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (roots[j].kind() != RootKind::type2) continue;
            if (roots[i].support() != roots[j].support()) continue;
            if (roots[j].pairing == roots[i].pairing ||
                roots[j].pairing == negated(roots[i].pairing))
                continue;
            pairs.emplace_back(roots[i], roots[j]);
        }
    }
    return pairs;
}

inline std::vector<std::pair<Root, Root>> conjugate_pairs(const RootSystem& r) {
    return conjugate_pairs(r.roots);
}

struct CriteriaLabel {
    TypeLabel label;
    // set when a rank-3 component met the conjugate-pair condition and was
    // labeled A3 under the rank convention for family D
    bool rank3_convention = false;
};

// Classification by root-type data: B when a simple root pairs with a
// single configuration vector, D when all simple roots are two-index and a
// conjugate simple pair exists (rank >= 4), A otherwise.
inline CriteriaLabel classify_by_criteria(const std::vector<Root>& simple) {
    const std::size_t k = simple.size();
    if (k == 0) throw InputError("cannot classify an empty component");
    if (k == 1) return {{Family::A, 1}, false};
    for (const Root& s : simple) {
        auto kind = s.kind();
        if (!kind) throw InputError("root without pairing type data in the criteria route");
        if (*kind == RootKind::type1) return {{Family::B, k}, false};
    }
    if (!conjugate_pairs(simple).empty()) {
        if (k >= 4) return {{Family::D, k}, false};
        if (k == 3) return {{Family::A, 3}, true};
        throw InternalError("conjugate simple roots in a rank-2 component");
    }
    return {{Family::A, k}, false};
}

struct IrreducibleComponent {
    std::vector<Root> roots;   // sorted by alpha
    std::vector<Root> simple;  // sorted by alpha
    IntegerMatrix cartan;      // indexed like `simple`
    TypeLabel label;
    std::vector<std::pair<Root, Root>> conjugates;  // conjugate pairs inside the component
    std::vector<Root> short_roots;  // strictly shorter roots, empty when all lengths agree
    bool criteria_checked = false;
    bool rank3_convention = false;
};

inline TypeLabel classify_by_catalog(const std::vector<Root>& component,
                                     const std::vector<Root>& simple) {
    Int min_norm2 = component.front().norm2();
    for (const Root& r : component) {
        Int nn = r.norm2();
        if (nn < min_norm2) min_norm2 = nn;
    }
    return label_from_cartan(cartan_matrix(simple), min_norm2);
}

inline TypeLabel classify_by_catalog(const std::vector<Root>& component) {
    return classify_by_catalog(component, simple_roots(component));
}

inline IrreducibleComponent classify_component(std::vector<Root> roots) {
    IrreducibleComponent comp;
    comp.roots = std::move(roots);
    std::sort(comp.roots.begin(), comp.roots.end());
    comp.simple = simple_roots(comp.roots);
    comp.cartan = cartan_matrix(comp.simple);
    Int min_norm2 = comp.roots.front().norm2(), max_norm2 = min_norm2;
    for (const Root& r : comp.roots) {
        Int nn = r.norm2();
        if (nn < min_norm2) min_norm2 = nn;
        if (nn > max_norm2) max_norm2 = nn;
    }
    comp.label = label_from_cartan(comp.cartan, min_norm2);

    bool kinds = true;
    for (const Root& r : comp.roots)
        if (!r.kind()) { kinds = false; break; }
    if (kinds) {
        CriteriaLabel crit = classify_by_criteria(comp.simple);
        if (crit.label != comp.label)
            throw InternalError("classification routes disagree: catalog " + comp.label.str() +
                                " vs criteria " + crit.label.str());
        comp.criteria_checked = true;
        comp.rank3_convention = crit.rank3_convention;
        comp.conjugates = conjugate_pairs(comp.roots);
    }
    if (min_norm2 != max_norm2)
        for (const Root& r : comp.roots)
            if (r.norm2() == min_norm2) comp.short_roots.push_back(r);
    return comp;
}

struct ClassificationReport {
    std::vector<IrreducibleComponent> components;
    bool criteria_checked = true;  // the type-data route ran on every component

    std::string summary() const {
        if (components.empty()) return "empty";
        std::string s;
        for (std::size_t i = 0; i < components.size(); ++i) {
            if (i) s += " x ";
            s += components[i].label.str();
        }
        return s;
    }
};

inline ClassificationReport classify_system(const RootSystem& r) {
    ClassificationReport rep;
    for (std::vector<Root>& comp : components(r.roots)) {
        rep.components.push_back(classify_component(std::move(comp)));
        rep.criteria_checked = rep.criteria_checked && rep.components.back().criteria_checked;
    }
    return rep;
}

// Classify a subset of an ambient system, after verifying it really is a
// subsystem: contained in the ambient roots and closed under negation and
// its own reflections.
inline ClassificationReport classify_subsystem(const RootSystem& r,
                                               const std::vector<IntVec>& subset) {
    std::vector<Root> roots;
    for (const IntVec& a : subset) {
        const Root* found = r.find(a);
        if (!found)
            throw NotASubsystemError(format_vector(a) + " is not a root of the ambient system");
        roots.push_back(*found);
    }
    sort_and_dedup(roots);
    std::vector<IntVec> alphas;
    for (const Root& root : roots) alphas.push_back(root.alpha);
    auto in_subset = [&](const IntVec& a) {
        return std::binary_search(alphas.begin(), alphas.end(), a);
    };
    for (const Root& root : roots)
        if (!in_subset(negated(root.alpha)))
            throw NotASubsystemError("negation of " + format_vector(root.alpha) + " missing");
    for (const Root& alpha : roots)
        for (const Root& beta : roots) {
            Root refl = reflect(alpha, beta);
            if (!in_subset(refl.alpha))
                throw NotASubsystemError("reflection of " + format_vector(beta.alpha) + " in " +
                                         format_vector(alpha.alpha) + " gives " +
                                         format_vector(refl.alpha) + ", which is missing");
        }

    ClassificationReport rep;
    for (std::vector<Root>& comp : components(roots)) {
        rep.components.push_back(classify_component(std::move(comp)));
        rep.criteria_checked = rep.criteria_checked && rep.components.back().criteria_checked;
    }
    return rep;
}

}  // namespace latroot
