#pragma once

// Root systems of vector configurations. A functional alpha on the ambient
// lattice is a root when its pairing values against the configuration are
// supported on one index (value +-1) or two indices (values +-1 each).
// Enumeration targets the finitely many admissible pairing patterns in Z^m
// and solves each exact linear system for alpha; the full-rank hypothesis
// makes the pairing map injective, so solutions are unique.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "latroot/configuration.hpp"
#include "latroot/errors.hpp"
#include "latroot/integers.hpp"
#include "latroot/matrix.hpp"

namespace latroot {

enum class RootKind { type1 = 1, type2 = 2 };

struct Root {
    IntVec alpha;    // element of the dual lattice, length n
    IntVec pairing;  // values against v_1..v_m, length m

    // Indices where the pairing is nonzero (0-based).
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < pairing.size(); ++i)
            if (pairing[i] != 0) s.push_back(i);
        return s;
    }

    // Squared length under the configuration's bilinear form.
    Int norm2() const { return dot(pairing, pairing); }

    // Type 1: one pairing entry of magnitude 1. Type 2: two such entries.
    // Anything else (e.g. elements of a dual system) has no kind.
    std::optional<RootKind> kind() const {
        std::size_t nonzero = 0;
        for (const Int& p : pairing) {
            if (p == 0) continue;
            if (p != 1 && p != -1) return std::nullopt;
            ++nonzero;
        }
        if (nonzero == 1) return RootKind::type1;
        if (nonzero == 2) return RootKind::type2;
        return std::nullopt;
    }

    friend bool operator==(const Root& a, const Root& b) { return a.alpha == b.alpha; }
    friend bool operator<(const Root& a, const Root& b) { return a.alpha < b.alpha; }
};

struct RootSystem {
    VectorConfiguration config;
    std::vector<Root> roots;  // sorted lexicographically by alpha, no duplicates

    std::size_t size() const { return roots.size(); }
    bool empty() const { return roots.empty(); }

    bool contains(const IntVec& alpha) const {
        Root probe{alpha, {}};
        return std::binary_search(roots.begin(), roots.end(), probe);
    }

    const Root* find(const IntVec& alpha) const {
        Root probe{alpha, {}};
        auto it = std::lower_bound(roots.begin(), roots.end(), probe);
        if (it != roots.end() && it->alpha == alpha) return &*it;
        return nullptr;
    }
};

inline IntVec pairing_vector(const VectorConfiguration& v, const IntVec& alpha) {
    if (alpha.size() != v.rank())
        throw InputError("functional has length " + std::to_string(alpha.size()) +
                         ", expected " + std::to_string(v.rank()));
    IntVec p(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) p[k] = dot(alpha, v.vector(k));
    return p;
}

// (alpha, beta) = sum_i <alpha, v_i><beta, v_i>; positive definite because
// the configuration has full rank.
inline Int bilinear(const VectorConfiguration& v, const IntVec& alpha, const IntVec& beta) {
    return dot(pairing_vector(v, alpha), pairing_vector(v, beta));
}

inline void sort_and_dedup(std::vector<Root>& roots) {
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
}

// All roots of the configuration. Every root pairs to one of the 2m single
// patterns or the 2m(m-1) double patterns, so each pattern is posed as an
// integer linear system over alpha and solved exactly.
inline RootSystem compute_roots(const VectorConfiguration& v) {
    const std::size_t m = v.size();
    IntegerMatrix a = v.as_matrix();

    std::vector<Root> roots;
    auto try_target = [&](const IntVec& target) {
        if (auto sol = solve_diophantine(a, target)) {
            if (!sol->kernel.empty())
                throw InternalError("pairing map has nontrivial kernel on a full-rank configuration");
            roots.push_back(Root{std::move(sol->particular), target});
        }
    };

    IntVec target(m, Int(0));
    for (std::size_t i = 0; i < m; ++i) {
        for (int si : {1, -1}) {
            target[i] = si;
            try_target(target);
            for (std::size_t j = i + 1; j < m; ++j) {
                for (int sj : {1, -1}) {
                    target[j] = sj;
                    try_target(target);
                    target[j] = 0;
                }
            }
            target[i] = 0;
        }
    }
    sort_and_dedup(roots);
    return RootSystem{v, std::move(roots)};
}

// Signed variant: flip the configuration by omega, then keep only roots
// whose pairing has exactly one +1 and one -1. The result is reported over
// the signed configuration.
inline RootSystem compute_signed_roots(const VectorConfiguration& v, const SignAssignment& omega) {
    VectorConfiguration w = apply_signs(v, omega);
    RootSystem full = compute_roots(w);
    std::vector<Root> kept;
    for (Root& r : full.roots) {
        std::size_t plus = 0, minus = 0;
        bool ok = true;
        for (const Int& p : r.pairing) {
            if (p == 0) continue;
            if (p == 1) ++plus;
            else if (p == -1) ++minus;
            else { ok = false; break; }
        }
        if (ok && plus == 1 && minus == 1) kept.push_back(std::move(r));
    }
    return RootSystem{std::move(w), std::move(kept)};
}

// Cartan integer a_{beta,alpha} = 2(beta,alpha)/(alpha,alpha).
inline Int cartan_integer(const Root& beta, const Root& alpha) {
    Int nn = alpha.norm2();
    if (nn == 0) throw InternalError("zero-length root in Cartan integer");
    Int num = 2 * dot(beta.pairing, alpha.pairing);
    if (num % nn != 0) throw InternalError("non-integral Cartan number between roots");
    return exact_div(num, nn);
}

// r_alpha(beta) = beta - a_{beta,alpha} alpha.
inline Root reflect(const Root& alpha, const Root& beta) {
    Int a = cartan_integer(beta, alpha);
    Root out;
    out.alpha.resize(beta.alpha.size());
    out.pairing.resize(beta.pairing.size());
    for (std::size_t i = 0; i < beta.alpha.size(); ++i)
        out.alpha[i] = beta.alpha[i] - a * alpha.alpha[i];
    for (std::size_t i = 0; i < beta.pairing.size(); ++i)
        out.pairing[i] = beta.pairing[i] - a * alpha.pairing[i];
    return out;
}

// Dual system: alpha -> 2 alpha / (alpha, alpha). Squared lengths here are
// always 1, 2 or 4, so the scaling stays integral.
inline RootSystem dual(const RootSystem& r) {
    std::vector<Root> out;
    out.reserve(r.roots.size());
    for (const Root& root : r.roots) {
        Int nn = root.norm2();
        Root d;
        d.alpha.resize(root.alpha.size());
        d.pairing.resize(root.pairing.size());
        for (std::size_t i = 0; i < root.alpha.size(); ++i) {
            Int num = 2 * root.alpha[i];
            if (num % nn != 0) throw InternalError("dual root is not integral");
            d.alpha[i] = exact_div(num, nn);
        }
        for (std::size_t i = 0; i < root.pairing.size(); ++i)
            d.pairing[i] = exact_div(2 * root.pairing[i], nn);
        out.push_back(std::move(d));
    }
    sort_and_dedup(out);
    return RootSystem{r.config, std::move(out)};
}

struct ClosureReport {
    bool negation_closed = true;
    bool reflection_closed = true;
    std::string witness;  // first violation, empty when closed

    bool closed() const { return negation_closed && reflection_closed; }
};

// Checks that a finite root set is closed under negation and under all of
// its own reflections; reports the first violation found.
inline ClosureReport verify_closure(const RootSystem& r) {
    ClosureReport rep;
    for (const Root& root : r.roots) {
        if (!r.contains(negated(root.alpha))) {
            rep.negation_closed = false;
            rep.witness = "negation of " + format_vector(root.alpha) + " missing";
            return rep;
        }
    }
    for (const Root& alpha : r.roots) {
        for (const Root& beta : r.roots) {
            Root refl = reflect(alpha, beta);
            if (!r.contains(refl.alpha)) {
                rep.reflection_closed = false;
                rep.witness = "r_" + format_vector(alpha.alpha) + "(" + format_vector(beta.alpha) +
                              ") = " + format_vector(refl.alpha) + " missing";
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace latroot
