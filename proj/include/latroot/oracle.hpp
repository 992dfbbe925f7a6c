#pragma once

// Independent brute-force enumeration of a configuration's roots. Works by
// certified box search: every root solves S alpha = c for a full-rank
// square submatrix S of the configuration and some c in {-1,0,1}^n, so
// Cramer's rule bounds each coordinate of alpha. All candidates inside the
// bound box are checked directly against the defining pairing patterns.
// This path shares no code with the Hermite-form solver used by
// compute_roots: independence is done with rational elimination and
// determinants by cofactor expansion.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "latroot/configuration.hpp"
#include "latroot/errors.hpp"
#include "latroot/integers.hpp"
#include "latroot/root_system.hpp"

namespace latroot {
namespace detail {

inline Int cofactor_determinant(const std::vector<IntVec>& rows) {
    const std::size_t n = rows.size();
    if (n == 0) return 1;
    if (n == 1) return rows[0][0];
    Int det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (rows[0][j] == 0) continue;
        std::vector<IntVec> minor(n - 1, IntVec(n - 1));
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = rows[r][c];
            }
        }
        Int term = rows[0][j] * cofactor_determinant(minor);
        if (j % 2 == 0) det += term;
        else det -= term;
    }
    return det;
}

// Greedy full-rank row selection, smallest L1 norms first. Independence is
// tracked by exact rational elimination.
inline std::vector<std::size_t> select_basis_rows(const VectorConfiguration& v) {
    const std::size_t n = v.rank(), m = v.size();
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    std::vector<Int> l1(m, Int(0));
    for (std::size_t i = 0; i < m; ++i)
        for (const Int& x : v.vector(i)) l1[i] += abs(x);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return l1[a] < l1[b]; });

    std::vector<std::vector<mpq_class>> elim;
    std::vector<std::size_t> chosen;
    for (std::size_t idx : order) {
        std::vector<mpq_class> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = v.vector(idx)[j];
        for (const auto& basis : elim) {
            std::size_t lead = 0;
            while (lead < n && basis[lead] == 0) ++lead;
            if (lead < n && row[lead] != 0) {
                mpq_class f = row[lead] / basis[lead];
                for (std::size_t j = lead; j < n; ++j) row[j] -= f * basis[j];
            }
        }
        bool nonzero = false;
        for (const mpq_class& x : row)
            if (x != 0) { nonzero = true; break; }
        if (!nonzero) continue;
        elim.push_back(std::move(row));
        chosen.push_back(idx);
        if (chosen.size() == n) break;
    }
    if (chosen.size() != n)
        throw InternalError("no full-rank submatrix in a validated configuration");
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace detail

// Per-coordinate search bounds for root candidates: the Cramer bound from a
// full-rank submatrix S, capped by the coarser n * Hadamard-style bound on
// the adjugate entries. Both are valid upper bounds on |alpha_i|.
inline IntVec oracle_coordinate_bounds(const VectorConfiguration& v) {
    const std::size_t n = v.rank();
    std::vector<std::size_t> rows = detail::select_basis_rows(v);
    std::vector<IntVec> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = v.vector(rows[i]);

    Int det = abs(detail::cofactor_determinant(s));
    if (det == 0) throw InternalError("selected submatrix is singular");

    // |alpha_i| <= sum_j |adj(S)_{ij}| / |det S|, adj entries being cofactors
    IntVec bounds(n, Int(0));
    for (std::size_t i = 0; i < n; ++i) {
        Int rowsum = 0;
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<IntVec> minor(n - 1, IntVec(n - 1));
            std::size_t rr = 0;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == j) continue;
                std::size_t cc = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor[rr][cc++] = s[r][c];
                }
                ++rr;
            }
            rowsum += abs(detail::cofactor_determinant(minor));
        }
        bounds[i] = floor_div(rowsum, det);
    }

    Int hadamard = 1;
    for (std::size_t r = 0; r < n; ++r) {
        Int l1 = 0;
        for (const Int& x : s[r]) l1 += abs(x);
        if (l1 > 1) hadamard *= l1;
    }
    Int global = Int(n) * hadamard;
    for (Int& b : bounds)
        if (b > global) b = global;
    return bounds;
}

// Exhaustive search for all roots of the configuration, independent of
// compute_roots. Depth-first over the bound box with sound magnitude
// pruning; each surviving candidate is tested against the definition.
inline RootSystem oracle_roots(const VectorConfiguration& v) {
    const std::size_t n = v.rank(), m = v.size();
    IntVec bounds = oracle_coordinate_bounds(v);

    Int box = 1;
    for (const Int& b : bounds) box *= 2 * b + 1;
    if (box > Int("10000000000000000"))
        throw ScaleError("search box of " + box.get_str() + " candidates is beyond desk scale");

    // tail[k][d] = max |contribution of coordinates d..n-1 to <alpha, v_k>|
    std::vector<IntVec> tail(m, IntVec(n + 1, Int(0)));
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t d = n; d-- > 0;) {
            Int term = abs(v.vector(k)[d]) * bounds[d];
            tail[k][d] = tail[k][d + 1] + term;
        }

    std::vector<Root> roots;
    IntVec alpha(n, Int(0));
    IntVec partial(m, Int(0));
    std::uint64_t visited = 0;
    const std::uint64_t cap = 200000000;

    auto search = [&](auto&& self, std::size_t d) -> void {
        if (++visited > cap)
            throw ScaleError("candidate enumeration exceeded " + std::to_string(cap) + " nodes");
        if (d == n) {
            std::size_t nonzero = 0;
            bool unit = true;
            for (std::size_t k = 0; k < m; ++k) {
                if (partial[k] == 0) continue;
                ++nonzero;
                if (partial[k] != 1 && partial[k] != -1) { unit = false; break; }
            }
            if (unit && (nonzero == 1 || nonzero == 2))
                roots.push_back(Root{alpha, partial});
            return;
        }
        for (Int val = -bounds[d]; val <= bounds[d]; ++val) {
            alpha[d] = val;
            bool feasible = true;
            for (std::size_t k = 0; k < m; ++k) {
                partial[k] += val * v.vector(k)[d];
                if (abs(partial[k]) > 1 + tail[k][d + 1]) feasible = false;
            }
            if (feasible) self(self, d + 1);
            for (std::size_t k = 0; k < m; ++k) partial[k] -= val * v.vector(k)[d];
        }
        alpha[d] = 0;
    };
    search(search, 0);

    sort_and_dedup(roots);
    return RootSystem{v, std::move(roots)};
}

}  // namespace latroot
