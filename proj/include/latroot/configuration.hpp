#pragma once

// A finite configuration of nonzero integer vectors spanning a full-rank
// sublattice, plus sign assignments for its signed variants.

#include <cstddef>
#include <string>
#include <vector>

#include "latroot/errors.hpp"
#include "latroot/integers.hpp"
#include "latroot/matrix.hpp"

namespace latroot {

class VectorConfiguration {
public:
    // Validates on construction: every vector nonzero and of length `rank`,
    // and the set spans a rank-`rank` subgroup.
    VectorConfiguration(std::size_t rank, std::vector<IntVec> vectors,
                        std::vector<std::string> labels = {})
        : rank_(rank), vectors_(std::move(vectors)), labels_(std::move(labels)) {
        if (rank_ == 0) throw InputError("configuration rank must be positive");
        if (vectors_.empty()) throw InputError("configuration has no vectors");
        if (!labels_.empty() && labels_.size() != vectors_.size())
            throw InputError("label count does not match vector count");
        for (std::size_t i = 0; i < vectors_.size(); ++i) {
            if (vectors_[i].size() != rank_)
                throw InputError("vector " + std::to_string(i + 1) + " has length " +
                                 std::to_string(vectors_[i].size()) + ", expected " +
                                 std::to_string(rank_));
            if (is_zero(vectors_[i]))
                throw ZeroVectorError("vector " + std::to_string(i + 1) + " is zero");
        }
        if (latroot::rank(IntegerMatrix(vectors_)) != rank_)
            throw RankDeficientError("vectors span a subgroup of rank " +
                                     std::to_string(latroot::rank(IntegerMatrix(vectors_))) +
                                     " < " + std::to_string(rank_));
    }

    std::size_t rank() const { return rank_; }
    std::size_t size() const { return vectors_.size(); }
    const std::vector<IntVec>& vectors() const { return vectors_; }
    const IntVec& vector(std::size_t i) const { return vectors_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }

    IntegerMatrix as_matrix() const { return IntegerMatrix(vectors_); }

    friend bool operator==(const VectorConfiguration& a, const VectorConfiguration& b) {
        return a.rank_ == b.rank_ && a.vectors_ == b.vectors_;
    }

private:
    std::size_t rank_;
    std::vector<IntVec> vectors_;
    std::vector<std::string> labels_;
};

class SignAssignment {
public:
    explicit SignAssignment(std::vector<int> signs) : signs_(std::move(signs)) {
        for (int s : signs_)
            if (s != 1 && s != -1) throw InputError("signs must be +1 or -1");
    }

    static SignAssignment all_plus(std::size_t m) { return SignAssignment(std::vector<int>(m, 1)); }

    // +1 on the first q positions, -1 on the rest
    static SignAssignment block(std::size_t q, std::size_t m) {
        if (q > m) throw InputError("block size exceeds assignment length");
        std::vector<int> s(m, -1);
        for (std::size_t i = 0; i < q; ++i) s[i] = 1;
        return SignAssignment(std::move(s));
    }

    std::size_t size() const { return signs_.size(); }
    int operator[](std::size_t i) const { return signs_[i]; }
    const std::vector<int>& signs() const { return signs_; }

private:
    std::vector<int> signs_;
};

// True when the vectors generate the whole ambient lattice, not merely a
// full-rank sublattice: the Hermite pivots of the stacked vectors are all 1.
// Configurations read off from fans always span.
inline bool spans_ambient_lattice(const VectorConfiguration& v) {
    IntegerMatrix h = hermite_normal_form(v.as_matrix()).h;
    for (std::size_t i = 0; i < v.rank(); ++i) {
        std::size_t lead = 0;
        while (lead < h.cols() && h(i, lead) == 0) ++lead;
        if (lead == h.cols() || h(i, lead) != 1) return false;
    }
    return true;
}

inline VectorConfiguration apply_signs(const VectorConfiguration& v, const SignAssignment& omega) {
    if (omega.size() != v.size())
        throw InputError("sign assignment has length " + std::to_string(omega.size()) +
                         ", configuration has " + std::to_string(v.size()) + " vectors");
    std::vector<IntVec> flipped = v.vectors();
    for (std::size_t i = 0; i < flipped.size(); ++i)
        if (omega[i] < 0) flipped[i] = negated(flipped[i]);
    return VectorConfiguration(v.rank(), std::move(flipped), v.labels());
}

}  // namespace latroot
