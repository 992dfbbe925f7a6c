#pragma once

// Exact integer linear algebra: dense arbitrary-precision matrices,
// row-style Hermite normal form, Diophantine solving and determinants.
// Sized for desk-scale lattice work, not for asymptotics.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "latroot/errors.hpp"
#include "latroot/integers.hpp"

namespace latroot {

class IntegerMatrix {
public:
    IntegerMatrix() : rows_(0), cols_(0) {}

    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}

    explicit IntegerMatrix(const std::vector<IntVec>& rows)
        : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
        entries_.reserve(rows_ * cols_);
        for (const IntVec& r : rows) {
            if (r.size() != cols_)
                throw InputError("matrix rows have inconsistent lengths");
            entries_.insert(entries_.end(), r.begin(), r.end());
        }
    }

    IntegerMatrix(std::initializer_list<IntVec> rows)
        : IntegerMatrix(std::vector<IntVec>(rows)) {}

    static IntegerMatrix identity(std::size_t n) {
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    IntVec row(std::size_t i) const {
        return IntVec(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                      entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    bool row_is_zero(std::size_t i) const {
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0) return false;
        return true;
    }

    IntegerMatrix transposed() const {
        IntegerMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
    }

    // row_a -= f * row_b
    void submul_row(std::size_t a, const Int& f, std::size_t b) {
        if (f == 0) return;
        for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) -= f * (*this)(b, j);
    }

    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> entries_;
};

inline IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows()) throw InputError("matrix product dimension mismatch");
    IntegerMatrix p(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
        }
    return p;
}

inline IntVec operator*(const IntegerMatrix& a, const IntVec& x) {
    if (a.cols() != x.size()) throw InputError("matrix-vector dimension mismatch");
    IntVec y(a.rows(), Int(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

struct HermiteForm {
    IntegerMatrix h;  // row-style HNF of the input
    IntegerMatrix u;  // unimodular, u * input == h
};

// Row-style Hermite normal form: pivots positive, entries above each pivot
// reduced into [0, pivot), entries below zero, zero rows at the bottom.
// The transform matrix is accumulated so that u * m == h with |det u| == 1.
inline HermiteForm hermite_normal_form(const IntegerMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    HermiteForm out{m, IntegerMatrix::identity(nr)};
    IntegerMatrix& h = out.h;
    IntegerMatrix& u = out.u;

    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        // pivot: nonzero entry of least magnitude in column c at or below row r
        std::size_t piv = nr;
        for (std::size_t i = r; i < nr; ++i) {
            if (h(i, c) == 0) continue;
            if (piv == nr || mpz_cmpabs(h(i, c).get_mpz_t(), h(piv, c).get_mpz_t()) < 0) piv = i;
        }
        if (piv == nr) continue;
        h.swap_rows(r, piv);
        u.swap_rows(r, piv);

        // clear the column below the pivot with unimodular two-row combines
        for (std::size_t q = r + 1; q < nr; ++q) {
            if (h(q, c) == 0) continue;
            Int a = h(r, c), b = h(q, c);
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            Int ar = exact_div(a, g), br = exact_div(b, g);
            // [[s, t], [-br, ar]] has determinant 1
            for (std::size_t j = 0; j < nc; ++j) {
                Int hr = h(r, j), hq = h(q, j);
                h(r, j) = s * hr + t * hq;
                h(q, j) = ar * hq - br * hr;
            }
            for (std::size_t j = 0; j < nr; ++j) {
                Int ur = u(r, j), uq = u(q, j);
                u(r, j) = s * ur + t * uq;
                u(q, j) = ar * uq - br * ur;
            }
        }

        if (h(r, c) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (std::size_t q = 0; q < r; ++q) {
            Int f = floor_div(h(q, c), h(r, c));
            h.submul_row(q, f, r);
            u.submul_row(q, f, r);
        }
        ++r;
    }
    return out;
}

inline std::size_t rank(const IntegerMatrix& m) {
    IntegerMatrix h = hermite_normal_form(m).h;
    std::size_t r = 0;
    for (std::size_t i = 0; i < h.rows(); ++i)
        if (!h.row_is_zero(i)) ++r;
    return r;
}

// Exact determinant by Bareiss fraction-free elimination.
inline Int determinant(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntegerMatrix a = m;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t j = k + 1;
            while (j < n && a(j, k) == 0) ++j;
            if (j == n) return 0;
            a.swap_rows(k, j);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    Int det = a(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

struct DiophantineSolution {
    IntVec particular;           // one integer solution of A x = b
    std::vector<IntVec> kernel;  // basis of the integer kernel of A, HNF-reduced
};

// Solve A x = b over the integers. Returns a particular solution together
// with a basis of the kernel lattice, or nothing when no integer solution
// exists. Works through the Hermite form of A^T: with U A^T = H, candidate
// solutions are integer combinations of the rows of U.
inline std::optional<DiophantineSolution> solve_diophantine(const IntegerMatrix& a,
                                                            const IntVec& b) {
    if (b.size() != a.rows()) throw InputError("right-hand side length does not match row count");
    const std::size_t n = a.cols();
    HermiteForm hf = hermite_normal_form(a.transposed());
    const IntegerMatrix& h = hf.h;
    const IntegerMatrix& u = hf.u;

    IntVec residual = b;
    std::vector<Int> coeffs;
    std::size_t r = 0;
    for (; r < h.rows() && !h.row_is_zero(r); ++r) {
        std::size_t lead = 0;
        while (h(r, lead) == 0) ++lead;
        if (residual[lead] % h(r, lead) != 0) return std::nullopt;
        Int z = exact_div(residual[lead], h(r, lead));
        for (std::size_t j = 0; j < h.cols(); ++j) residual[j] -= z * h(r, j);
        coeffs.push_back(z);
    }
    if (!is_zero(residual)) return std::nullopt;

    DiophantineSolution sol;
    sol.particular.assign(n, Int(0));
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        for (std::size_t j = 0; j < n; ++j) sol.particular[j] += coeffs[k] * u(k, j);

    if (r < n) {
        IntegerMatrix kmat(n - r, n);
        for (std::size_t k = r; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) kmat(k - r, j) = u(k, j);
        IntegerMatrix kh = hermite_normal_form(kmat).h;
        for (std::size_t i = 0; i < kh.rows(); ++i)
            if (!kh.row_is_zero(i)) sol.kernel.push_back(kh.row(i));
    }
    return sol;
}

}  // namespace latroot
