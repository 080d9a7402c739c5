#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <vector>

#include "chordlab/errors.hpp"
#include "chordlab/module_element.hpp"
#include "chordlab/relators.hpp"

namespace chordlab {

using BigInt = boost::multiprecision::cpp_int;

/// Dense matrix of exact integers. Entries can grow during elimination, so
/// arbitrary precision is used throughout even though inputs are small.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BigInt& at(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
    const BigInt& at(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<BigInt> data_;
};

/// Entry (i, j) is the coefficient of basis diagram i in relator j.
/// Column order is the relator set's deterministic (sorted) order.
inline IntegerMatrix build_matrix(std::span<const CanonicalDiagram> basis, const RelatorSet& rels) {
    IntegerMatrix m(static_cast<int>(basis.size()), static_cast<int>(rels.elements.size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            m.at(i, j) = tilde_eval(basis[i], rels.elements[j]);
    return m;
}

/// An integer basis of a saturated lattice in Z^dim. Vectors are linearly
/// independent over Q; the empty basis is the zero lattice.
struct LatticeBasis {
    int dim = 0;
    std::vector<std::vector<BigInt>> vectors;

    int rank() const { return static_cast<int>(vectors.size()); }
};

namespace detail {

/// In-place integer row echelon via Euclidean elimination. Row operations are
/// unimodular; `companion` (same row count, when non-null) receives the same
/// operations. Returns the rank. Afterwards rows [rank, rows) of `a` are zero
/// and pivot columns strictly increase row by row, each pivot positive and
/// entries above a pivot reduced modulo it (Hermite form).
inline int row_echelon(IntegerMatrix& a, IntegerMatrix* companion) {
    const int rows = a.rows(), cols = a.cols();
    auto row_axpy = [&](IntegerMatrix& m, int dst, int src, const BigInt& q) {
        for (int j = 0; j < m.cols(); ++j) m.at(dst, j) -= q * m.at(src, j);
    };
    auto row_swap = [&](IntegerMatrix& m, int r1, int r2) {
        for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r1, j), m.at(r2, j));
    };
    auto row_negate = [&](IntegerMatrix& m, int r) {
        for (int j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
    };

    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // Euclidean sweep: shrink entries in column c below row r until one remains.
        for (;;) {
            int piv = -1;
            int nonzero = 0;
            for (int i = r; i < rows; ++i) {
                if (a.at(i, c) != 0) {
                    ++nonzero;
                    if (piv < 0 || abs(a.at(i, c)) < abs(a.at(piv, c))) piv = i;
                }
            }
            if (nonzero == 0) break;
            if (nonzero == 1) {
                if (piv != r) {
                    row_swap(a, r, piv);
                    if (companion) row_swap(*companion, r, piv);
                }
                break;
            }
            for (int i = r; i < rows; ++i) {
                if (i == piv || a.at(i, c) == 0) continue;
                const BigInt q = a.at(i, c) / a.at(piv, c);
                if (q != 0) {
                    row_axpy(a, i, piv, q);
                    if (companion) row_axpy(*companion, i, piv, q);
                }
            }
        }
        if (a.at(r, c) == 0) continue;
        if (a.at(r, c) < 0) {
            row_negate(a, r);
            if (companion) row_negate(*companion, r);
        }
        // reduce entries above the pivot
        for (int i = 0; i < r; ++i) {
            BigInt q = a.at(i, c) / a.at(r, c);
            if (a.at(i, c) - q * a.at(r, c) < 0) q -= 1;  // floor division
            if (q != 0) {
                row_axpy(a, i, r, q);
                if (companion) row_axpy(*companion, i, r, q);
            }
        }
        ++r;
    }
    return r;
}

}  // namespace detail

/// Exact basis of {v in Z^rows : v M = 0}. Because the row operations are
/// unimodular, the result generates the full (saturated) solution lattice.
inline LatticeBasis left_kernel(const IntegerMatrix& m) {
    IntegerMatrix a = m;
    IntegerMatrix u(m.rows(), m.rows());
    for (int i = 0; i < m.rows(); ++i) u.at(i, i) = 1;
    const int rank = detail::row_echelon(a, &u);
    LatticeBasis basis;
    basis.dim = m.rows();
    for (int i = rank; i < m.rows(); ++i) {
        std::vector<BigInt> v(m.rows());
        for (int j = 0; j < m.rows(); ++j) v[j] = u.at(i, j);
        basis.vectors.push_back(std::move(v));
    }
    return basis;
}

/// Rank of M over Q.
inline int rank(const IntegerMatrix& m) {
    IntegerMatrix a = m;
    return detail::row_echelon(a, nullptr);
}

/// True iff v is an integer combination of the basis vectors.
inline bool lattice_contains(const LatticeBasis& basis, std::span<const BigInt> v) {
    if (static_cast<int>(v.size()) != basis.dim)
        throw DimensionMismatch("vector has dimension " + std::to_string(v.size()) +
                                ", lattice lives in dimension " + std::to_string(basis.dim));
    if (basis.vectors.empty()) {
        for (const BigInt& x : v)
            if (x != 0) return false;
        return true;
    }
    IntegerMatrix h(basis.rank(), basis.dim);
    for (int i = 0; i < basis.rank(); ++i)
        for (int j = 0; j < basis.dim; ++j) h.at(i, j) = basis.vectors[i][j];
    detail::row_echelon(h, nullptr);

    std::vector<BigInt> rem(v.begin(), v.end());
    for (int i = 0; i < h.rows(); ++i) {
        int pivot = -1;
        for (int j = 0; j < h.cols(); ++j)
            if (h.at(i, j) != 0) {
                pivot = j;
                break;
            }
        if (pivot < 0) break;
        if (rem[pivot] % h.at(i, pivot) != 0) return false;
        const BigInt q = rem[pivot] / h.at(i, pivot);
        for (int j = 0; j < h.cols(); ++j) rem[j] -= q * h.at(i, j);
    }
    for (const BigInt& x : rem)
        if (x != 0) return false;
    return true;
}

inline bool lattice_contains(const LatticeBasis& basis, const std::vector<long long>& v) {
    std::vector<BigInt> big(v.begin(), v.end());
    return lattice_contains(basis, std::span<const BigInt>(big));
}

/// Lattice equality via mutual membership (bases are far from unique).
inline bool lattices_equal(const LatticeBasis& a, const LatticeBasis& b) {
    if (a.dim != b.dim || a.rank() != b.rank()) return false;
    for (const auto& v : a.vectors)
        if (!lattice_contains(b, std::span<const BigInt>(v))) return false;
    for (const auto& v : b.vectors)
        if (!lattice_contains(a, std::span<const BigInt>(v))) return false;
    return true;
}

}  // namespace chordlab
