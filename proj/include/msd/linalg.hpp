#pragma once

// Exact linear algebra over Euclidean rings and fields, templated on the
// scalar. Integer routines need truncating `/`, `%` and ordering; field
// routines need exact division. Both msd::Integer / msd::Rational and the
// builtin integral types qualify.

#include "msd/integer.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace msd {

using Index = Eigen::Index;

template <typename Scalar>
Scalar abs_value(const Scalar& x)
{
    return x < Scalar(0) ? Scalar(-x) : x;
}

/// Quotient rounded towards negative infinity.
template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b)
{
    Scalar q = a / b;
    if (a - q * b != Scalar(0) && ((a < Scalar(0)) != (b < Scalar(0)))) {
        q -= Scalar(1);
    }
    return q;
}

template <typename Scalar>
Matrix<Scalar> identity_matrix(Index n)
{
    Matrix<Scalar> id = Matrix<Scalar>::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
        id(i, i) = Scalar(1);
    }
    return id;
}

/// U * M * V = S with U, V unimodular and S diagonal, d_1 | d_2 | ..., d_i >= 0.
template <typename Scalar>
struct SmithDecomposition {
    Matrix<Scalar> U;
    Matrix<Scalar> S;
    Matrix<Scalar> V;

    Index rank() const
    {
        Index r = 0;
        for (Index i = 0; i < std::min(S.rows(), S.cols()); ++i) {
            if (S(i, i) != Scalar(0)) {
                ++r;
            }
        }
        return r;
    }

    std::vector<Scalar> diagonal() const
    {
        std::vector<Scalar> d;
        for (Index i = 0; i < std::min(S.rows(), S.cols()); ++i) {
            d.push_back(S(i, i));
        }
        return d;
    }
};

// Pivot rule: smallest nonzero absolute value in the trailing block,
// first hit in row-major scan order.
template <typename Scalar>
SmithDecomposition<Scalar> smith_normal_form(const Matrix<Scalar>& M)
{
    const Index m = M.rows();
    const Index n = M.cols();
    SmithDecomposition<Scalar> out{identity_matrix<Scalar>(m), M, identity_matrix<Scalar>(n)};
    auto& S = out.S;
    auto& U = out.U;
    auto& V = out.V;

    for (Index t = 0; t < std::min(m, n); ++t) {
        bool finished = false;
        while (true) {
            Index pr = -1;
            Index pc = -1;
            Scalar best(0);
            for (Index i = t; i < m; ++i) {
                for (Index j = t; j < n; ++j) {
                    if (S(i, j) != Scalar(0) && (pr < 0 || abs_value(S(i, j)) < best)) {
                        best = abs_value(S(i, j));
                        pr = i;
                        pc = j;
                    }
                }
            }
            if (pr < 0) {
                finished = true;
                break;
            }
            if (pr != t) {
                S.row(pr).swap(S.row(t));
                U.row(pr).swap(U.row(t));
            }
            if (pc != t) {
                S.col(pc).swap(S.col(t));
                V.col(pc).swap(V.col(t));
            }

            bool clean = true;
            for (Index i = t + 1; i < m; ++i) {
                if (S(i, t) == Scalar(0)) {
                    continue;
                }
                const Scalar q = S(i, t) / S(t, t);
                S.row(i) -= S.row(t) * q;
                U.row(i) -= U.row(t) * q;
                if (S(i, t) != Scalar(0)) {
                    clean = false;
                }
            }
            for (Index j = t + 1; j < n; ++j) {
                if (S(t, j) == Scalar(0)) {
                    continue;
                }
                const Scalar q = S(t, j) / S(t, t);
                S.col(j) -= S.col(t) * q;
                V.col(j) -= V.col(t) * q;
                if (S(t, j) != Scalar(0)) {
                    clean = false;
                }
            }
            if (!clean) {
                continue;
            }

            // Divisibility: fold an offending row into the pivot row and retry.
            Index bad = -1;
            for (Index i = t + 1; i < m && bad < 0; ++i) {
                for (Index j = t + 1; j < n; ++j) {
                    if (S(i, j) % S(t, t) != Scalar(0)) {
                        bad = i;
                        break;
                    }
                }
            }
            if (bad < 0) {
                break;
            }
            S.row(t) += S.row(bad);
            U.row(t) += U.row(bad);
        }
        if (finished) {
            break;
        }
        if (S(t, t) < Scalar(0)) {
            S.row(t) = -S.row(t);
            U.row(t) = -U.row(t);
        }
    }
    return out;
}

/// Row echelon form under unimodular row operations: T * A = H.
/// Pivots are positive and entries above each pivot are reduced into
/// [0, pivot), so the nonzero rows of H are the Hermite basis of the row
/// lattice of A.
template <typename Scalar>
struct Echelon {
    Matrix<Scalar> H;
    Matrix<Scalar> T;
    std::vector<Index> pivot_cols;

    Index rank() const { return static_cast<Index>(pivot_cols.size()); }
};

template <typename Scalar>
Echelon<Scalar> integer_echelon(const Matrix<Scalar>& A)
{
    const Index m = A.rows();
    const Index n = A.cols();
    Echelon<Scalar> e{A, identity_matrix<Scalar>(m), {}};
    auto& H = e.H;
    auto& T = e.T;
    Index r = 0;
    for (Index c = 0; c < n && r < m; ++c) {
        bool has_pivot = false;
        while (true) {
            Index p = -1;
            for (Index i = r; i < m; ++i) {
                if (H(i, c) != Scalar(0) && (p < 0 || abs_value(H(i, c)) < abs_value(H(p, c)))) {
                    p = i;
                }
            }
            if (p < 0) {
                break;
            }
            has_pivot = true;
            if (p != r) {
                H.row(p).swap(H.row(r));
                T.row(p).swap(T.row(r));
            }
            bool clean = true;
            for (Index i = r + 1; i < m; ++i) {
                if (H(i, c) == Scalar(0)) {
                    continue;
                }
                const Scalar q = H(i, c) / H(r, c);
                H.row(i) -= H.row(r) * q;
                T.row(i) -= T.row(r) * q;
                if (H(i, c) != Scalar(0)) {
                    clean = false;
                }
            }
            if (clean) {
                break;
            }
        }
        if (!has_pivot) {
            continue;
        }
        if (H(r, c) < Scalar(0)) {
            H.row(r) = -H.row(r);
            T.row(r) = -T.row(r);
        }
        for (Index i = 0; i < r; ++i) {
            const Scalar q = floor_div(H(i, c), H(r, c));
            if (q != Scalar(0)) {
                H.row(i) -= H.row(r) * q;
                T.row(i) -= T.row(r) * q;
            }
        }
        e.pivot_cols.push_back(c);
        ++r;
    }
    return e;
}

/// Hermite basis (rows) of the lattice spanned by the rows of A.
template <typename Scalar>
Matrix<Scalar> hermite_normal_form(const Matrix<Scalar>& A)
{
    auto e = integer_echelon(A);
    return e.H.topRows(e.rank());
}

/// Lattice basis (rows) of { x in Z^n : A x = 0 } for an m x n matrix A.
template <typename Scalar>
Matrix<Scalar> integer_kernel(const Matrix<Scalar>& A)
{
    const Index m = A.rows();
    const Index n = A.cols();
    Matrix<Scalar> aug(n, m + n);
    aug.leftCols(m) = A.transpose();
    aug.rightCols(n) = identity_matrix<Scalar>(n);
    auto e = integer_echelon(aug);
    Index first = 0;
    while (first < e.rank() && e.pivot_cols[static_cast<std::size_t>(first)] < m) {
        ++first;
    }
    Matrix<Scalar> basis = e.H.bottomRows(n - first).rightCols(n);
    return hermite_normal_form(basis);
}

/// Coefficients c with c * basis = x, when x lies in the row lattice of an
/// echelon basis (as returned by hermite_normal_form).
template <typename Scalar>
std::optional<Vector<Scalar>> lattice_coordinates(const Matrix<Scalar>& basis, Vector<Scalar> x)
{
    Vector<Scalar> coeffs = Vector<Scalar>::Zero(basis.rows());
    Index col = 0;
    for (Index r = 0; r < basis.rows(); ++r) {
        while (col < basis.cols() && basis(r, col) == Scalar(0)) {
            if (x(col) != Scalar(0)) {
                return std::nullopt;
            }
            ++col;
        }
        if (col == basis.cols()) {
            break;
        }
        if (x(col) % basis(r, col) != Scalar(0)) {
            return std::nullopt;
        }
        coeffs(r) = x(col) / basis(r, col);
        x -= basis.row(r).transpose() * coeffs(r);
        ++col;
    }
    for (Index c = 0; c < x.size(); ++c) {
        if (x(c) != Scalar(0)) {
            return std::nullopt;
        }
    }
    return coeffs;
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
template <typename Scalar>
Scalar determinant(Matrix<Scalar> A)
{
    const Index n = A.rows();
    if (n != A.cols()) {
        throw std::invalid_argument("determinant of a non-square matrix");
    }
    if (n == 0) {
        return Scalar(1);
    }
    Scalar sign(1);
    Scalar prev(1);
    for (Index k = 0; k + 1 < n; ++k) {
        if (A(k, k) == Scalar(0)) {
            Index swap_row = -1;
            for (Index i = k + 1; i < n; ++i) {
                if (A(i, k) != Scalar(0)) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row < 0) {
                return Scalar(0);
            }
            A.row(k).swap(A.row(swap_row));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i) {
            for (Index j = k + 1; j < n; ++j) {
                A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
            }
        }
        prev = A(k, k);
    }
    return sign * A(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Field routines.

template <typename Scalar>
struct RowReduced {
    Matrix<Scalar> R;
    std::vector<Index> pivot_cols;
};

template <typename Scalar>
RowReduced<Scalar> reduced_row_echelon(Matrix<Scalar> A)
{
    RowReduced<Scalar> out;
    const Index m = A.rows();
    const Index n = A.cols();
    Index r = 0;
    for (Index c = 0; c < n && r < m; ++c) {
        Index p = -1;
        for (Index i = r; i < m; ++i) {
            if (A(i, c) != Scalar(0)) {
                p = i;
                break;
            }
        }
        if (p < 0) {
            continue;
        }
        A.row(p).swap(A.row(r));
        const Scalar inv = Scalar(1) / A(r, c);
        A.row(r) *= inv;
        for (Index i = 0; i < m; ++i) {
            if (i != r && A(i, c) != Scalar(0)) {
                const Scalar f = A(i, c);
                A.row(i) -= A.row(r) * f;
            }
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.R = std::move(A);
    return out;
}

template <typename Scalar>
Index rank(const Matrix<Scalar>& A)
{
    return static_cast<Index>(reduced_row_echelon(A).pivot_cols.size());
}

/// Basis (rows) of { x : A x = 0 } over the field.
template <typename Scalar>
Matrix<Scalar> kernel_basis(const Matrix<Scalar>& A)
{
    const Index n = A.cols();
    auto rr = reduced_row_echelon(A);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (auto c : rr.pivot_cols) {
        is_pivot[static_cast<std::size_t>(c)] = true;
    }
    const Index dim = n - static_cast<Index>(rr.pivot_cols.size());
    Matrix<Scalar> K = Matrix<Scalar>::Zero(dim, n);
    Index k = 0;
    for (Index f = 0; f < n; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) {
            continue;
        }
        K(k, f) = Scalar(1);
        for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r) {
            K(k, rr.pivot_cols[r]) = -rr.R(static_cast<Index>(r), f);
        }
        ++k;
    }
    return K;
}

}  // namespace msd
