#pragma once

#include <cstddef>
#include <vector>

#include "vsym/rows.hpp"

namespace vsym {

/// Dense matrix of ring elements; just enough linear algebra for
/// congruence checks and the 2x2 matrix encoding of length-4 rows.
struct Matrix {
    RingPtr ring;
    std::size_t rows = 0, cols = 0;
    std::vector<RingElement> a;  // row-major

    Matrix() = default;
    Matrix(RingPtr r, std::size_t nr, std::size_t nc)
        : ring(std::move(r)), rows(nr), cols(nc), a(nr * nc, elem(ring, Rational(0))) {}

    RingElement& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const RingElement& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Matrix identity(const RingPtr& r, std::size_t n) {
        Matrix m(r, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = elem(r, Rational(1));
        return m;
    }

    Matrix transpose() const {
        Matrix t(ring, cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols != o.rows) throw DimensionError("matrix product: size mismatch");
        Matrix r(ring, rows, o.cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0; k < cols; ++k)
                for (std::size_t j = 0; j < o.cols; ++j)
                    r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
        return r;
    }

    bool operator==(const Matrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }

    RingElement det2() const {
        if (rows != 2 || cols != 2) throw DimensionError("det2: expected 2x2");
        return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    }
};

/// Alternating matrix (M = -M^T, zero diagonal) of even size.
struct SkewMatrix {
    Matrix m;

    std::size_t size() const { return m.rows; }
    const RingPtr& ring() const { return m.ring; }
    const RingElement& at(std::size_t i, std::size_t j) const { return m.at(i, j); }
};

inline SkewMatrix skew_make(Matrix m) {
    if (m.rows != m.cols || m.rows % 2 != 0)
        throw DimensionError("skew matrix must be square of even size");
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (!m.at(i, i).is_zero())
            throw std::invalid_argument("skew matrix has nonzero diagonal entry");
        for (std::size_t j = i + 1; j < m.cols; ++j)
            if (m.at(i, j) != -m.at(j, i))
                throw std::invalid_argument("matrix is not alternating");
    }
    return {std::move(m)};
}

/// The standard 2x2 symplectic block psi_2 = [[0,-1],[1,0]], Pf = -1.
inline SkewMatrix psi2(const RingPtr& ring) {
    Matrix m(ring, 2, 2);
    m.at(0, 1) = elem(ring, Rational(-1));
    m.at(1, 0) = elem(ring, Rational(1));
    return {std::move(m)};
}

namespace detail {

inline RingElement pfaffian_rec(const Matrix& m, std::vector<std::size_t>& idx) {
    const std::size_t n = idx.size();
    if (n == 0) return elem(m.ring, Rational(1));
    if (n == 2) return m.at(idx[0], idx[1]);
    // expansion along the first remaining row:
    // Pf = sum_{j>=1} (-1)^j m[i0][ij] Pf(minor without i0, ij)
    RingElement acc = elem(m.ring, Rational(0));
    const std::size_t i0 = idx[0];
    for (std::size_t j = 1; j < n; ++j) {
        const RingElement& mij = m.at(i0, idx[j]);
        if (mij.is_zero()) continue;
        std::vector<std::size_t> rest;
        rest.reserve(n - 2);
        for (std::size_t k = 1; k < n; ++k)
            if (k != j) rest.push_back(idx[k]);
        RingElement sub = pfaffian_rec(m, rest);
        RingElement term = mij * sub;
        acc = (j % 2 == 1) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace detail

/// Pfaffian by recursive first-row expansion. Division-free, exact over any
/// quotient ring. Convention: Pf([[0,a],[-a,0]]) = a.
inline RingElement pfaffian(const SkewMatrix& M) {
    std::vector<std::size_t> idx(M.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return detail::pfaffian_rec(M.m, idx);
}

/// Skew matrix plus its cached Pfaffian; carrier of Witt-group
/// representatives. For Vaserstein symbols the Pfaffian is 1.
struct WittRep {
    SkewMatrix matrix;
    RingElement pf;
};

/// The Vaserstein symbol of a certified length-3 row (a_1,a_2,a_3) with
/// certificate (b_1,b_2,b_3):
///
///     (  0   -a1  -a2  -a3 )
///     (  a1   0   -b3   b2 )
///     (  a2   b3   0   -b1 )
///     (  a3  -b2   b1   0  )
///
/// Its Pfaffian equals sum a_i b_i, hence 1 for a certified row (asserted).
inline WittRep vaserstein_symbol(const UnimodularRow& row) {
    if (row.size() != 3)
        throw std::invalid_argument("vaserstein_symbol: row length must be 3");
    const auto& a = row.entries;
    const auto& b = row.certificate;
    Matrix m(row.ring, 4, 4);
    m.at(0, 1) = -a[0]; m.at(0, 2) = -a[1]; m.at(0, 3) = -a[2];
    m.at(1, 0) =  a[0]; m.at(1, 2) = -b[2]; m.at(1, 3) =  b[1];
    m.at(2, 0) =  a[1]; m.at(2, 1) =  b[2]; m.at(2, 3) = -b[0];
    m.at(3, 0) =  a[2]; m.at(3, 1) = -b[1]; m.at(3, 2) =  b[0];
    SkewMatrix sk = skew_make(std::move(m));
    RingElement pf = pfaffian(sk);
    if (!pf.is_one())
        throw std::logic_error("vaserstein_symbol: Pfaffian did not reduce to 1");
    return {std::move(sk), std::move(pf)};
}

/// Block-diagonal sum M ⊥ N with the row-ordered block embedding, for which
/// Pf(M ⊥ N) = Pf(M) * Pf(N) holds exactly (no extra sign in this
/// convention; asserted in tests for sizes up to 6).
inline SkewMatrix orthogonal_sum(const SkewMatrix& M, const SkewMatrix& N) {
    if (M.ring() != N.ring())
        throw std::invalid_argument("orthogonal_sum: ring mismatch");
    const std::size_t n1 = M.size(), n2 = N.size();
    Matrix r(M.ring(), n1 + n2, n1 + n2);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) r.at(i, j) = M.at(i, j);
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j) r.at(n1 + i, n1 + j) = N.at(i, j);
    return {std::move(r)};
}

/// true iff E^T * M * E == N entry-by-entry as exact ring identities.
inline bool congruence_check(const SkewMatrix& M, const Matrix& E, const SkewMatrix& N) {
    if (E.rows != M.size() || E.cols != N.size())
        throw DimensionError("congruence_check: size mismatch");
    return E.transpose() * M.m * E == N.m;
}

}  // namespace vsym
