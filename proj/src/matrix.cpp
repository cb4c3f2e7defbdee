#include "ncmot/matrix.hpp"

#include <algorithm>

namespace ncmot {

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

bool RatMatrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Rational& q) { return q == 0; });
}

RatMatrix RatMatrix::transpose() const
{
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw Error("DimensionMismatch", "matrix product shape mismatch");
    RatMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(r, k);
            if (a == 0)
                continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                const Rational& b = rhs.at(k, c);
                if (b != 0)
                    out.at(r, c) += a * b;
            }
        }
    return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw Error("DimensionMismatch", "matrix sum shape mismatch");
    RatMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] + rhs.entries_[i];
    return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const
{
    return *this + rhs.scaled(Rational(-1));
}

RatMatrix RatMatrix::scaled(const Rational& s) const
{
    RatMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] * s;
    return out;
}

RatVector RatMatrix::apply(const RatVector& v) const
{
    if (v.size() != cols_)
        throw Error("DimensionMismatch", "matrix-vector shape mismatch");
    RatVector out(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (at(r, c) != 0 && v[c] != 0)
                out[r] += at(r, c) * v[c];
    return out;
}

RatVector RatMatrix::apply_left(const RatVector& v) const
{
    if (v.size() != rows_)
        throw Error("DimensionMismatch", "vector-matrix shape mismatch");
    RatVector out(cols_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r) {
        if (v[r] == 0)
            continue;
        for (std::size_t c = 0; c < cols_; ++c)
            if (at(r, c) != 0)
                out[c] += v[r] * at(r, c);
    }
    return out;
}

std::size_t rank(const RatMatrix& m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0)
        return 0;

    // Clear denominators row by row, then run Bareiss on integers.
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class lcm = 1;
        for (std::size_t c = 0; c < cols; ++c)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(r, c).get_den().get_mpz_t());
        for (std::size_t c = 0; c < cols; ++c)
            a[r][c] = m.at(r, c).get_num() * (lcm / m.at(r, c).get_den());
    }

    std::size_t rk = 0;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
        // Pivot: smallest nonzero absolute value, to bound growth.
        std::size_t pivot = rows;
        for (std::size_t r = rk; r < rows; ++r) {
            if (a[r][c] == 0)
                continue;
            if (pivot == rows || mpz_cmpabs(a[r][c].get_mpz_t(), a[pivot][c].get_mpz_t()) < 0)
                pivot = r;
        }
        if (pivot == rows)
            continue;
        std::swap(a[rk], a[pivot]);
        for (std::size_t r = rk + 1; r < rows; ++r) {
            for (std::size_t k = c + 1; k < cols; ++k) {
                mpz_class t = a[rk][c] * a[r][k] - a[r][c] * a[rk][k];
                mpz_divexact(a[r][k].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[r][c] = 0;
        }
        prev = a[rk][c];
        ++rk;
    }
    return rk;
}

std::vector<std::size_t> rref_in_place(RatMatrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        // Partial pivoting by absolute numerator size.
        std::size_t pivot = m.rows();
        for (std::size_t r = lead; r < m.rows(); ++r) {
            if (m.at(r, c) == 0)
                continue;
            if (pivot == m.rows() ||
                mpz_cmpabs(m.at(r, c).get_num().get_mpz_t(),
                           m.at(pivot, c).get_num().get_mpz_t()) < 0)
                pivot = r;
        }
        if (pivot == m.rows())
            continue;
        if (pivot != lead)
            for (std::size_t k = 0; k < m.cols(); ++k)
                std::swap(m.at(lead, k), m.at(pivot, k));
        Rational inv = 1 / m.at(lead, c);
        for (std::size_t k = c; k < m.cols(); ++k)
            m.at(lead, k) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || m.at(r, c) == 0)
                continue;
            Rational f = m.at(r, c);
            for (std::size_t k = c; k < m.cols(); ++k)
                m.at(r, k) -= f * m.at(lead, k);
        }
        pivots.push_back(c);
        ++lead;
    }
    return pivots;
}

std::vector<RatVector> kernel_basis(const RatMatrix& m)
{
    RatMatrix r = m;
    std::vector<std::size_t> pivots = rref_in_place(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots)
        is_pivot[c] = true;

    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        RatVector v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -r.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<RatVector> pairing_radical(const RatMatrix& g)
{
    // x^T G = 0  <=>  G^T x = 0.
    return kernel_basis(g.transpose());
}

RatMatrix columns_to_matrix(const std::vector<RatVector>& cols, std::size_t dim)
{
    RatMatrix m(dim, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != dim)
            throw Error("DimensionMismatch", "column length mismatch");
        for (std::size_t r = 0; r < dim; ++r)
            m.at(r, c) = cols[c][r];
    }
    return m;
}

bool solve_in_span(const RatMatrix& basis_cols, const RatVector& v, RatVector* coords)
{
    const std::size_t n = basis_cols.rows(), k = basis_cols.cols();
    if (v.size() != n)
        throw Error("DimensionMismatch", "solve_in_span shape mismatch");
    RatMatrix aug(n, k + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < k; ++c)
            aug.at(r, c) = basis_cols.at(r, c);
        aug.at(r, k) = v[r];
    }
    std::vector<std::size_t> pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == k)
        return false;  // inconsistent
    if (coords) {
        coords->assign(k, Rational(0));
        for (std::size_t i = 0; i < pivots.size(); ++i)
            (*coords)[pivots[i]] = aug.at(i, k);
    }
    return true;
}

bool in_span(const RatMatrix& basis_cols, const RatVector& v)
{
    return solve_in_span(basis_cols, v, nullptr);
}

}  // namespace ncmot
