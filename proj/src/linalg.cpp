#include "hilbkit/linalg.hpp"

#include "hilbkit/error.hpp"

#include <utility>

namespace hilbkit {

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows)
{
    if (rows.empty())
        return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols())
            throw InvalidInput("ragged matrix rows");
        for (std::size_t c = 0; c < m.cols(); ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transposed() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (cols_ != o.rows_)
        throw InvalidInput("matrix dimension mismatch");
    Matrix p(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(r, k);
            if (a == 0)
                continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                p(r, c) += a * o(k, c);
        }
    return p;
}

Vector Matrix::operator*(const Vector& v) const
{
    if (cols_ != v.size())
        throw InvalidInput("matrix-vector dimension mismatch");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (v[c] != 0)
                out[r] += (*this)(r, c) * v[c];
    return out;
}

RowEchelon row_reduce(Matrix m)
{
    RowEchelon out;
    std::size_t prow = 0;
    for (std::size_t col = 0; col < m.cols() && prow < m.rows(); ++col) {
        std::size_t sel = prow;
        while (sel < m.rows() && m(sel, col) == 0)
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != prow)
            for (std::size_t c = col; c < m.cols(); ++c)
                std::swap(m(sel, c), m(prow, c));
        Scalar inv = 1 / m(prow, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            if (m(prow, c) != 0)
                m(prow, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == prow || m(r, col) == 0)
                continue;
            Scalar f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (m(prow, c) != 0)
                    m(r, c) -= f * m(prow, c);
        }
        out.pivots.push_back(col);
        ++prow;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m)
{
    return row_reduce(m).pivots.size();
}

std::vector<Vector> kernel_basis(const Matrix& m)
{
    RowEchelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Scalar determinant(Matrix m)
{
    if (m.rows() != m.cols())
        throw InvalidInput("determinant of a non-square matrix");
    Scalar det = 1;
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m(sel, col) == 0)
            ++sel;
        if (sel == n)
            return 0;
        if (sel != col) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(m(sel, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col) == 0)
                continue;
            Scalar f = m(r, col) / m(col, col);
            for (std::size_t c = col; c < n; ++c)
                m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m)
{
    const std::size_t n = m.rows();
    if (n != m.cols())
        throw InvalidInput("inverse of a non-square matrix");
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    RowEchelon e = row_reduce(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
        return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = e.reduced(r, n + c);
    return inv;
}

std::size_t rank_of(const std::vector<Vector>& vectors)
{
    if (vectors.empty())
        return 0;
    return rank(Matrix::from_rows(vectors));
}

}  // namespace hilbkit
