#pragma once

#include <cstddef>
#include <vector>

#include "monocrystal/errors.hpp"

namespace monocrystal {

/// Dense square matrix with 1-based (row, col) access, matching the usual
/// labelling of SL_{r+1} matrix entries.
template <class T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n) : n_(n), entries_(n * n, T(0)) {}

    static SquareMatrix identity(std::size_t n)
    {
        SquareMatrix m(n);
        for (std::size_t k = 1; k <= n; ++k)
            m(k, k) = T(1);
        return m;
    }

    std::size_t size() const { return n_; }

    T& operator()(std::size_t row, std::size_t col) { return entries_[(row - 1) * n_ + (col - 1)]; }
    const T& operator()(std::size_t row, std::size_t col) const { return entries_[(row - 1) * n_ + (col - 1)]; }

    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b)
    {
        if (a.n_ != b.n_)
            throw Error("matrix size mismatch");
        SquareMatrix out(a.n_);
        for (std::size_t i = 1; i <= a.n_; ++i)
            for (std::size_t k = 1; k <= a.n_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0))
                    continue;
                for (std::size_t j = 1; j <= a.n_; ++j) {
                    const T& bkj = b(k, j);
                    if (bkj == T(0))
                        continue;
                    out(i, j) += aik * bkj;
                }
            }
        return out;
    }

    /// Submatrix on the given (1-based) rows and columns.
    SquareMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const
    {
        if (rows.size() != cols.size())
            throw Error("submatrix must be square");
        SquareMatrix out(rows.size());
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t b = 0; b < cols.size(); ++b)
                out(a + 1, b + 1) = (*this)(static_cast<std::size_t>(rows[a]), static_cast<std::size_t>(cols[b]));
        return out;
    }

    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b)
    {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

private:
    std::size_t n_ = 0;
    std::vector<T> entries_;
};

} // namespace monocrystal
