#pragma once

#include <vector>

#include "wpl/errors.hpp"

namespace wpl {

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Int> row(std::size_t r) const;
    std::vector<Int> col(std::size_t c) const;
    std::vector<std::vector<Int>> to_rows() const;

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
Int bareiss_determinant(const IntMatrix& m);

/// Integer basis of {y in Z^n : sum_k v_k y_k = 0}, returned as rows.
/// The basis is obtained by unimodular column reduction of v.
std::vector<std::vector<Int>> integer_kernel_basis(const std::vector<Int>& v);

} // namespace wpl
