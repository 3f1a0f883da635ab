#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "flrs/errors.hpp"

namespace flrs {

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    T& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

    const std::vector<T>& data() const noexcept { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Result of Gauss-Jordan elimination: pivot column of each nonzero row.
struct Echelon {
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const noexcept { return pivot_cols.size(); }
};

/**
 * In-place reduced row echelon form over the field `K`, pivoting on the first
 * nonzero entry. Only the first `pivot_limit` columns are eligible as pivots;
 * the remaining columns are carried along (augmented part).
 */
template <class K>
Echelon reduce_rows(const K& field, Matrix<typename K::value_type>& a, std::size_t pivot_limit) {
    Echelon ech;
    std::size_t r = 0;
    const std::size_t limit = pivot_limit < a.cols() ? pivot_limit : a.cols();
    for (std::size_t c = 0; c < limit && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && field.is_zero(a(p, c))) ++p;
        if (p == a.rows()) continue;
        if (p != r) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        }
        const auto inv = field.inv(a(r, c));
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = field.mul(a(r, j), inv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || field.is_zero(a(i, c))) continue;
            const auto f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = field.sub(a(i, j), field.mul(f, a(r, j)));
        }
        ech.pivot_cols.push_back(c);
        ++r;
    }
    return ech;
}

template <class K>
Echelon reduce_rows(const K& field, Matrix<typename K::value_type>& a) {
    return reduce_rows(field, a, a.cols());
}

template <class K>
std::size_t rank(const K& field, Matrix<typename K::value_type> a) {
    return reduce_rows(field, a).rank();
}

/**
 * Basis of the right kernel {v : M v = 0}.
 *
 * The basis is returned in reduced row echelon form (as the rows of a matrix),
 * so it depends only on the kernel itself and not on the elimination order.
 */
template <class K>
std::vector<std::vector<typename K::value_type>> kernel_basis(const K& field, Matrix<typename K::value_type> m) {
    using V = typename K::value_type;
    const Echelon ech = reduce_rows(field, m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : ech.pivot_cols) is_pivot[c] = true;

    Matrix<V> basis(n - ech.rank(), n, field.zero());
    std::size_t b = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        basis(b, f) = field.one();
        for (std::size_t r = 0; r < ech.rank(); ++r) basis(b, ech.pivot_cols[r]) = field.neg(m(r, f));
        ++b;
    }
    reduce_rows(field, basis);

    std::vector<std::vector<V>> out;
    out.reserve(basis.rows());
    for (std::size_t r = 0; r < basis.rows(); ++r) out.emplace_back(basis.row(r).begin(), basis.row(r).end());
    return out;
}

template <class K>
Matrix<typename K::value_type> multiply(const K& field, const Matrix<typename K::value_type>& a,
                                        const Matrix<typename K::value_type>& b) {
    if (a.cols() != b.rows()) throw ParameterError("matrix_shape", "matrix product shape mismatch");
    Matrix<typename K::value_type> c(a.rows(), b.cols(), field.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            if (field.is_zero(a(i, l))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = field.add(c(i, j), field.mul(a(i, l), b(l, j)));
        }
    return c;
}

template <class K>
std::vector<typename K::value_type> multiply(const K& field, const Matrix<typename K::value_type>& a,
                                             std::span<const typename K::value_type> v) {
    if (a.cols() != v.size()) throw ParameterError("matrix_shape", "matrix-vector shape mismatch");
    std::vector<typename K::value_type> out(a.rows(), field.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i] = field.add(out[i], field.mul(a(i, j), v[j]));
    return out;
}

}  // namespace flrs
