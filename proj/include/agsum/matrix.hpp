#ifndef AGSUM_MATRIX_HPP
#define AGSUM_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "agsum/field.hpp"

namespace agsum {

/// Row-major dense matrix over an exact field.
template <class K>
class DenseMatrix {
   public:
    DenseMatrix() = default;
    DenseMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, K::zero(field)) {}

    static DenseMatrix identity(const FieldSpec& field, std::size_t n);

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    K& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const K& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<K> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const K> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const K> values);
    void swap_rows(std::size_t a, std::size_t b);

    DenseMatrix transpose() const;
    bool is_zero() const;

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

   private:
    FieldSpec field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<K> data_;
};

template <class K>
DenseMatrix<K> operator*(const DenseMatrix<K>& a, const DenseMatrix<K>& b);

/// Row vector times matrix.
template <class K>
std::vector<K> times(std::span<const K> v, const DenseMatrix<K>& m);

template <class K>
struct RowEchelon {
    DenseMatrix<K> matrix;            ///< reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  ///< pivot column of each row
    std::size_t rank() const noexcept { return pivots.size(); }
};

/// Reduced row echelon form; pivots are taken left to right.
template <class K>
RowEchelon<K> reduced_row_echelon(DenseMatrix<K> m);

template <class K>
std::size_t rank(DenseMatrix<K> m);

// Lazy-reduction elimination over 64-bit words.
template <>
std::size_t rank<Fp>(DenseMatrix<Fp> m);

/// Columns of the result span ker(m); deterministic (one column per free
/// variable of the reduced echelon form, in increasing column order).
template <class K>
DenseMatrix<K> kernel_basis(const DenseMatrix<K>& m);

/// Throws std::domain_error if m is singular or not square.
template <class K>
DenseMatrix<K> inverse(const DenseMatrix<K>& m);

/// Echelon basis of a growing subspace of K^n, for independence tests and
/// coordinate extraction.
template <class K>
class IncrementalBasis {
   public:
    IncrementalBasis(const FieldSpec& field, std::size_t dim) : field_(field), dim_(dim) {}

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return rows_.size(); }
    bool full() const noexcept { return rows_.size() == dim_; }

    /// Reduces v against the current basis in place.
    void reduce(std::vector<K>& v) const;
    bool contains(std::vector<K> v) const;
    /// Adds v if independent; returns whether it was added.
    bool insert(std::vector<K> v);

    /// Coordinates c with v = sum c_i * inserted_i. Requires v in the span.
    std::vector<K> coordinates(std::vector<K> v) const;

   private:
    FieldSpec field_;
    std::size_t dim_;
    // rows_[i] has rows_[i][pivots_[i]] == 1 and zeros at all earlier pivots;
    // combos_[i] expresses rows_[i] through the inserted vectors.
    std::vector<std::vector<K>> rows_;
    std::vector<std::vector<K>> combos_;
    std::vector<std::size_t> pivots_;
};

}  // namespace agsum

#endif
