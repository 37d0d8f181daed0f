#include "agsum/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace agsum {

template <class K>
DenseMatrix<K> DenseMatrix<K>::identity(const FieldSpec& field, std::size_t n) {
    DenseMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K::one(field);
    return m;
}

template <class K>
void DenseMatrix<K>::append_row(std::span<const K> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

template <class K>
void DenseMatrix<K>::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

template <class K>
DenseMatrix<K> DenseMatrix<K>::transpose() const {
    DenseMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

template <class K>
bool DenseMatrix<K>::is_zero() const {
    for (const K& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

template <class K>
DenseMatrix<K> operator*(const DenseMatrix<K>& a, const DenseMatrix<K>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    DenseMatrix<K> out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const K& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
        }
    return out;
}

template <class K>
std::vector<K> times(std::span<const K> v, const DenseMatrix<K>& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("vector-matrix product: shape mismatch");
    std::vector<K> out(m.cols(), K::zero(m.field()));
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(k, j).is_zero()) out[j] += v[k] * m(k, j);
    }
    return out;
}

template <class K>
RowEchelon<K> reduced_row_echelon(DenseMatrix<K> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        m.swap_rows(r, p);
        const K inv = m(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const K f = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    DenseMatrix<K> out(m.field(), r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = m(i, j);
    return {std::move(out), std::move(pivots)};
}

template <class K>
std::size_t rank(DenseMatrix<K> m) {
    return reduced_row_echelon(std::move(m)).rank();
}

template <>
std::size_t rank<Fp>(DenseMatrix<Fp> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    const std::int64_t p = m.field().characteristic();
    std::vector<std::int64_t> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m(i, j).value();
    // Entries stay below (updates + 1) * (p-1)^2; reduce before overflow.
    const std::uint64_t sq = static_cast<std::uint64_t>(p - 1) * static_cast<std::uint64_t>(p - 1);
    const std::uint64_t limit = sq == 0 ? ~0ull : ((1ull << 62) / sq);
    std::vector<std::uint64_t> updates(rows, 0);
    auto reduce_row = [&](std::size_t i, std::size_t from) {
        std::int64_t* row = &a[i * cols];
        for (std::size_t j = from; j < cols; ++j) {
            row[j] %= p;
            if (row[j] < 0) row[j] += p;
        }
        updates[i] = 0;
    };
    auto inv_mod = [p](std::int64_t x) {
        return static_cast<std::int64_t>(Fp(static_cast<std::uint64_t>(x), static_cast<std::uint32_t>(p)).inverse().value());
    };
    std::vector<std::size_t> support;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            std::int64_t& x = a[i * cols + c];
            x %= p;
            if (x < 0) x += p;
            if (x != 0) {
                piv = i;
                break;
            }
        }
        if (piv == rows) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[r * cols + j], a[piv * cols + j]);
            std::swap(updates[r], updates[piv]);
        }
        reduce_row(r, c);
        const std::int64_t inv = inv_mod(a[r * cols + c]);
        std::int64_t* prow = &a[r * cols];
        support.clear();
        for (std::size_t j = c; j < cols; ++j) {
            prow[j] = (prow[j] * inv) % p;
            if (prow[j] != 0) support.push_back(j);
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            std::int64_t* row = &a[i * cols];
            std::int64_t f = row[c] % p;
            if (f < 0) f += p;
            if (f == 0) continue;
            if (updates[i] + 1 >= limit) reduce_row(i, c);
            const std::int64_t g = p - f;
            for (std::size_t j : support) row[j] += g * prow[j];
            ++updates[i];
        }
        ++r;
    }
    return r;
}

template <class K>
DenseMatrix<K> kernel_basis(const DenseMatrix<K>& m) {
    const std::size_t cols = m.cols();
    const RowEchelon<K> e = reduced_row_echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free.push_back(c);
    DenseMatrix<K> ker(m.field(), cols, free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        ker(free[k], k) = K::one(m.field());
        for (std::size_t i = 0; i < e.pivots.size(); ++i) ker(e.pivots[i], k) = -e.matrix(i, free[k]);
    }
    return ker;
}

template <class K>
DenseMatrix<K> inverse(const DenseMatrix<K>& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw std::domain_error("inverse of a non-square matrix");
    DenseMatrix<K> aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = K::one(m.field());
    }
    const RowEchelon<K> e = reduced_row_echelon(std::move(aug));
    if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) throw std::domain_error("matrix is singular");
    DenseMatrix<K> out(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = e.matrix(i, n + j);
    return out;
}

template <class K>
void IncrementalBasis<K>::reduce(std::vector<K>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const K f = v[pivots_[i]];
        if (f.is_zero()) continue;
        const auto& row = rows_[i];
        for (std::size_t j = 0; j < dim_; ++j)
            if (!row[j].is_zero()) v[j] -= f * row[j];
    }
}

template <class K>
bool IncrementalBasis<K>::contains(std::vector<K> v) const {
    reduce(v);
    for (const K& x : v)
        if (!x.is_zero()) return false;
    return true;
}

template <class K>
bool IncrementalBasis<K>::insert(std::vector<K> v) {
    if (v.size() != dim_) throw std::invalid_argument("IncrementalBasis: dimension mismatch");
    const std::size_t idx = combos_.empty() ? 0 : combos_.front().size();
    // combination tracking: start from e_idx, subtract as we reduce
    std::vector<K> combo(idx + 1, K::zero(field_));
    combo[idx] = K::one(field_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const K f = v[pivots_[i]];
        if (f.is_zero()) continue;
        const auto& row = rows_[i];
        for (std::size_t j = 0; j < dim_; ++j)
            if (!row[j].is_zero()) v[j] -= f * row[j];
        for (std::size_t j = 0; j < combos_[i].size(); ++j)
            if (!combos_[i][j].is_zero()) combo[j] -= f * combos_[i][j];
    }
    std::size_t piv = dim_;
    for (std::size_t j = 0; j < dim_; ++j)
        if (!v[j].is_zero()) {
            piv = j;
            break;
        }
    if (piv == dim_) return false;
    const K inv = v[piv].inverse();
    for (K& x : v) x *= inv;
    for (K& x : combo) x *= inv;
    // keep earlier rows reduced at the new pivot
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const K f = rows_[i][piv];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j)
            if (!v[j].is_zero()) rows_[i][j] -= f * v[j];
        combos_[i].resize(idx + 1, K::zero(field_));
        for (std::size_t j = 0; j <= idx; ++j)
            if (!combo[j].is_zero()) combos_[i][j] -= f * combo[j];
    }
    for (auto& c : combos_) c.resize(idx + 1, K::zero(field_));
    rows_.push_back(std::move(v));
    combos_.push_back(std::move(combo));
    pivots_.push_back(piv);
    return true;
}

template <class K>
std::vector<K> IncrementalBasis<K>::coordinates(std::vector<K> v) const {
    const std::size_t n = combos_.empty() ? 0 : combos_.front().size();
    std::vector<K> out(n, K::zero(field_));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const K f = v[pivots_[i]];
        if (f.is_zero()) continue;
        const auto& row = rows_[i];
        for (std::size_t j = 0; j < dim_; ++j)
            if (!row[j].is_zero()) v[j] -= f * row[j];
        for (std::size_t j = 0; j < n; ++j)
            if (!combos_[i][j].is_zero()) out[j] += f * combos_[i][j];
    }
    for (const K& x : v)
        if (!x.is_zero()) throw std::domain_error("IncrementalBasis: vector not in span");
    return out;
}

#define AGSUM_INSTANTIATE(K)                                                        \
    template class DenseMatrix<K>;                                                  \
    template DenseMatrix<K> operator*(const DenseMatrix<K>&, const DenseMatrix<K>&); \
    template std::vector<K> times(std::span<const K>, const DenseMatrix<K>&);       \
    template RowEchelon<K> reduced_row_echelon(DenseMatrix<K>);                     \
    template DenseMatrix<K> kernel_basis(const DenseMatrix<K>&);                    \
    template DenseMatrix<K> inverse(const DenseMatrix<K>&);                         \
    template class IncrementalBasis<K>;

AGSUM_INSTANTIATE(Rational)
AGSUM_INSTANTIATE(Fp)
template std::size_t rank<Rational>(DenseMatrix<Rational>);

#undef AGSUM_INSTANTIATE

}  // namespace agsum
