#include "agsum/resolution.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace agsum {

template <class K>
std::vector<std::size_t> hilbert_function(const Presentation<K>& A, unsigned cap) {
    return IdealSlices<K>::artinian(A.ring, A.ideal, cap).hilbert_function();
}

std::vector<long long> euler_characteristic(const BettiTable& t) {
    std::vector<long long> out;
    for (const auto& [k, c] : t.entries()) {
        const auto j = static_cast<std::size_t>(k.second);
        if (out.size() <= j) out.resize(j + 1, 0);
        out[j] += (k.first % 2 == 0 ? 1 : -1) * c;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<long long> hilbert_times_koszul(const std::vector<std::size_t>& h, std::size_t n) {
    std::vector<long long> out(h.size() + n, 0);
    for (std::size_t a = 0; a < h.size(); ++a)
        for (std::size_t q = 0; q <= n; ++q)
            out[a + q] += static_cast<long long>(h[a]) * binomial(static_cast<long long>(n), static_cast<long long>(q)) *
                          (q % 2 == 0 ? 1 : -1);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

namespace {

// Subsets of {0..n-1} of size i as bitmasks, in increasing numeric order of
// their sorted index lists (lexicographic).
std::vector<std::uint32_t> subsets_of_size(std::size_t n, std::size_t i) {
    std::vector<std::uint32_t> out;
    std::vector<std::size_t> idx(i);
    std::iota(idx.begin(), idx.end(), 0);
    if (i > n) return out;
    for (;;) {
        std::uint32_t mask = 0;
        for (std::size_t v : idx) mask |= 1u << v;
        out.push_back(mask);
        std::size_t p = i;
        while (p > 0 && idx[p - 1] == n - i + p - 1) --p;
        if (p == 0) break;
        ++idx[p - 1];
        for (std::size_t q = p; q < i; ++q) idx[q] = idx[q - 1] + 1;
    }
    return out;
}

template <class K>
class KoszulComplex {
   public:
    KoszulComplex(const IdealSlices<K>& A, std::size_t top) : A_(A), n_(A.nvars()), top_(top) {
        position_.assign(std::size_t{1} << n_, 0);
        subsets_.resize(n_ + 1);
        for (std::size_t i = 0; i <= n_; ++i) {
            subsets_[i] = subsets_of_size(n_, i);
            for (std::size_t p = 0; p < subsets_[i].size(); ++p) position_[subsets_[i][p]] = p;
        }
    }

    // d_i : Lambda^i (x) A_a -> Lambda^{i-1} (x) A_{a+1}
    DenseMatrix<K> differential(std::size_t i, std::size_t a) const {
        const FieldSpec& f = A_.field();
        const std::size_t h = a <= top_ ? A_.hf(static_cast<unsigned>(a)) : 0;
        const std::size_t h1 = a + 1 <= top_ ? A_.hf(static_cast<unsigned>(a + 1)) : 0;
        const auto& src = subsets_[i];
        const auto& dst = subsets_[i - 1];
        DenseMatrix<K> m(f, src.size() * h, dst.size() * h1);
        if (h == 0 || h1 == 0) return m;
        for (std::size_t p = 0; p < src.size(); ++p) {
            const std::uint32_t S = src[p];
            std::size_t pos = 0;
            for (std::size_t k = 0; k < n_; ++k) {
                if (!(S >> k & 1u)) continue;
                const std::size_t q = position_[S & ~(1u << k)];
                const auto& mk = A_.multiplication(static_cast<unsigned>(a), k);
                const bool negative = pos % 2 == 1;
                for (std::size_t b = 0; b < h; ++b)
                    for (std::size_t c = 0; c < h1; ++c) {
                        const K& x = mk(b, c);
                        if (x.is_zero()) continue;
                        m(p * h + b, q * h1 + c) = negative ? -x : x;
                    }
                ++pos;
            }
        }
        return m;
    }

   private:
    const IdealSlices<K>& A_;
    std::size_t n_;
    std::size_t top_;
    std::vector<std::vector<std::uint32_t>> subsets_;
    std::vector<std::size_t> position_;
};

}  // namespace

namespace {

void check_vars(std::size_t n, const OracleLimits& limits) {
    if (n > limits.max_vars || n > 24)
        throw std::length_error("oracle scale cap exceeded: " + std::to_string(n) + " variables (limit " +
                                std::to_string(limits.max_vars) + ")");
}

void check_dim(std::size_t total, const OracleLimits& limits) {
    if (total > limits.max_dim)
        throw std::length_error("oracle scale cap exceeded: dim A = " + std::to_string(total) + " (limit " +
                                std::to_string(limits.max_dim) + ")");
}

// Rows a = 0..rows of the Betti table (beta_{i,i+a}); A must be computed
// through degree rows + 1 (or vanish past `top`).
template <class K>
BettiTable koszul_rows(const IdealSlices<K>& A, std::size_t top, std::size_t rows, const OracleLimits& limits) {
    const std::size_t n = A.nvars();
    KoszulComplex<K> kc(A, top);
    auto h = [&](std::size_t a) -> std::size_t { return a <= top ? A.hf(static_cast<unsigned>(a)) : 0; };

    // rk[i][a] = rank of d_i on Lambda^i (x) A_a, for 1 <= i <= n
    std::vector<std::vector<std::size_t>> rk(n + 2, std::vector<std::size_t>(rows + 2, 0));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t a = 0; a <= rows && a + 1 <= top; ++a) {
            DenseMatrix<K> d = kc.differential(i, a);
            if (limits.check_d_squared && i >= 2 && a + 2 <= top) {
                const DenseMatrix<K> next = kc.differential(i - 1, a + 1);
                if (!(d * next).is_zero())
                    throw std::logic_error("Koszul differential does not square to zero at (" + std::to_string(i) + "," +
                                           std::to_string(a) + ")");
            }
            rk[i][a] = rank(std::move(d));
        }
    BettiTable table;
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t a = 0; a <= rows; ++a) {
            const long long chain = binomial(static_cast<long long>(n), static_cast<long long>(i)) * static_cast<long long>(h(a));
            const long long out_rank = i >= 1 ? static_cast<long long>(rk[i][a]) : 0;
            const long long in_rank = (i + 1 <= n && a >= 1) ? static_cast<long long>(rk[i + 1][a - 1]) : 0;
            const long long beta = chain - out_rank - in_rank;
            if (beta < 0) throw std::logic_error("negative Koszul homology dimension");
            table.set(static_cast<int>(i), static_cast<int>(i + a), beta);
        }
    return table;
}

}  // namespace

template <class K>
BettiTable tor_betti(const IdealSlices<K>& A, const OracleLimits& limits) {
    check_vars(A.nvars(), limits);
    const auto h = A.hilbert_function();
    check_dim(std::accumulate(h.begin(), h.end(), std::size_t{0}), limits);
    if (h.empty()) return {};  // unit ideal: A = 0
    const std::size_t top = h.size() - 1;
    BettiTable table = koszul_rows(A, top, top, limits);
    if (euler_characteristic(table) != hilbert_times_koszul(h, A.nvars()))
        throw std::logic_error("Euler characteristic of the Betti table disagrees with the Hilbert function");
    return table;
}

template <class K>
BettiTable tor_betti(const Presentation<K>& A, const OracleLimits& limits) {
    check_vars(A.ring->nvars(), limits);
    auto st = stabilize(A.ring, A.ideal);
    if (st.artinian) return tor_betti(st.slices, limits);

    // Past the stabilization degree R the ideal is R-regular (Gotzmann), so
    // rows a < R hold everything and row R must come out zero.
    unsigned R = st.stable_from;
    for (const auto& g : A.ideal) R = std::max(R, static_cast<unsigned>(std::max(g.degree(), 0)));
    const std::size_t n = A.ring->nvars();
    st.slices.extend_to(R + static_cast<unsigned>(n) + 1);
    std::vector<std::size_t> h;
    for (unsigned d = 0; d <= R + n; ++d) h.push_back(st.slices.hf(d));
    check_dim(std::accumulate(h.begin(), h.begin() + R + 2, std::size_t{0}), limits);
    BettiTable table = koszul_rows(st.slices, R + 1, R, limits);
    for (const auto& [k, c] : table.entries())
        if (k.second - k.first == static_cast<int>(R))
            throw std::logic_error("Betti table of a 1-dimensional quotient does not stop by row " + std::to_string(R));
    // Compare coefficients of s^0..s^(R+n); beyond that the truncated product is meaningless.
    auto lhs = euler_characteristic(table);
    auto rhs = hilbert_times_koszul(h, n);
    lhs.resize(R + n + 1, 0);
    rhs.resize(R + n + 1, 0);
    if (lhs != rhs)
        throw std::logic_error("Euler characteristic of the Betti table disagrees with the Hilbert function");
    return table;
}

template <class K>
std::vector<Polynomial<K>> socle_basis(const Presentation<K>& A) {
    return IdealSlices<K>::artinian(A.ring, A.ideal).socle_basis();
}

#define AGSUM_INSTANTIATE(K)                                                                   \
    template std::vector<std::size_t> hilbert_function(const Presentation<K>&, unsigned);      \
    template BettiTable tor_betti(const IdealSlices<K>&, const OracleLimits&);                 \
    template BettiTable tor_betti(const Presentation<K>&, const OracleLimits&);                \
    template std::vector<Polynomial<K>> socle_basis(const Presentation<K>&);

AGSUM_INSTANTIATE(Rational)
AGSUM_INSTANTIATE(Fp)

#undef AGSUM_INSTANTIATE

}  // namespace agsum
