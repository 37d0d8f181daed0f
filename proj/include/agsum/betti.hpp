#ifndef AGSUM_BETTI_HPP
#define AGSUM_BETTI_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace agsum {

/// Integer polynomial in (t, s), keyed by (t exponent, s exponent).
class BiPoly {
   public:
    using Key = std::pair<int, int>;

    BiPoly() = default;
    static BiPoly one() { return monomial(0, 0, 1); }
    static BiPoly monomial(int ti, int sj, std::int64_t c);
    /// (1 + s t)^n.
    static BiPoly koszul(unsigned n);

    const std::map<Key, std::int64_t>& terms() const noexcept { return terms_; }
    std::int64_t coefficient(int ti, int sj) const;
    void add(int ti, int sj, std::int64_t c);
    bool is_zero() const noexcept { return terms_.empty(); }

    friend BiPoly operator+(BiPoly a, const BiPoly& b);
    friend BiPoly operator-(BiPoly a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    /// "1 + 6*t*s^2 + ..." ordered by t then s exponent.
    std::string to_string() const;

   private:
    std::map<Key, std::int64_t> terms_;
};

/// Graded Betti numbers beta_{i,j}; only nonzero entries are stored.
class BettiTable {
   public:
    using Key = std::pair<int, int>;

    BettiTable() = default;
    /// Throws std::domain_error on negative coefficients or negative exponents.
    static BettiTable from_poincare(const BiPoly& p);
    BiPoly poincare() const;

    std::int64_t at(int i, int j) const;
    void set(int i, int j, std::int64_t value);
    void add(int i, int j, std::int64_t value);

    const std::map<Key, std::int64_t>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }
    /// Largest homological degree with a nonzero entry (-1 if empty).
    int length() const;
    /// max (j - i) over entries.
    int regularity() const;
    std::vector<std::int64_t> totals() const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

   private:
    std::map<Key, std::int64_t> entries_;
};

/// Cell-level differences "(i,j): a vs b", empty when equal.
std::vector<std::string> betti_diff(const BettiTable& a, const BettiTable& b);

/// Macaulay2-style rendering: header of homological degrees, total row, rows
/// labelled by j - i, '.' for zero.
std::string render_betti(const BettiTable& table);

/// beta_{i,i+1} of Q/(x) intersect (y) with m and n variables: C(m+n,i+1) - C(m,i+1) - C(n,i+1).
std::int64_t betti_cross_ideal(unsigned m, unsigned n, int i);
/// 1 + sum_i betti_cross_ideal(m,n,i) t^i s^{i+1}.
BiPoly cross_ideal_poincare(unsigned m, unsigned n);

/// beta_{t,t+1} of Q modulo all cross products between r variable blocks:
/// (r-1) C(N,t+1) - sum_k C(N - n_k, t+1).
std::int64_t betti_cross_ideal_multi(const std::vector<unsigned>& n_vec, int t);
BiPoly cross_ideal_multi_poincare(const std::vector<unsigned>& n_vec);

/// P * (1 + s t)^extra.
BettiTable inflate_betti(const BettiTable& table, unsigned extra);
/// (P - 1) * (1 + s t)^extra.
BettiTable inflate_betti_reduced(const BettiTable& table, unsigned extra);

/// Tables are over each factor's own polynomial ring. Throws
/// std::invalid_argument if a factor has a linear generator or lacks (0,0) = 1.
BettiTable betti_fiber_product_K(const std::vector<BettiTable>& tables, const std::vector<unsigned>& n_vec);

/// Requires e >= 3 and Gorenstein-symmetric factor tables with top entry
/// (n_k, e + n_k) = 1.
BettiTable betti_connected_sum_K(const std::vector<BettiTable>& tables, const std::vector<unsigned>& n_vec, int e);

/// Gorenstein algebras of socle degree 2 with n = HF(1) >= 1.
BettiTable betti_socle2(unsigned n);

/// s^{N+e} t^N P(1/t, 1/s). Throws std::logic_error on negative exponents.
BiPoly poincare_dualize(const BiPoly& p, int N, int e);

/// Koszul complex of a regular sequence of the given degrees.
BettiTable complete_intersection_betti(const std::vector<unsigned>& degrees);

}  // namespace agsum

#endif
