#ifndef AGSUM_RESOLUTION_HPP
#define AGSUM_RESOLUTION_HPP

#include <cstddef>
#include <vector>

#include "agsum/betti.hpp"
#include "agsum/ideal.hpp"

namespace agsum {

struct OracleLimits {
    std::size_t max_vars = 8;
    std::size_t max_dim = 2000;  // dim_K A
    bool check_d_squared = false;
};

/// HF of Q/I through the socle degree. Throws std::domain_error
/// ("not Artinian within cap") if the quotient survives past `cap`.
template <class K>
std::vector<std::size_t> hilbert_function(const Presentation<K>& A, unsigned cap = kDefaultDegreeCap);

/// beta_{i,j} = dim Tor_i(A, K)_j from the homology of the Koszul complex
/// on the variables tensored with A. Checks the Euler characteristic against
/// HF(s)(1-s)^n and throws std::logic_error on mismatch; throws
/// std::length_error when the limits are exceeded.
template <class K>
BettiTable tor_betti(const IdealSlices<K>& A, const OracleLimits& limits = {});

/// Also accepts quotients whose Hilbert function settles at a positive
/// constant (dimension one); their tables are computed through the
/// stabilization degree, where Gotzmann persistence bounds the regularity.
template <class K>
BettiTable tor_betti(const Presentation<K>& A, const OracleLimits& limits = {});

/// Homogeneous socle representatives, by degree.
template <class K>
std::vector<Polynomial<K>> socle_basis(const Presentation<K>& A);

/// Alternating sums sum_i (-1)^i beta_{i,j}, indexed by j.
std::vector<long long> euler_characteristic(const BettiTable& t);
/// Coefficients of h(s) (1-s)^n.
std::vector<long long> hilbert_times_koszul(const std::vector<std::size_t>& h, std::size_t n);

}  // namespace agsum

#endif
