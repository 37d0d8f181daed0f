#ifndef AGSUM_CONSTRUCTIONS_HPP
#define AGSUM_CONSTRUCTIONS_HPP

#include <cstddef>
#include <vector>

#include "agsum/apolarity.hpp"
#include "agsum/ideal.hpp"

namespace agsum {

enum class ConstructionKind { fiber_product, connected_sum };

template <class K>
struct ConstructionResult {
    ConstructionKind kind = ConstructionKind::fiber_product;
    Presentation<K> presentation;  // over the joined ring, one block per factor
    IdealSlices<K> slices;
    std::vector<std::size_t> hilbert;
    int socle_degree = -1;  // connected sums only
};

/// Joined ring and the generators a_1 + ... + a_r + cross products, without
/// computing anything degreewise (factors need not be Artinian).
template <class K>
Presentation<K> fiber_product_presentation(const std::vector<Presentation<K>>& factors);

/// Q/(a_1 + ... + a_r + all cross products between factor variables).
/// Throws std::invalid_argument for fewer than two factors, shared variable
/// names, mismatched fields or linear forms in some a_i.
template <class K>
ConstructionResult<K> fiber_product_K(const std::vector<Presentation<K>>& factors);

/// Connected sum over K of AG factors of equal socle degree d >= 1, built twice:
/// from the fiber product plus sigma_1 + sigma_i, and as Ann(F_1 - F_2 - ... - F_r).
/// A disagreement between the two throws std::logic_error with both ideals.
/// Factors without a dual generator get one recovered from their ideal.
template <class K>
ConstructionResult<K> connected_sum_K(const std::vector<Presentation<K>>& factors);

template <class K>
struct TwoFactorConstruction {
    ConstructionResult<K> fiber_product;  // Q/(Ann F intersect Ann G)
    ConstructionResult<K> connected_sum;  // Q/Ann(F - G)
    Presentation<K> T;                    // Q/Ann(tau o F)
    CsConditionReport<K> conditions;
};

/// Two-factor construction over T = Q/Ann(tau o F) for F, G in one ring.
/// Throws std::invalid_argument when F, G are linearly dependent or a
/// condition fails (the message names it).
template <class K>
TwoFactorConstruction<K> connected_sum_T(const Polynomial<K>& F, const Polynomial<K>& G, const Polynomial<K>& tau);

/// Fiber product: sum HF_i - (r-1) HF_T. Connected sum:
/// sum HF_i - (r-1)(1 + s^{d-k}) HF_T. Throws std::domain_error
/// ("inconsistent inputs") if a coefficient goes negative.
std::vector<std::size_t> hilbert_closed_form(ConstructionKind kind, const std::vector<std::vector<std::size_t>>& factor_hfs,
                                             unsigned d = 0, const std::vector<std::size_t>& hf_T = {1}, unsigned k = 0);

}  // namespace agsum

#endif
