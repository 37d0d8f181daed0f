#ifndef AGSUM_APOLARITY_HPP
#define AGSUM_APOLARITY_HPP

#include <optional>
#include <string>

#include "agsum/ideal.hpp"

namespace agsum {

/// f o F under x_i o X^a = X^{a - e_i} (zero when a_i = 0). The dual ring
/// reuses the variable names of f's ring.
template <class K>
Polynomial<K> contract(const Polynomial<K>& f, const Polynomial<K>& F);

/// Matrix of Q_i -> Q'_{d-i}, f |-> f o F. Rows: monomials of degree i,
/// columns: monomials of degree d - i (both descending grevlex).
/// Throws std::out_of_range unless 0 <= i <= deg F.
template <class K>
DenseMatrix<K> catalecticant(const Polynomial<K>& F, int i);

/// Q/Ann(F) with minimal generators in canonical echelon form.
template <class K>
Presentation<K> annihilator(const Polynomial<K>& F);

/// The Thom class of A -> K: the canonical top-degree element s (the
/// grevlex-largest standard monomial) rescaled so that s o F = 1. Uses
/// A.dual_generator when present, otherwise recovers one from the ideal.
/// Throws std::domain_error ("not Gorenstein") unless the socle is 1-dimensional.
template <class K>
Polynomial<K> socle_and_thom_to_K(const Presentation<K>& A);

/// Same, from precomputed slices and an orientation F.
template <class K>
Polynomial<K> thom_class_to_K(const IdealSlices<K>& slices, const Polynomial<K>& F);

template <class K>
struct CsConditionReport {
    unsigned k = 0;               // deg F - deg tau
    bool literal_a = false;       // (a) for tau exactly as given
    bool a = false;               // (a) for the effective tau
    bool b = false;               // (b) for the effective tau
    std::optional<unsigned> first_failing_degree;
    // tau was a constant, F and G use disjoint variables, and (a) failed
    // literally: tau was re-read as sigma_F + sigma_G (T = K, k = 0).
    bool disjoint_variables = false;
    Polynomial<K> effective_tau;
    std::string detail;

    bool passed() const noexcept { return a && b; }
};

/// Conditions for F - G to present a connected sum over T = Q/Ann(tau o F):
/// (a) tau o F = tau o G != 0; (b) Ann(tau o F) = Ann(F) + Ann(G) in degrees 0..k+1.
/// Throws std::invalid_argument on ring mismatch or unequal degrees.
template <class K>
CsConditionReport<K> check_cs_conditions(const Polynomial<K>& F, const Polynomial<K>& G, const Polynomial<K>& tau);

}  // namespace agsum

#endif
