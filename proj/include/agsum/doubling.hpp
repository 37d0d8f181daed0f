#ifndef AGSUM_DOUBLING_HPP
#define AGSUM_DOUBLING_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "agsum/ideal.hpp"

namespace agsum {

template <class K>
struct Cm1Result {
    bool cohen_macaulay = false;
    std::vector<long long> h_vector;   // HF series = h(s) / (1 - s)
    std::vector<std::size_t> hilbert;  // HF through stable_from
    unsigned stable_from = 0;
    std::size_t stable_value = 0;
    std::string detail;
    IdealSlices<K> slices;
};

/// Q/J one-dimensional and Cohen-Macaulay: the Hilbert function settles at a
/// positive constant and Q/J has no socle up to max(stabilization degree,
/// generator degrees) + 1. Throws std::domain_error when the dimension is not 1.
template <class K>
Cm1Result<K> cm1_check(const Presentation<K>& J, unsigned cap = kDefaultDegreeCap);

/// Hilbert function of the canonical module of a 1-dimensional CM algebra with
/// h-vector h: coefficient of s^q in sum_i h_i s^{1-i} / (1 - s).
struct CanonicalHilbert {
    int start_degree = 0;             // first degree with a nonzero value
    std::vector<std::size_t> values;  // degrees start_degree .. 1
    std::size_t stable = 0;           // value in every degree >= 1

    std::size_t at(int q) const;
};

CanonicalHilbert canonical_hilbert(const std::vector<long long>& h);

struct CertificateCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct DoublingCertificate {
    std::vector<CertificateCheck> checks;  // containment, cm1, gorenstein, shift, hilbert_match
    bool pass = false;
    int t = -1;
    std::vector<std::size_t> quotient_hilbert;  // dim I_d / J_d from degree 0
    std::vector<std::string> notes;

    /// "PASS t=3" or "FAIL: <check>: <detail>".
    std::string verdict() const;
};

/// Necessary conditions for Q/I to be a doubling of Q/J. J not contained in I
/// is reported as a failed check, not thrown.
template <class K>
DoublingCertificate doubling_certificate(const Presentation<K>& J, const Presentation<K>& I,
                                         unsigned cap = kDefaultDegreeCap);

/// Certifies each factor pair, builds J from the fiber product of the tilde
/// factors and I from the connected sum of the doubled ones, and certifies the
/// pair. Throws std::invalid_argument naming the first factor that fails its
/// own certificate, or on unequal socle degrees.
template <class K>
DoublingCertificate doubling_harness(const std::vector<Presentation<K>>& tilde_factors,
                                      const std::vector<Presentation<K>>& doubled_factors);

/// The monomial complete-intersection family: factor i has exponents
/// degrees[i] (all >= 2) in fresh variables x<i>_<j>; the tilde factor drops
/// the last power. Returns {tilde, doubled}.
template <class K>
std::pair<std::vector<Presentation<K>>, std::vector<Presentation<K>>> monomial_ci_family(
    const FieldSpec& field, const std::vector<std::vector<unsigned>>& degrees);

}  // namespace agsum

#endif
