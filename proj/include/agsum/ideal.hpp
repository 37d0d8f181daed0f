#ifndef AGSUM_IDEAL_HPP
#define AGSUM_IDEAL_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "agsum/matrix.hpp"
#include "agsum/polynomial.hpp"

namespace agsum {

inline constexpr unsigned kDefaultDegreeCap = 64;

/// Ring plus homogeneous ideal generators, optionally with the dual generator
/// the ideal came from.
template <class K>
struct Presentation {
    Ring ring;
    std::vector<Polynomial<K>> ideal;
    std::optional<Polynomial<K>> dual_generator;
};

/// One graded piece of Q/I. Basis: standard monomials, chosen greedily from the
/// grevlex-largest monomial down. `nf` row i holds the coordinates of the i-th
/// monomial of degree d (descending grevlex) in that basis.
template <class K>
struct QuotientSlice {
    std::vector<Exponents> standard;
    DenseMatrix<K> nf;
    /// mult[k] is multiplication by variable k into the next degree (rows: this
    /// degree's basis). Empty until the next degree is known.
    std::vector<DenseMatrix<K>> mult;

    std::size_t dim() const noexcept { return standard.size(); }
};

/// Degreewise description of a homogeneous ideal I of Q = K[x_1..x_n], stored
/// as the quotient Q/I (normal forms and multiplication maps) per degree.
template <class K>
class IdealSlices {
   public:
    IdealSlices() = default;

    /// Ideal generated by `gens`, through degree dmax (or until Q/I vanishes).
    /// Throws std::invalid_argument naming the first non-homogeneous generator.
    static IdealSlices from_generators(Ring ring, std::vector<Polynomial<K>> gens, unsigned dmax);
    /// Keeps extending until Q/I vanishes; throws std::domain_error
    /// ("not Artinian within cap") otherwise.
    static IdealSlices artinian(Ring ring, std::vector<Polynomial<K>> gens, unsigned cap = kDefaultDegreeCap);
    /// Ann(F) under contraction, through degree deg F + 1.
    static IdealSlices annihilator(const Polynomial<K>& F);
    /// Degreewise intersection, through the degrees both inputs know.
    static IdealSlices intersection(const IdealSlices& a, const IdealSlices& b);

    /// Generator-built ideals only: computes further degrees.
    void extend_to(unsigned d);

    const Ring& ring() const noexcept { return ring_; }
    const FieldSpec& field() const { return ring_->field; }
    std::size_t nvars() const { return ring_->nvars(); }
    const std::vector<Polynomial<K>>& generators() const noexcept { return gens_; }

    /// Highest degree with a stored slice.
    unsigned computed_degree() const { return static_cast<unsigned>(slices_.size() - 1); }
    /// True when Q/I is known to vanish in every degree above computed_degree().
    bool vanishes_beyond() const noexcept { return vanishes_; }
    bool knows(unsigned d) const { return vanishes_ || d <= computed_degree(); }

    /// dim (Q/I)_d; throws std::out_of_range for unknown degrees.
    std::size_t hf(unsigned d) const;
    /// HF through the last nonzero degree; Artinian ideals only.
    std::vector<std::size_t> hilbert_function() const;
    /// Last degree with nonzero quotient (-1 for the unit ideal); Artinian only.
    int top_degree() const;

    const QuotientSlice<K>& slice(unsigned d) const;
    /// Multiplication by x_k from degree d to d+1.
    const DenseMatrix<K>& multiplication(unsigned d, std::size_t k) const;

    /// Coordinates in the basis of (Q/I)_d; every term of f must have degree d.
    std::vector<K> coordinates(const Polynomial<K>& f, unsigned d) const;
    /// Reduced form as a combination of standard monomials (any f).
    Polynomial<K> normal_form(const Polynomial<K>& f) const;
    bool contains(const Polynomial<K>& f) const;

    /// Echelon basis of I_d: each non-standard monomial minus its normal form.
    std::vector<Polynomial<K>> echelon_basis(unsigned d) const;
    /// Minimal homogeneous generators in canonical echelon form, by degree.
    std::vector<Polynomial<K>> minimal_generators() const;

    /// Socle elements of degree d (needs degree d+1), as standard-monomial combinations.
    std::vector<Polynomial<K>> socle_in_degree(unsigned d) const;
    /// Socle basis over all known degrees. Artinian only.
    std::vector<Polynomial<K>> socle_basis() const;

    /// F = sum over monomials m of degree D of phi(m) X^m, phi the top coordinate.
    /// Requires top-degree dimension 1.
    Polynomial<K> dual_generator() const;

    /// Degreewise equality through the degrees both sides know.
    bool same_ideal(const IdealSlices& other) const;
    /// I_d of `other` inside this ideal, for every degree both know.
    bool contains_ideal(const IdealSlices& other) const;
    bool contains_ideal_in_degree(const IdealSlices& other, unsigned d) const;
    /// dim (Q/(I+J))_d.
    std::size_t hf_of_sum(const IdealSlices& other, unsigned d) const;

   private:
    enum class Route { generators, fixed };

    void check_ring(const IdealSlices& other) const;
    void push_degree_zero(bool unit);
    // Picks standard monomials and normal forms from arbitrary images of the
    // degree-d monomials, then fills the multiplication maps from degree d-1.
    void push_from_images(const std::vector<std::vector<K>>& images, std::size_t space_dim);
    void compute_next_from_generators();
    // RREF of the commutation relations inside V (x) A_{d-1}.
    RowEchelon<K> commutation_echelon(unsigned d) const;
    // Image of a degree-d monomial in V (x) A_{d-1}.
    void monomial_into_tensor(const Exponents& m, const K& c, std::vector<K>& w) const;

    Ring ring_;
    std::vector<Polynomial<K>> gens_;
    std::vector<QuotientSlice<K>> slices_;
    Route route_ = Route::fixed;
    bool vanishes_ = false;
};

/// Quotient data used by the Gotzmann-style stopping rule: Hilbert function
/// either reaches 0 (Artinian) or becomes constant for good.
template <class K>
struct StableQuotient {
    IdealSlices<K> slices;
    bool artinian = false;
    unsigned stable_from = 0;     // first degree of the constant tail
    std::size_t stable_value = 0;  // 0 when Artinian
};

/// Extends degree by degree until the Hilbert function vanishes or persists as
/// a constant c > 0 (HF(d) = HF(d+1) = c <= d with d >= every generator degree,
/// after which Gotzmann persistence fixes it). Throws std::domain_error past `cap`.
template <class K>
StableQuotient<K> stabilize(Ring ring, std::vector<Polynomial<K>> gens, unsigned cap = kDefaultDegreeCap);

/// Ideal generated by the variables of `ring`'s block i times those of block j,
/// over all i < j.
template <class K>
std::vector<Polynomial<K>> cross_products(const Ring& ring);

}  // namespace agsum

#endif
