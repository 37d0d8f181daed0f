#ifndef AGSUM_POLYNOMIAL_HPP
#define AGSUM_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "agsum/field.hpp"

namespace agsum {

/// Polynomial ring K[x_1..x_n], standard grading. `blocks` optionally records
/// consecutive groups of variables (one per tensor factor).
struct RingSpec {
    std::vector<std::string> variables;
    FieldSpec field;
    std::vector<std::size_t> blocks;  // sizes; empty means "no partition"

    std::size_t nvars() const noexcept { return variables.size(); }
    /// Index of `name`, or npos.
    std::size_t index_of(std::string_view name) const;

    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

using Ring = std::shared_ptr<const RingSpec>;

/// Validates names (ASCII identifiers, distinct) and blocks.
Ring make_ring(std::vector<std::string> variables, FieldSpec field, std::vector<std::size_t> blocks = {});

/// Concatenates variable lists, one block per input ring. Throws on shared
/// names or mismatched fields.
Ring join_rings(const std::vector<Ring>& rings);

bool same_ring(const Ring& a, const Ring& b);

using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);
/// Graded reverse lexicographic comparison: negative, zero or positive.
int grevlex_compare(const Exponents& a, const Exponents& b);

struct GrevlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const { return grevlex_compare(a, b) > 0; }
};

/// All exponent vectors of degree d in n variables, descending grevlex.
std::vector<Exponents> monomial_basis(std::size_t n, unsigned d);
/// Position of e inside monomial_basis(e.size(), total_degree(e)).
std::size_t monomial_rank(const Exponents& e);
/// C(d + n - 1, n - 1).
std::size_t monomial_count(std::size_t n, unsigned d);

/// Binomial coefficient, 0 outside 0 <= b <= a.
long long binomial(long long a, long long b);

std::string format_monomial(const RingSpec& ring, const Exponents& e);

template <class K>
class Polynomial {
   public:
    using Terms = std::map<Exponents, K, GrevlexGreater>;

    Polynomial() = default;
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

    static Polynomial constant(Ring ring, const K& c);
    static Polynomial monomial(Ring ring, Exponents e, const K& c);
    static Polynomial variable(Ring ring, std::size_t index);

    const Ring& ring() const noexcept { return ring_; }
    const FieldSpec& field() const { return ring_->field; }
    const Terms& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    /// Coefficient of e (zero if absent).
    K coefficient(const Exponents& e) const;

    /// Adds c * x^e, dropping zero results.
    void add_term(const Exponents& e, const K& c);

    Polynomial homogeneous_part(unsigned d) const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) {
        for (const auto& [e, c] : b.terms_) a.add_term(e, c);
        return a;
    }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) {
        for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
        return a;
    }
    friend Polynomial operator-(const Polynomial& a) { return a.scaled(-K::one(a.field())); }
    Polynomial scaled(const K& c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    /// Terms in descending grevlex; unit coefficients omitted, -1 written "-".
    std::string to_string() const;

    /// Same polynomial in a ring whose variables include those of ring().
    Polynomial embed(const Ring& target) const;

   private:
    Ring ring_;
    Terms terms_;
};

template <class K>
Polynomial<K> operator*(const Polynomial<K>& a, const Polynomial<K>& b);

/// Parses the polynomial grammar: terms joined by + and -, each term an
/// optional integer or a/b coefficient, an optional '*', and factors var[^exp]
/// joined by '*'. Throws std::invalid_argument with the offending position.
template <class K>
Polynomial<K> parse_polynomial(const Ring& ring, std::string_view text);

}  // namespace agsum

#endif
