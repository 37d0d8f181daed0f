#ifndef AGSUM_FIELD_HPP
#define AGSUM_FIELD_HPP

#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

namespace agsum {

/// Coefficient field: the rationals or a prime field GF(p).
class FieldSpec {
   public:
    enum class Kind { rational, prime };

    FieldSpec() = default;

    static FieldSpec rational() { return FieldSpec{}; }
    /// Throws std::invalid_argument unless 2 <= p < 2^31 is prime.
    static FieldSpec prime(std::uint32_t p);

    Kind kind() const noexcept { return kind_; }
    bool is_rational() const noexcept { return kind_ == Kind::rational; }
    bool is_prime() const noexcept { return kind_ == Kind::prime; }
    std::uint32_t characteristic() const noexcept { return p_; }

    /// "QQ" or "GF(p)".
    std::string name() const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }

   private:
    Kind kind_ = Kind::rational;
    std::uint32_t p_ = 0;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

bool is_prime_number(std::uint64_t n) noexcept;

/// Element of Q backed by GMP.
class Rational {
   public:
    static constexpr bool is_prime_field = false;

    Rational() = default;
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    static Rational zero(const FieldSpec&) { return Rational{}; }
    static Rational one(const FieldSpec&) { return Rational{mpq_class(1)}; }
    static Rational from_int(const FieldSpec&, long long n);
    /// Throws std::domain_error when den == 0.
    static Rational from_fraction(const FieldSpec&, const mpz_class& num, const mpz_class& den);

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    /// Throws std::domain_error on zero.
    Rational inverse() const;

    const mpq_class& value() const noexcept { return q_; }
    std::string to_string() const { return q_.get_str(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.q_ + b.q_, raw_tag{}); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.q_ - b.q_, raw_tag{}); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.q_ * b.q_, raw_tag{}); }
    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
    friend Rational operator-(const Rational& a) { return Rational(-a.q_, raw_tag{}); }
    Rational& operator+=(const Rational& b) { q_ += b.q_; return *this; }
    Rational& operator-=(const Rational& b) { q_ -= b.q_; return *this; }
    Rational& operator*=(const Rational& b) { q_ *= b.q_; return *this; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }

   private:
    struct raw_tag {};
    Rational(mpq_class q, raw_tag) : q_(std::move(q)) {}
    mpq_class q_;
};

/// Element of GF(p). The modulus travels with the value; a default-constructed
/// element is a modulus-free zero that adopts the modulus of its partner.
class Fp {
   public:
    static constexpr bool is_prime_field = true;

    Fp() = default;
    Fp(std::uint64_t value, std::uint32_t modulus)
        : v_(static_cast<std::uint32_t>(value % modulus)), p_(modulus) {}

    static Fp zero(const FieldSpec& f) { return Fp(0, f.characteristic()); }
    static Fp one(const FieldSpec& f) { return Fp(1, f.characteristic()); }
    static Fp from_int(const FieldSpec& f, long long n);
    /// Throws std::domain_error when den vanishes mod p.
    static Fp from_fraction(const FieldSpec& f, const mpz_class& num, const mpz_class& den);
    static Fp random(const FieldSpec& f, std::mt19937_64& rng) { return Fp(rng() % f.characteristic(), f.characteristic()); }

    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1; }
    Fp inverse() const;

    std::uint32_t value() const noexcept { return v_; }
    std::uint32_t modulus() const noexcept { return p_; }
    /// Symmetric representative in (-p/2, p/2].
    std::string to_string() const;

    friend Fp operator+(Fp a, Fp b) {
        const std::uint32_t p = a.p_ ? a.p_ : b.p_;
        if (p == 0) return Fp{};
        return Fp(std::uint64_t{a.v_} + b.v_, p);
    }
    friend Fp operator-(Fp a, Fp b) {
        const std::uint32_t p = a.p_ ? a.p_ : b.p_;
        if (p == 0) return Fp{};
        return Fp(std::uint64_t{a.v_} + p - b.v_, p);
    }
    friend Fp operator*(Fp a, Fp b) {
        const std::uint32_t p = a.p_ ? a.p_ : b.p_;
        if (p == 0) return Fp{};
        return Fp(std::uint64_t{a.v_} * b.v_, p);
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    friend Fp operator-(Fp a) { return a.v_ == 0 ? a : Fp(a.p_ - a.v_, a.p_); }
    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }
    friend bool operator==(Fp a, Fp b) noexcept { return a.v_ == b.v_; }

   private:
    std::uint32_t v_ = 0;
    std::uint32_t p_ = 0;
};

/// Runs `fn.template operator()<K>()` with K the element type matching `f`.
template <class Fn>
decltype(auto) with_field(const FieldSpec& f, Fn&& fn) {
    if (f.is_rational()) return fn.template operator()<Rational>();
    return fn.template operator()<Fp>();
}

}  // namespace agsum

#endif
