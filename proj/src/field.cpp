#include "agsum/field.hpp"

#include <stdexcept>

namespace agsum {

bool is_prime_number(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime_number(p))
        throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
    FieldSpec f;
    f.kind_ = Kind::prime;
    f.p_ = p;
    return f;
}

std::string FieldSpec::name() const {
    if (is_rational()) return "QQ";
    return "GF(" + std::to_string(p_) + ")";
}

Rational Rational::from_int(const FieldSpec&, long long n) {
    return Rational(mpq_class(static_cast<signed long>(n)));
}

Rational Rational::from_fraction(const FieldSpec&, const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    return Rational(mpq_class(num, den));
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(1 / q_, raw_tag{});
}

Fp Fp::from_int(const FieldSpec& f, long long n) {
    const std::int64_t p = f.characteristic();
    std::int64_t r = n % p;
    if (r < 0) r += p;
    return Fp(static_cast<std::uint64_t>(r), f.characteristic());
}

Fp Fp::from_fraction(const FieldSpec& f, const mpz_class& num, const mpz_class& den) {
    const mpz_class p = f.characteristic();
    mpz_class n = num % p;
    if (n < 0) n += p;
    mpz_class d = den % p;
    if (d < 0) d += p;
    if (d == 0) throw std::domain_error("denominator vanishes in " + f.name());
    return Fp(n.get_ui(), f.characteristic()) / Fp(d.get_ui(), f.characteristic());
}

Fp Fp::inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero in GF(p)");
    // extended Euclid
    std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
        const std::int64_t q = a / b;
        std::int64_t t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    if (x0 < 0) x0 += p_;
    return Fp(static_cast<std::uint64_t>(x0), p_);
}

std::string Fp::to_string() const {
    if (p_ != 0 && v_ > p_ / 2) return "-" + std::to_string(p_ - v_);
    return std::to_string(v_);
}

}  // namespace agsum
