// Shared helpers for the unit tests.
#ifndef AGSUM_TESTS_SUPPORT_HPP
#define AGSUM_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "agsum/apolarity.hpp"
#include "agsum/betti.hpp"
#include "agsum/constructions.hpp"
#include "agsum/ideal.hpp"
#include "agsum/polynomial.hpp"
#include "agsum/resolution.hpp"

namespace testing {

using namespace agsum;

inline Ring ring_of(std::vector<std::string> vars, FieldSpec f = FieldSpec::rational()) { return make_ring(std::move(vars), f); }

template <class K = Rational>
Polynomial<K> poly(const Ring& r, const std::string& text) {
    return parse_polynomial<K>(r, text);
}

template <class K = Rational>
std::vector<Polynomial<K>> polys(const Ring& r, const std::vector<std::string>& texts) {
    std::vector<Polynomial<K>> out;
    for (const auto& t : texts) out.push_back(poly<K>(r, t));
    return out;
}

template <class K = Rational>
Presentation<K> algebra(const Ring& r, const std::vector<std::string>& ideal) {
    return {r, polys<K>(r, ideal), std::nullopt};
}

template <class K>
std::vector<std::string> strings(const std::vector<Polynomial<K>>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
}

inline BettiTable table(const std::vector<std::tuple<int, int, std::int64_t>>& cells) {
    BettiTable t;
    for (const auto& [i, j, c] : cells) t.set(i, j, c);
    return t;
}

inline std::vector<std::int64_t> totals(std::initializer_list<std::int64_t> xs) { return xs; }

// Count of exponent vectors of length n and total degree d, by brute force.
inline std::size_t enumerate_monomials(std::size_t n, unsigned d) {
    std::size_t count = 0;
    std::vector<unsigned> e(n, 0);
    for (;;) {
        unsigned sum = 0;
        for (unsigned x : e) sum += x;
        count += sum == d;
        std::size_t k = 0;
        while (k < n && e[k] == d) e[k++] = 0;
        if (k == n) break;
        ++e[k];
    }
    return n == 0 ? (d == 0) : count;
}

// Hilbert function of a monomial quotient: count monomials of degree d not
// divisible by any generator exponent vector.
inline std::vector<std::size_t> monomial_quotient_hf(std::size_t n, const std::vector<std::vector<unsigned>>& gens, unsigned dmax) {
    std::vector<std::size_t> h;
    for (unsigned d = 0; d <= dmax; ++d) {
        std::size_t c = 0;
        std::vector<unsigned> e(n, 0);
        for (;;) {
            unsigned sum = 0;
            for (unsigned x : e) sum += x;
            if (sum == d) {
                bool divisible = false;
                for (const auto& g : gens) {
                    bool all = true;
                    for (std::size_t k = 0; k < n; ++k) all = all && g[k] <= e[k];
                    divisible = divisible || all;
                }
                c += !divisible;
            }
            std::size_t k = 0;
            while (k < n && e[k] == d) e[k++] = 0;
            if (k == n) break;
            ++e[k];
        }
        h.push_back(c);
    }
    while (!h.empty() && h.back() == 0) h.pop_back();
    return h;
}

// Betti table of a complete intersection of forms of the given degrees, by
// expanding prod_k (1 + t s^{d_k}) directly.
inline BettiTable ci_table(const std::vector<unsigned>& degrees) {
    BettiTable t;
    const std::size_t n = degrees.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        int i = 0, j = 0;
        for (std::size_t k = 0; k < n; ++k)
            if (mask >> k & 1) {
                ++i;
                j += static_cast<int>(degrees[k]);
            }
        t.add(i, j, 1);
    }
    return t;
}

inline std::int64_t choose(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    std::int64_t r = 1;
    for (long long k = 1; k <= b; ++k) r = r * (a - b + k) / k;
    return r;
}

}  // namespace testing

#endif
