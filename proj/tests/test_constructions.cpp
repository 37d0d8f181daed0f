#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace testing;

namespace {

struct TwoFactorCase {
    Ring RA = ring_of({"x", "y", "z"});
    Ring RB = ring_of({"u", "v"});
    Presentation<Rational> A = algebra(RA, {"x^3", "y^4", "z^4"});
    Presentation<Rational> B = annihilator(poly(RB, "u^4*v^4"));
};

Presentation<Rational> power(const std::string& var, unsigned d) {
    const auto R = ring_of({var});
    return algebra(R, {var + "^" + std::to_string(d)});
}

// Slicewise equality of two ideals over rings with the same variables.
template <class K>
bool same_ideal(const Presentation<K>& a, const Presentation<K>& b) {
    const auto sa = IdealSlices<K>::artinian(a.ring, a.ideal);
    auto gens = b.ideal;
    for (auto& g : gens) g = g.embed(a.ring);
    const auto sb = IdealSlices<K>::artinian(a.ring, gens);
    return sa.same_ideal(sb) && sa.computed_degree() == sb.computed_degree();
}

Presentation<Fp> random_ag(const std::string& prefix, unsigned n, unsigned d, std::mt19937_64& rng) {
    std::vector<std::string> names;
    for (unsigned k = 0; k < n; ++k) names.push_back(prefix + std::to_string(k));
    const auto R = ring_of(names, FieldSpec::prime(32003));
    for (;;) {
        Polynomial<Fp> F(R);
        for (const auto& e : monomial_basis(n, d)) F.add_term(e, Fp::random(R->field, rng));
        auto A = annihilator(F);
        bool linear = false;
        for (const auto& g : A.ideal) linear = linear || g.degree() == 1;
        if (!linear && !F.is_zero()) return A;
    }
}

}  // namespace

TEST_CASE("fiber product of the golden factors") {
    TwoFactorCase ex;
    const auto fp = fiber_product_K<Rational>({ex.A, ex.B});
    CHECK(fp.kind == ConstructionKind::fiber_product);
    CHECK(fp.hilbert == std::vector<std::size_t>{1, 5, 9, 13, 15, 13, 9, 5, 2});
    CHECK(fp.presentation.ideal.size() == 11);
    CHECK(strings(fp.slices.minimal_generators()) ==
          std::vector<std::string>{"x*u", "y*u", "z*u", "x*v", "y*v", "z*v", "x^3", "y^4", "z^4", "u^5", "v^5"});
    // Level algebra of type 2.
    const auto soc = fp.slices.socle_basis();
    CHECK(soc.size() == 2);
    for (const auto& s : soc) CHECK(s.degree() == 8);
}

TEST_CASE("fiber products of small factors") {
    const auto three = fiber_product_K<Rational>({power("x", 4), power("y", 4), power("z", 4)});
    CHECK(three.hilbert == std::vector<std::size_t>{1, 3, 3, 3});
    CHECK(strings(three.slices.minimal_generators()) ==
          std::vector<std::string>{"x*y", "x*z", "y*z", "x^4", "y^4", "z^4"});
    CHECK(three.slices.socle_basis().size() == 3);

    CHECK(fiber_product_K<Rational>({power("x", 2), power("y", 2)}).hilbert == std::vector<std::size_t>{1, 2});
}

TEST_CASE("fiber product input errors") {
    CHECK_THROWS_AS(fiber_product_K<Rational>({power("x", 3)}), std::invalid_argument);
    CHECK_THROWS_WITH_AS(fiber_product_K<Rational>({power("x", 3), power("x", 4)}), doctest::Contains("x"),
                         std::invalid_argument);
    const auto R = ring_of({"a", "b"});
    CHECK_THROWS_WITH_AS(fiber_product_K<Rational>({algebra(R, {"a", "b^3"}), power("x", 3)}),
                         doctest::Contains("linear"), std::invalid_argument);
}

TEST_CASE("connected sum of the golden factors") {
    TwoFactorCase ex;
    const auto cs = connected_sum_K<Rational>({ex.A, ex.B});
    CHECK(cs.kind == ConstructionKind::connected_sum);
    CHECK(cs.socle_degree == 8);
    CHECK(cs.hilbert == std::vector<std::size_t>{1, 5, 9, 13, 15, 13, 9, 5, 1});
    CHECK(strings(cs.slices.minimal_generators()) ==
          std::vector<std::string>{"x*u", "y*u", "z*u", "x*v", "y*v", "z*v", "x^3", "y^4", "z^4", "u^5", "v^5",
                                   "x^2*y^3*z^3 + u^4*v^4"});
    REQUIRE(cs.presentation.dual_generator.has_value());
    CHECK(cs.presentation.dual_generator->to_string() == "x^2*y^3*z^3 - u^4*v^4");
    CHECK(cs.slices.socle_basis().size() == 1);
}

TEST_CASE("connected sums of one-variable factors") {
    const auto c = connected_sum_K<Rational>({power("x", 4), power("y", 4), power("z", 4)});
    CHECK(strings(c.slices.minimal_generators()) ==
          std::vector<std::string>{"x*y", "x*z", "y*z", "x^3 + y^3", "x^3 + z^3"});
    CHECK(c.hilbert == std::vector<std::size_t>{1, 3, 3, 1});

    const auto d = connected_sum_K<Rational>({power("x", 3), power("y", 3)});
    CHECK(strings(d.slices.minimal_generators()) == std::vector<std::string>{"x*y", "x^2 + y^2"});
    CHECK(d.hilbert == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("connected sum input errors") {
    CHECK_THROWS_WITH_AS(connected_sum_K<Rational>({power("x", 4), power("y", 3)}), doctest::Contains("socle degree"),
                         std::invalid_argument);
    const auto R = ring_of({"a", "b"});
    CHECK_THROWS_WITH_AS(connected_sum_K<Rational>({algebra(R, {"a^2", "a*b", "b^2"}), power("x", 2)}),
                         doctest::Contains("not Gorenstein"), std::domain_error);
}

TEST_CASE("route agreement, symmetry and Gorenstein output on random factors") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 12; ++trial) {
        const unsigned r = 2 + rng() % 2, d = 2 + rng() % 4;
        std::vector<Presentation<Fp>> factors;
        for (unsigned i = 0; i < r; ++i)
            factors.push_back(random_ag(std::string(1, static_cast<char>('a' + i)), 1 + rng() % 3, d, rng));
        // connected_sum_K throws if the presentation and dual routes disagree.
        const auto cs = connected_sum_K(factors);
        const auto& h = cs.hilbert;
        REQUIRE(h.size() == d + 1);
        for (unsigned i = 0; i <= d; ++i) CHECK(h[i] == h[d - i]);
        const auto soc = cs.slices.socle_basis();
        REQUIRE(soc.size() == 1);
        CHECK(soc.front().degree() == static_cast<int>(d));

        // The dual route on its own, compared slicewise.
        Polynomial<Fp> F(cs.presentation.ring);
        for (std::size_t i = 0; i < r; ++i) {
            const auto Fi = factors[i].dual_generator->embed(cs.presentation.ring);
            F = i == 0 ? Fi : F - Fi;
        }
        CHECK(IdealSlices<Fp>::annihilator(F).same_ideal(cs.slices));

        const auto fp = fiber_product_K(factors);
        const auto fsoc = fp.slices.socle_basis();
        CHECK(fsoc.size() == r);
        for (const auto& s : fsoc) CHECK(s.degree() == static_cast<int>(d));
    }
}

TEST_CASE("iterated and simultaneous constructions agree for three factors") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 6; ++trial) {
        const unsigned d = 3 + rng() % 2;
        std::vector<Presentation<Fp>> f;
        for (const char* p : {"a", "b", "c"}) f.push_back(random_ag(p, 1 + rng() % 2, d, rng));

        const auto fp_all = fiber_product_K(f);
        const auto fp_ab = fiber_product_K<Fp>({f[0], f[1]});
        const auto fp_iter = fiber_product_K<Fp>({fp_ab.presentation, f[2]});
        CHECK(same_ideal(fp_all.presentation, fp_iter.presentation));

        const auto cs_all = connected_sum_K(f);
        const auto cs_ab = connected_sum_K<Fp>({f[0], f[1]});
        const auto cs_iter = connected_sum_K<Fp>({cs_ab.presentation, f[2]});
        CHECK(same_ideal(cs_all.presentation, cs_iter.presentation));
    }
}

TEST_CASE("two-factor construction over T") {
    const auto R = ring_of({"x", "y"});
    const auto res = connected_sum_T(poly(R, "x^3"), poly(R, "y^3"), poly(R, "1"));
    CHECK(strings(res.fiber_product.slices.minimal_generators()) == std::vector<std::string>{"x*y", "x^4", "y^4"});
    CHECK(strings(res.connected_sum.slices.minimal_generators()) == std::vector<std::string>{"x*y", "x^3 + y^3"});
    CHECK(hilbert_function(res.T) == std::vector<std::size_t>{1});
    CHECK(res.fiber_product.hilbert == std::vector<std::size_t>{1, 2, 2, 2});
    CHECK(res.connected_sum.hilbert == std::vector<std::size_t>{1, 2, 2, 1});

    CHECK_THROWS_WITH_AS(connected_sum_T(poly(R, "x^3"), poly(R, "x^3"), poly(R, "1")),
                         "factors must be linearly independent", std::invalid_argument);
    CHECK_THROWS_WITH_AS(connected_sum_T(poly(R, "x^3"), poly(R, "2*x^3"), poly(R, "1")),
                         "factors must be linearly independent", std::invalid_argument);
    // tau o F = X^2 and tau o G = X Y differ, so (a) fails.
    CHECK_THROWS_WITH_AS(connected_sum_T(poly(R, "x^3*y"), poly(R, "x^2*y^2"), poly(R, "x*y")),
                         doctest::Contains("condition (a) fails"), std::invalid_argument);
}

TEST_CASE("two-factor construction over a nontrivial T") {
    // F = X^2 Y and G = Z^2 Y share the factor Y: tau = x^2 + z^2 gives
    // tau o F = tau o G = Y, so T = K[y]/(y^2) and k = 1.
    const auto R = ring_of({"x", "y", "z"});
    const auto F = poly(R, "x^2*y");
    const auto G = poly(R, "z^2*y");
    const auto tau = poly(R, "x^2 + z^2");
    const auto rep = check_cs_conditions(F, G, tau);
    CHECK(rep.passed());
    CHECK(rep.k == 1);
    const auto res = connected_sum_T(F, G, tau);
    const auto hT = hilbert_function(res.T);
    CHECK(hT == std::vector<std::size_t>{1, 1});
    CHECK(strings(res.fiber_product.slices.minimal_generators()) == std::vector<std::string>{"y^2", "x*z", "x^3", "z^3"});
    CHECK(strings(res.connected_sum.slices.minimal_generators()) == std::vector<std::string>{"y^2", "x*z", "x^2 + z^2"});
    const auto hA = hilbert_function(annihilator(F));
    const auto hB = hilbert_function(annihilator(G));
    CHECK(res.fiber_product.hilbert == std::vector<std::size_t>{1, 3, 4, 2});
    CHECK(res.connected_sum.hilbert == std::vector<std::size_t>{1, 3, 3, 1});
    CHECK(res.fiber_product.hilbert == hilbert_closed_form(ConstructionKind::fiber_product, {hA, hB}, 3, hT, rep.k));
    CHECK(res.connected_sum.hilbert == hilbert_closed_form(ConstructionKind::connected_sum, {hA, hB}, 3, hT, rep.k));
    // The fiber product ideal is the intersection of the two annihilators.
    const auto meet = IdealSlices<Rational>::intersection(IdealSlices<Rational>::annihilator(F), IdealSlices<Rational>::annihilator(G));
    CHECK(meet.same_ideal(res.fiber_product.slices));

    // Same pair with tau = x^2 alone: tau o G = 0, so (a) fails.
    CHECK_THROWS_WITH_AS(connected_sum_T(F, G, poly(R, "x^2")), doctest::Contains("condition (a) fails"),
                         std::invalid_argument);
}

TEST_CASE("Hilbert closed forms") {
    using CK = ConstructionKind;
    const std::vector<std::size_t> hA = {1, 3, 6, 9, 10, 9, 6, 3, 1}, hB = {1, 2, 3, 4, 5, 4, 3, 2, 1};
    CHECK(hilbert_closed_form(CK::fiber_product, {hA, hB}) == std::vector<std::size_t>{1, 5, 9, 13, 15, 13, 9, 5, 2});
    CHECK(hilbert_closed_form(CK::connected_sum, {hA, hB}, 8) == std::vector<std::size_t>{1, 5, 9, 13, 15, 13, 9, 5, 1});
    for (std::size_t r = 2; r <= 5; ++r) {
        std::vector<std::vector<std::size_t>> hs(r, {1, 1, 1, 1});
        CHECK(hilbert_closed_form(CK::connected_sum, hs, 3) == std::vector<std::size_t>{1, r, r, 1});
    }
    // The closed form agrees with the slices on a random triple.
    std::mt19937_64 rng(47);
    std::vector<Presentation<Fp>> f;
    for (const char* p : {"a", "b", "c"}) f.push_back(random_ag(p, 2, 4, rng));
    std::vector<std::vector<std::size_t>> hs;
    for (const auto& A : f) hs.push_back(hilbert_function(A));
    CHECK(hilbert_closed_form(CK::connected_sum, hs, 4) == connected_sum_K(f).hilbert);
    CHECK(hilbert_closed_form(CK::fiber_product, hs) == fiber_product_K(f).hilbert);

    CHECK_THROWS_WITH_AS(hilbert_closed_form(CK::connected_sum, {{1}, {1}}, 3), doctest::Contains("inconsistent inputs"),
                         std::domain_error);
}
