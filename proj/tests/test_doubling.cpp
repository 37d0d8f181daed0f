#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "agsum/doubling.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const FieldSpec kGF = FieldSpec::prime(32003);

// HF(Q/I)(d) = HF(Q/J)(d) - HF_omega(d - t) for every degree the certificate saw.
template <class K>
void check_hilbert_identity(const Presentation<K>& J, const Presentation<K>& I, const DoublingCertificate& cert) {
    const auto c = cm1_check(J);
    const auto omega = canonical_hilbert(c.h_vector);
    const auto hI = IdealSlices<K>::artinian(I.ring, I.ideal).hilbert_function();
    auto sJ = IdealSlices<K>::from_generators(J.ring, J.ideal, static_cast<unsigned>(cert.quotient_hilbert.size()));
    for (std::size_t d = 0; d < cert.quotient_hilbert.size(); ++d) {
        const std::size_t lhs = d < hI.size() ? hI[d] : 0;
        CHECK(lhs == sJ.hf(static_cast<unsigned>(d)) - omega.at(static_cast<int>(d) - cert.t));
    }
}

// Exponent lists of one factor type, with their socle degree sum (d_j - 1).
struct FactorType {
    std::vector<unsigned> degrees;
    unsigned socle = 0;
};

std::vector<FactorType> factor_types(unsigned max_vars, unsigned max_degree) {
    std::vector<FactorType> out;
    for (unsigned a = 2; a <= max_degree; ++a) {
        out.push_back({{a}, a - 1});
        if (max_vars >= 2)
            for (unsigned b = 2; b <= max_degree; ++b) out.push_back({{a, b}, a + b - 2});
    }
    return out;
}

}  // namespace

TEST_CASE("one-dimensional Cohen-Macaulay check") {
    const auto R = ring_of({"x", "y", "z"});
    const auto axes = cm1_check(algebra(R, {"x*y", "x*z", "y*z"}));
    CHECK(axes.cohen_macaulay);
    CHECK(axes.h_vector == std::vector<long long>{1, 2});
    CHECK(axes.stable_value == 3);

    // (x^2, xy) has the embedded point: x is a socle element.
    const auto R2 = ring_of({"x", "y"});
    const auto emb = cm1_check(algebra(R2, {"x^2", "x*y"}));
    CHECK_FALSE(emb.cohen_macaulay);
    CHECK(emb.detail.find("socle") != std::string::npos);

    const auto R1 = ring_of({"x"});
    const auto line = cm1_check(algebra(R1, {}));
    CHECK(line.cohen_macaulay);
    CHECK(line.h_vector == std::vector<long long>{1});

    CHECK_THROWS_AS(cm1_check(algebra(R1, {"x^2"})), std::domain_error);
}

TEST_CASE("canonical module Hilbert functions") {
    const auto w = canonical_hilbert({1, 2});
    CHECK(w.start_degree == 0);
    CHECK(w.at(-1) == 0);
    CHECK(w.at(0) == 2);
    CHECK(w.at(1) == 3);
    CHECK(w.at(7) == 3);

    const auto p = canonical_hilbert({1});
    CHECK(p.start_degree == 1);
    CHECK(p.at(0) == 0);
    CHECK(p.at(1) == 1);

    const auto q = canonical_hilbert({1, 1});
    CHECK(q.at(0) == 1);
    CHECK(q.at(1) == 2);
    CHECK(q.at(5) == 2);

    CHECK_THROWS_AS(canonical_hilbert({}), std::invalid_argument);
}

TEST_CASE("the three-point sum doubles the coordinate axes") {
    const auto R = ring_of({"x", "y", "z"});
    const auto J = algebra(R, {"x*y", "x*z", "y*z"});
    const auto I = algebra(R, {"x*y", "x*z", "y*z", "x^3 + y^3", "x^3 + z^3"});
    const auto cert = doubling_certificate(J, I);
    CHECK(cert.pass);
    CHECK(cert.verdict() == "PASS t=3");
    CHECK(cert.t == 3);
    REQUIRE(cert.quotient_hilbert.size() >= 6);
    CHECK(std::vector<std::size_t>(cert.quotient_hilbert.begin(), cert.quotient_hilbert.begin() + 6) ==
          std::vector<std::size_t>{0, 0, 0, 2, 3, 3});
    CHECK(cert.checks.size() == 5);
    CHECK(cert.notes.size() == 2);
    check_hilbert_identity(J, I, cert);
}

TEST_CASE("negative control: adding only x^3 is not a doubling") {
    const auto R = ring_of({"x", "y", "z"});
    const auto cert = doubling_certificate(algebra(R, {"x*y", "x*z", "y*z"}), algebra(R, {"x*y", "x*z", "y*z", "x^3"}));
    CHECK_FALSE(cert.pass);
    CHECK(cert.checks[0].passed);  // containment
    CHECK(cert.checks[1].passed);  // cm1
    CHECK_FALSE(cert.checks[2].passed);
    CHECK(cert.verdict().rfind("FAIL: gorenstein: not Gorenstein", 0) == 0);
}

TEST_CASE("Artinian Gorenstein but not a doubling") {
    const auto R = ring_of({"x", "y", "z"});
    const auto J = algebra(R, {"x*y", "x*z", "y*z"});
    // J not contained in I.
    const auto bad = doubling_certificate(J, algebra(R, {"x^2", "y^2", "z^2"}));
    CHECK_FALSE(bad.pass);
    CHECK_FALSE(bad.checks[0].passed);
    CHECK(bad.checks[0].detail == "x*y is not in I");

    // Contained and Gorenstein, but I/J already lives in degree 1.
    const auto early = doubling_certificate(J, algebra(R, {"x", "y*z", "y^2 - z^2"}));
    CHECK(early.checks[2].passed);
    CHECK_FALSE(early.checks[3].passed);
    CHECK(early.verdict().rfind("FAIL: shift:", 0) == 0);

    // Socle degree two on the same points: a doubling with t = 2.
    const auto I2 = algebra(R, {"x*y", "x*z", "y*z", "x^2 - y^2", "x^2 - z^2"});
    const auto quad = doubling_certificate(J, I2);
    CHECK(quad.verdict() == "PASS t=2");
    check_hilbert_identity(J, I2, quad);

    // Q/J with an embedded point fails cm1 even though I is Gorenstein.
    const auto R2 = ring_of({"x", "y"});
    const auto emb = doubling_certificate(algebra(R2, {"x^2", "x*y"}), algebra(R2, {"x", "y^2"}));
    CHECK(emb.verdict().rfind("FAIL: cm1:", 0) == 0);

    const auto other = ring_of({"a", "b", "c"});
    CHECK_THROWS_AS(doubling_certificate(J, algebra(other, {"a"})), std::invalid_argument);
}

TEST_CASE("harness: three copies of K[x]/(x^4)") {
    const auto [tilde, doubled] = monomial_ci_family<Rational>(FieldSpec::rational(), {{4}, {4}, {4}});
    const auto cert = doubling_harness(tilde, doubled);
    CHECK(cert.pass);
    CHECK(cert.t == 3);
}

TEST_CASE("harness: two factors of different embedding dimension") {
    // K[x,y]/(x^3, y^3) has socle degree 4, as does K[u]/(u^5).
    const auto Rxy = ring_of({"x", "y"});
    const auto Ru = ring_of({"u"});
    const std::vector<Presentation<Rational>> tilde = {algebra(Rxy, {"x^3"}), algebra(Ru, {})};
    const std::vector<Presentation<Rational>> doubled = {algebra(Rxy, {"x^3", "y^3"}), algebra(Ru, {"u^5"})};
    const auto cert = doubling_harness(tilde, doubled);
    CHECK(cert.verdict() == "PASS t=4");
}

TEST_CASE("harness rejects unequal socle degrees and bad factors") {
    const auto [tilde, doubled] = monomial_ci_family<Fp>(kGF, {{4}, {3}});
    CHECK_THROWS_WITH_AS(doubling_harness(tilde, doubled), doctest::Contains("socle degrees differ"), std::invalid_argument);

    const auto R = ring_of({"x", "y"});
    const std::vector<Presentation<Rational>> t2 = {algebra(R, {"x^2", "x*y"})};
    const std::vector<Presentation<Rational>> d2 = {algebra(R, {"x^2", "x*y", "y^3"})};
    CHECK_THROWS_WITH_AS(doubling_harness(t2, d2), doctest::Contains("factor 0 is not a doubling"), std::invalid_argument);

    CHECK_THROWS_AS(monomial_ci_family<Fp>(kGF, {{1}}), std::invalid_argument);
    CHECK_THROWS_AS(monomial_ci_family<Fp>(kGF, {{}}), std::invalid_argument);
}

TEST_CASE("monomial complete-intersection sweep") {
    const auto types = factor_types(2, 4);
    int runs = 0;
    for (std::size_t a = 0; a < types.size(); ++a)
        for (std::size_t b = a; b < types.size(); ++b) {
            if (types[a].socle != types[b].socle) continue;
            for (std::size_t c = b; c <= types.size(); ++c) {
                std::vector<std::vector<unsigned>> degs = {types[a].degrees, types[b].degrees};
                if (c < types.size()) {
                    if (types[c].socle != types[a].socle) continue;
                    degs.push_back(types[c].degrees);
                }
                std::size_t nvars = 0;
                for (const auto& d : degs) nvars += d.size();
                if (nvars > 5) continue;
                CAPTURE(degs);
                const auto [tilde, doubled] = monomial_ci_family<Fp>(kGF, degs);
                const auto cert = doubling_harness(tilde, doubled);
                CHECK(cert.pass);
                CHECK(cert.t == static_cast<int>(types[a].socle));
                const auto J = fiber_product_presentation(tilde);
                const auto I = connected_sum_K(doubled).presentation;
                check_hilbert_identity(J, I, cert);
                ++runs;
            }
        }
    CHECK(runs > 20);
}
