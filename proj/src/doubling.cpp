#include "agsum/doubling.hpp"

#include <algorithm>
#include <stdexcept>

#include "agsum/constructions.hpp"

namespace agsum {

template <class K>
Cm1Result<K> cm1_check(const Presentation<K>& J, unsigned cap) {
    auto st = stabilize(J.ring, J.ideal, cap);
    if (st.artinian) throw std::domain_error("dimension of Q/J is 0, not 1");
    Cm1Result<K> out;
    out.stable_from = st.stable_from;
    out.stable_value = st.stable_value;
    unsigned maxdeg = 0;
    for (const auto& g : J.ideal) maxdeg = std::max(maxdeg, static_cast<unsigned>(std::max(g.degree(), 0)));
    const unsigned last = std::max(st.stable_from, maxdeg) + 1;
    st.slices.extend_to(last + 1);
    for (unsigned d = 0; d <= st.stable_from; ++d) out.hilbert.push_back(st.slices.hf(d));
    long long prev = 0;
    for (std::size_t v : out.hilbert) {
        out.h_vector.push_back(static_cast<long long>(v) - prev);
        prev = static_cast<long long>(v);
    }
    while (out.h_vector.size() > 1 && out.h_vector.back() == 0) out.h_vector.pop_back();
    out.cohen_macaulay = true;
    for (unsigned d = 0; d <= last; ++d) {
        const auto soc = st.slices.socle_in_degree(d);
        if (!soc.empty()) {
            out.cohen_macaulay = false;
            out.detail = "Q/J has socle element " + soc.front().to_string() + " in degree " + std::to_string(d);
            break;
        }
    }
    out.slices = std::move(st.slices);
    return out;
}

std::size_t CanonicalHilbert::at(int q) const {
    if (q < start_degree) return 0;
    if (q >= 1) return stable;
    return values[static_cast<std::size_t>(q - start_degree)];
}

CanonicalHilbert canonical_hilbert(const std::vector<long long>& h) {
    long long total = 0;
    for (long long x : h) total += x;
    if (h.empty() || total <= 0) throw std::invalid_argument("canonical_hilbert: h(1) must be positive");
    CanonicalHilbert out;
    const int len = static_cast<int>(h.size());
    out.start_degree = 2 - len;
    out.stable = static_cast<std::size_t>(total);
    for (int q = out.start_degree; q <= 1; ++q) {
        long long v = 0;
        for (int i = std::max(0, 1 - q); i < len; ++i) v += h[static_cast<std::size_t>(i)];
        if (v < 0) throw std::invalid_argument("canonical_hilbert: not an h-vector");
        out.values.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

std::string DoublingCertificate::verdict() const {
    if (pass) return "PASS t=" + std::to_string(t);
    for (const auto& c : checks)
        if (!c.passed) return "FAIL: " + c.name + ": " + c.detail;
    return "FAIL";
}

template <class K>
DoublingCertificate doubling_certificate(const Presentation<K>& J, const Presentation<K>& I, unsigned cap) {
    if (!same_ring(J.ring, I.ring)) throw std::invalid_argument("doubling_certificate: J and I live in different rings");
    DoublingCertificate cert;
    cert.notes = {"G_0 (Gorenstein at minimal primes) is not checked",
                  "I/J is compared with the canonical module only through Hilbert functions"};
    CertificateCheck containment{"containment", false, ""};
    CertificateCheck cm1{"cm1", false, ""};
    CertificateCheck gorenstein{"gorenstein", false, ""};
    CertificateCheck shift{"shift", false, "skipped"};
    CertificateCheck match{"hilbert_match", false, "skipped"};

    unsigned jdeg = 0;
    for (const auto& g : J.ideal) jdeg = std::max(jdeg, static_cast<unsigned>(std::max(g.degree(), 0)));
    const auto span = IdealSlices<K>::from_generators(I.ring, I.ideal, jdeg);
    containment.passed = true;
    for (const auto& g : J.ideal)
        if (!span.contains(g)) {
            containment.passed = false;
            containment.detail = g.to_string() + " is not in I";
            break;
        }

    IdealSlices<K> Is;
    bool have_I = false;
    try {
        Is = IdealSlices<K>::artinian(I.ring, I.ideal, cap);
        have_I = true;
    } catch (const std::domain_error& e) {
        gorenstein.detail = std::string("not Gorenstein: Q/I is not Artinian (") + e.what() + ")";
    }
    if (have_I) {
        const auto socle = Is.socle_basis();
        gorenstein.passed = socle.size() == 1;
        if (!gorenstein.passed) gorenstein.detail = "not Gorenstein: socle dimension " + std::to_string(socle.size());
    }

    Cm1Result<K> c;
    bool have_J = false;
    try {
        c = cm1_check(J, cap);
        have_J = true;
        cm1.passed = c.cohen_macaulay;
        cm1.detail = c.detail;
    } catch (const std::domain_error& e) {
        cm1.detail = e.what();
    }

    if (have_I && have_J && containment.passed && cm1.passed) {
        const int reg = Is.top_degree();
        const CanonicalHilbert omega = canonical_hilbert(c.h_vector);
        const unsigned last = static_cast<unsigned>(std::max({reg + 1, static_cast<int>(c.stable_from) + 1,
                                                              reg + 1 - omega.start_degree + 1}));
        c.slices.extend_to(last);
        int first = -1;
        for (unsigned d = 0; d <= last; ++d) {
            const std::size_t q = c.slices.hf(d) - Is.hf(d);
            cert.quotient_hilbert.push_back(q);
            if (first < 0 && q > 0) first = static_cast<int>(d);
        }
        const int t_hilbert = first < 0 ? -1 : first - omega.start_degree;
        shift.passed = first >= 0 && t_hilbert == reg;
        shift.detail = shift.passed ? "" : "I/J starts at degree " + std::to_string(first) + " giving t = " +
                                               std::to_string(t_hilbert) + ", reg(Q/I) = " + std::to_string(reg);
        cert.t = reg;
        match.passed = true;
        match.detail.clear();
        for (unsigned d = 0; d <= last; ++d) {
            const std::size_t expected = omega.at(static_cast<int>(d) - reg);
            if (cert.quotient_hilbert[d] != expected) {
                match.passed = false;
                match.detail = "degree " + std::to_string(d) + ": dim I/J = " + std::to_string(cert.quotient_hilbert[d]) +
                               ", canonical module gives " + std::to_string(expected);
                break;
            }
        }
    }
    cert.checks = {containment, cm1, gorenstein, shift, match};
    cert.pass = std::all_of(cert.checks.begin(), cert.checks.end(), [](const auto& ch) { return ch.passed; });
    return cert;
}

template <class K>
DoublingCertificate doubling_harness(const std::vector<Presentation<K>>& tilde_factors,
                                      const std::vector<Presentation<K>>& doubled_factors) {
    if (tilde_factors.size() != doubled_factors.size())
        throw std::invalid_argument("harness: tilde and doubled factor counts differ");
    int d = -1;
    for (std::size_t i = 0; i < tilde_factors.size(); ++i) {
        if (!same_ring(tilde_factors[i].ring, doubled_factors[i].ring))
            throw std::invalid_argument("factor " + std::to_string(i) + ": tilde and doubled rings differ");
        const auto cert = doubling_certificate(tilde_factors[i], doubled_factors[i]);
        if (!cert.pass) throw std::invalid_argument("factor " + std::to_string(i) + " is not a doubling: " + cert.verdict());
        if (d < 0) d = cert.t;
        if (cert.t != d)
            throw std::invalid_argument("socle degrees differ: factor 0 has " + std::to_string(d) + ", factor " +
                                        std::to_string(i) + " has " + std::to_string(cert.t));
    }
    const Presentation<K> J = fiber_product_presentation(tilde_factors);
    const auto cs = connected_sum_K(doubled_factors);
    return doubling_certificate(J, cs.presentation);
}

template <class K>
std::pair<std::vector<Presentation<K>>, std::vector<Presentation<K>>> monomial_ci_family(
    const FieldSpec& field, const std::vector<std::vector<unsigned>>& degrees) {
    std::vector<Presentation<K>> tilde, doubled;
    const K one = K::one(field);
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        const auto& ds = degrees[i];
        if (ds.empty()) throw std::invalid_argument("monomial_ci_family: factor without variables");
        std::vector<std::string> names;
        for (std::size_t j = 0; j < ds.size(); ++j) names.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
        const Ring R = make_ring(names, field);
        Presentation<K> t{R, {}, std::nullopt}, a{R, {}, std::nullopt};
        for (std::size_t j = 0; j < ds.size(); ++j) {
            if (ds[j] < 2) throw std::invalid_argument("monomial_ci_family: exponents must be at least 2");
            Exponents e(ds.size(), 0);
            e[j] = ds[j];
            const auto p = Polynomial<K>::monomial(R, e, one);
            a.ideal.push_back(p);
            if (j + 1 < ds.size()) t.ideal.push_back(p);
        }
        tilde.push_back(std::move(t));
        doubled.push_back(std::move(a));
    }
    return {std::move(tilde), std::move(doubled)};
}

#define AGSUM_INSTANTIATE(K)                                                                                   \
    template Cm1Result<K> cm1_check(const Presentation<K>&, unsigned);                                         \
    template DoublingCertificate doubling_certificate(const Presentation<K>&, const Presentation<K>&, unsigned); \
    template DoublingCertificate doubling_harness(const std::vector<Presentation<K>>&,                        \
                                                   const std::vector<Presentation<K>>&);                       \
    template std::pair<std::vector<Presentation<K>>, std::vector<Presentation<K>>> monomial_ci_family<K>(      \
        const FieldSpec&, const std::vector<std::vector<unsigned>>&);

AGSUM_INSTANTIATE(Rational)
AGSUM_INSTANTIATE(Fp)

#undef AGSUM_INSTANTIATE

}  // namespace agsum
