#include "agsum/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace agsum {

std::vector<std::size_t> hilbert_closed_form(ConstructionKind kind, const std::vector<std::vector<std::size_t>>& factor_hfs,
                                             unsigned d, const std::vector<std::size_t>& hf_T, unsigned k) {
    if (factor_hfs.empty()) throw std::invalid_argument("hilbert_closed_form: no factors");
    const long long r = static_cast<long long>(factor_hfs.size());
    std::size_t len = hf_T.size();
    for (const auto& h : factor_hfs) len = std::max(len, h.size());
    const std::size_t shift = kind == ConstructionKind::connected_sum ? d - std::min(d, k) : 0;
    if (kind == ConstructionKind::connected_sum) {
        if (k > d) throw std::invalid_argument("hilbert_closed_form: k exceeds d");
        len = std::max(len, hf_T.size() + shift);
    }
    std::vector<long long> out(len, 0);
    for (const auto& h : factor_hfs)
        for (std::size_t i = 0; i < h.size(); ++i) out[i] += static_cast<long long>(h[i]);
    for (std::size_t i = 0; i < hf_T.size(); ++i) {
        out[i] -= (r - 1) * static_cast<long long>(hf_T[i]);
        if (kind == ConstructionKind::connected_sum) out[i + shift] -= (r - 1) * static_cast<long long>(hf_T[i]);
    }
    std::vector<std::size_t> h;
    for (long long v : out) {
        if (v < 0) throw std::domain_error("inconsistent inputs: closed form has a negative coefficient");
        h.push_back(static_cast<std::size_t>(v));
    }
    while (!h.empty() && h.back() == 0) h.pop_back();
    return h;
}

namespace {

std::string join_polys(const auto& polys) {
    std::string s;
    for (const auto& p : polys) s += (s.empty() ? "" : ", ") + p.to_string();
    return "(" + s + ")";
}

template <class K>
struct JoinedFactors {
    Ring ring;
    std::vector<Polynomial<K>> gens;  // sum of factor ideals plus cross products
};

template <class K>
JoinedFactors<K> join_factors(const std::vector<Presentation<K>>& factors) {
    if (factors.size() < 2) throw std::invalid_argument("at least two factors are required");
    std::vector<Ring> rings;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].ring->nvars() == 0) throw std::invalid_argument("factor " + std::to_string(i) + " has no variables");
        rings.push_back(factors[i].ring);
    }
    JoinedFactors<K> out;
    out.ring = join_rings(rings);
    out.gens = cross_products<K>(out.ring);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto degree_one = IdealSlices<K>::from_generators(factors[i].ring, factors[i].ideal, 1);
        if (degree_one.hf(1) != factors[i].ring->nvars())
            throw std::invalid_argument("factor " + std::to_string(i) + " has linear forms in its ideal");
        for (const auto& g : factors[i].ideal) out.gens.push_back(g.embed(out.ring));
    }
    return out;
}

}  // namespace

template <class K>
Presentation<K> fiber_product_presentation(const std::vector<Presentation<K>>& factors) {
    auto joined = join_factors(factors);
    return {joined.ring, std::move(joined.gens), std::nullopt};
}

template <class K>
ConstructionResult<K> fiber_product_K(const std::vector<Presentation<K>>& factors) {
    auto joined = join_factors(factors);
    ConstructionResult<K> res;
    res.kind = ConstructionKind::fiber_product;
    res.slices = IdealSlices<K>::artinian(joined.ring, joined.gens);
    res.hilbert = res.slices.hilbert_function();
    res.presentation = {joined.ring, res.slices.minimal_generators(), std::nullopt};

    std::vector<std::vector<std::size_t>> hfs;
    for (const auto& f : factors) hfs.push_back(IdealSlices<K>::artinian(f.ring, f.ideal).hilbert_function());
    if (hilbert_closed_form(ConstructionKind::fiber_product, hfs) != res.hilbert)
        throw std::logic_error("fiber product Hilbert function disagrees with the closed form");
    return res;
}

template <class K>
ConstructionResult<K> connected_sum_K(const std::vector<Presentation<K>>& factors) {
    if (factors.size() < 2) throw std::invalid_argument("at least two factors are required");
    std::vector<Presentation<K>> normalized;
    std::vector<IdealSlices<K>> slices;
    std::vector<Polynomial<K>> duals, sigmas;
    std::vector<std::vector<std::size_t>> hfs;
    int d = -1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& f = factors[i];
        IdealSlices<K> s;
        Polynomial<K> F;
        if (f.dual_generator) {
            F = *f.dual_generator;
            s = IdealSlices<K>::annihilator(F);
            if (!f.ideal.empty() && !s.same_ideal(IdealSlices<K>::artinian(f.ring, f.ideal)))
                throw std::invalid_argument("factor " + std::to_string(i) + ": dual generator does not match its ideal");
        } else {
            s = IdealSlices<K>::artinian(f.ring, f.ideal);
            F = s.dual_generator();
        }
        if (d < 0) d = F.degree();
        if (F.degree() != d)
            throw std::invalid_argument("socle degrees differ: factor 0 has " + std::to_string(d) + ", factor " +
                                        std::to_string(i) + " has " + std::to_string(F.degree()));
        sigmas.push_back(thom_class_to_K(s, F));
        normalized.push_back({f.ring, s.minimal_generators(), F});
        hfs.push_back(s.hilbert_function());
        duals.push_back(F);
        slices.push_back(std::move(s));
    }
    if (d < 1) throw std::invalid_argument("connected sums need socle degree >= 1");

    auto joined = join_factors(normalized);
    const Ring& Q = joined.ring;
    auto gens = joined.gens;
    const auto sigma1 = sigmas[0].embed(Q);
    for (std::size_t i = 1; i < sigmas.size(); ++i) gens.push_back(sigma1 + sigmas[i].embed(Q));
    const auto by_presentation = IdealSlices<K>::artinian(Q, gens);

    Polynomial<K> Fsum = duals[0].embed(Q);
    for (std::size_t i = 1; i < duals.size(); ++i) Fsum = Fsum - duals[i].embed(Q);
    auto by_dual = IdealSlices<K>::annihilator(Fsum);

    if (!by_dual.same_ideal(by_presentation))
        throw std::logic_error("connected-sum routes disagree: presentation route gives " +
                               join_polys(by_presentation.minimal_generators()) + ", dual route gives " +
                               join_polys(by_dual.minimal_generators()));

    ConstructionResult<K> res;
    res.kind = ConstructionKind::connected_sum;
    res.hilbert = by_dual.hilbert_function();
    res.socle_degree = d;
    res.presentation = {Q, by_dual.minimal_generators(), Fsum};
    res.slices = std::move(by_dual);
    if (hilbert_closed_form(ConstructionKind::connected_sum, hfs, static_cast<unsigned>(d)) != res.hilbert)
        throw std::logic_error("connected-sum Hilbert function disagrees with the closed form");
    return res;
}

namespace {

template <class K>
bool linearly_dependent(const Polynomial<K>& F, const Polynomial<K>& G) {
    std::vector<Exponents> mons;
    for (const auto& [e, c] : F.terms()) mons.push_back(e);
    for (const auto& [e, c] : G.terms()) mons.push_back(e);
    DenseMatrix<K> m(F.field(), 2, mons.size());
    for (std::size_t j = 0; j < mons.size(); ++j) {
        m(0, j) = F.coefficient(mons[j]);
        m(1, j) = G.coefficient(mons[j]);
    }
    return rank(std::move(m)) < 2;
}

}  // namespace

template <class K>
TwoFactorConstruction<K> connected_sum_T(const Polynomial<K>& F, const Polynomial<K>& G, const Polynomial<K>& tau) {
    if (!same_ring(F.ring(), G.ring())) throw std::invalid_argument("connected_sum_T: ring mismatch");
    if (linearly_dependent(F, G)) throw std::invalid_argument("factors must be linearly independent");
    TwoFactorConstruction<K> out;
    out.conditions = check_cs_conditions(F, G, tau);
    if (!out.conditions.a) throw std::invalid_argument("condition (a) fails: " + out.conditions.detail);
    if (!out.conditions.b) throw std::invalid_argument("condition (b) fails: " + out.conditions.detail);

    const Ring& Q = F.ring();
    const unsigned d = static_cast<unsigned>(F.degree());
    const unsigned k = out.conditions.k;
    const auto tf = contract(out.conditions.effective_tau, F);
    const auto T = IdealSlices<K>::annihilator(tf);
    const auto A = IdealSlices<K>::annihilator(F);
    const auto B = IdealSlices<K>::annihilator(G);
    out.T = {Q, T.minimal_generators(), tf};

    auto fp = IdealSlices<K>::intersection(A, B);
    out.fiber_product.kind = ConstructionKind::fiber_product;
    out.fiber_product.hilbert = fp.hilbert_function();
    out.fiber_product.presentation = {Q, fp.minimal_generators(), std::nullopt};
    out.fiber_product.slices = std::move(fp);

    const Polynomial<K> diff = F - G;
    auto cs = IdealSlices<K>::annihilator(diff);
    out.connected_sum.kind = ConstructionKind::connected_sum;
    out.connected_sum.hilbert = cs.hilbert_function();
    out.connected_sum.socle_degree = static_cast<int>(d);
    out.connected_sum.presentation = {Q, cs.minimal_generators(), diff};
    out.connected_sum.slices = std::move(cs);

    const std::vector<std::vector<std::size_t>> hfs{A.hilbert_function(), B.hilbert_function()};
    const auto hT = T.hilbert_function();
    if (hilbert_closed_form(ConstructionKind::fiber_product, hfs, d, hT, k) != out.fiber_product.hilbert)
        throw std::logic_error("fiber product over T violates the Hilbert function identity");
    if (hilbert_closed_form(ConstructionKind::connected_sum, hfs, d, hT, k) != out.connected_sum.hilbert)
        throw std::logic_error("connected sum over T violates the Hilbert function identity");
    return out;
}

#define AGSUM_INSTANTIATE(K)                                                               \
    template Presentation<K> fiber_product_presentation(const std::vector<Presentation<K>>&); \
    template ConstructionResult<K> fiber_product_K(const std::vector<Presentation<K>>&);   \
    template ConstructionResult<K> connected_sum_K(const std::vector<Presentation<K>>&);   \
    template TwoFactorConstruction<K> connected_sum_T(const Polynomial<K>&, const Polynomial<K>&, \
                                                      const Polynomial<K>&);

AGSUM_INSTANTIATE(Rational)
AGSUM_INSTANTIATE(Fp)

#undef AGSUM_INSTANTIATE

}  // namespace agsum
