#include "agsum/apolarity.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace agsum {

template <class K>
Polynomial<K> contract(const Polynomial<K>& f, const Polynomial<K>& F) {
    if (!same_ring(f.ring(), F.ring())) throw std::invalid_argument("contract: ring mismatch");
    Polynomial<K> out(F.ring());
    const std::size_t n = F.ring()->nvars();
    Exponents rest(n);
    for (const auto& [m, c] : f.terms())
        for (const auto& [a, x] : F.terms()) {
            bool divides = true;
            for (std::size_t v = 0; v < n && divides; ++v) divides = a[v] >= m[v];
            if (!divides) continue;
            for (std::size_t v = 0; v < n; ++v) rest[v] = a[v] - m[v];
            out.add_term(rest, c * x);
        }
    return out;
}

template <class K>
DenseMatrix<K> catalecticant(const Polynomial<K>& F, int i) {
    if (F.is_zero() || !F.is_homogeneous()) throw std::invalid_argument("catalecticant: F must be a nonzero form");
    const int d = F.degree();
    if (i < 0 || i > d) throw std::out_of_range("catalecticant: degree " + std::to_string(i) + " outside 0.." + std::to_string(d));
    const std::size_t n = F.ring()->nvars();
    const auto rows = monomial_basis(n, static_cast<unsigned>(i));
    DenseMatrix<K> m(F.field(), rows.size(), monomial_count(n, static_cast<unsigned>(d - i)));
    const K one = K::one(F.field());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto image = contract(Polynomial<K>::monomial(F.ring(), rows[r], one), F);
        for (const auto& [e, c] : image.terms()) m(r, monomial_rank(e)) = c;
    }
    return m;
}

template <class K>
Presentation<K> annihilator(const Polynomial<K>& F) {
    const auto slices = IdealSlices<K>::annihilator(F);
    return {F.ring(), slices.minimal_generators(), F};
}

template <class K>
Polynomial<K> thom_class_to_K(const IdealSlices<K>& slices, const Polynomial<K>& F) {
    const auto socle = slices.socle_basis();
    if (socle.size() != 1)
        throw std::domain_error("not Gorenstein: socle dimension " + std::to_string(socle.size()));
    const int top = slices.top_degree();
    if (F.degree() != top)
        throw std::invalid_argument("orientation degree " + std::to_string(F.degree()) + " differs from socle degree " +
                                    std::to_string(top));
    const auto& s = slices.slice(static_cast<unsigned>(top)).standard.front();
    const K one = K::one(slices.field());
    const auto sm = Polynomial<K>::monomial(slices.ring(), s, one);
    const auto value = contract(sm, F);
    if (value.is_zero()) throw std::invalid_argument("dual generator does not realize the algebra");
    return sm.scaled(value.terms().begin()->second.inverse());
}

template <class K>
Polynomial<K> socle_and_thom_to_K(const Presentation<K>& A) {
    const auto slices = IdealSlices<K>::artinian(A.ring, A.ideal);
    if (A.dual_generator) return thom_class_to_K(slices, *A.dual_generator);
    const auto socle = slices.socle_basis();
    if (socle.size() != 1) throw std::domain_error("not Gorenstein: socle dimension " + std::to_string(socle.size()));
    const Polynomial<K> F = slices.dual_generator();
    return thom_class_to_K(slices, F);
}

namespace {

template <class K>
std::set<std::size_t> support_variables(const Polynomial<K>& p) {
    std::set<std::size_t> vars;
    for (const auto& [e, c] : p.terms())
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v] > 0) vars.insert(v);
    return vars;
}

template <class K>
void evaluate_conditions(const Polynomial<K>& F, const Polynomial<K>& G, const Polynomial<K>& tau,
                         CsConditionReport<K>& report) {
    const auto tf = contract(tau, F);
    const auto tg = contract(tau, G);
    report.a = !tf.is_zero() && tf == tg;
    report.b = false;
    report.first_failing_degree.reset();
    if (tf.is_zero()) {
        report.detail = "tau o F = 0";
        return;
    }
    if (!report.a) report.detail = "tau o F != tau o G";
    const auto L = IdealSlices<K>::annihilator(tf);
    const auto IF = IdealSlices<K>::annihilator(F);
    const auto IG = IdealSlices<K>::annihilator(G);
    for (unsigned e = 0; e <= report.k + 1; ++e) {
        const bool ok = L.contains_ideal_in_degree(IF, e) && L.contains_ideal_in_degree(IG, e) &&
                        IF.hf_of_sum(IG, e) == L.hf(e);
        if (!ok) {
            report.first_failing_degree = e;
            if (report.detail.empty())
                report.detail = "Ann(tau o F) != Ann(F) + Ann(G) in degree " + std::to_string(e);
            return;
        }
    }
    report.b = true;
}

}  // namespace

template <class K>
CsConditionReport<K> check_cs_conditions(const Polynomial<K>& F, const Polynomial<K>& G, const Polynomial<K>& tau) {
    if (!same_ring(F.ring(), G.ring()) || !same_ring(F.ring(), tau.ring()))
        throw std::invalid_argument("check_cs_conditions: ring mismatch");
    if (F.is_zero() || G.is_zero() || !F.is_homogeneous() || !G.is_homogeneous())
        throw std::invalid_argument("check_cs_conditions: F and G must be nonzero forms");
    if (F.degree() != G.degree())
        throw std::invalid_argument("check_cs_conditions: deg F = " + std::to_string(F.degree()) +
                                    " but deg G = " + std::to_string(G.degree()));
    if (tau.is_zero() || !tau.is_homogeneous() || tau.degree() > F.degree())
        throw std::invalid_argument("check_cs_conditions: tau must be a nonzero form of degree at most deg F");

    CsConditionReport<K> report;
    report.k = static_cast<unsigned>(F.degree() - tau.degree());
    report.effective_tau = tau;
    evaluate_conditions(F, G, tau, report);
    report.literal_a = report.a;
    if (report.a || tau.degree() != 0) return report;

    // A constant tau cannot compare forms in disjoint variables; read it as
    // the pair of orientations instead, i.e. T = K.
    const auto vf = support_variables(F), vg = support_variables(G);
    for (std::size_t v : vf)
        if (vg.count(v)) return report;
    report.disjoint_variables = true;
    const auto sigma_f = thom_class_to_K(IdealSlices<K>::annihilator(F), F);
    const auto sigma_g = thom_class_to_K(IdealSlices<K>::annihilator(G), G);
    report.effective_tau = sigma_f + sigma_g;
    report.k = 0;
    report.detail.clear();
    evaluate_conditions(F, G, report.effective_tau, report);
    if (report.passed()) report.detail = "disjoint-variable, trivially compatible (T = K)";
    return report;
}

#define AGSUM_INSTANTIATE(K)                                                                        \
    template Polynomial<K> contract(const Polynomial<K>&, const Polynomial<K>&);                    \
    template DenseMatrix<K> catalecticant(const Polynomial<K>&, int);                               \
    template Presentation<K> annihilator(const Polynomial<K>&);                                     \
    template Polynomial<K> thom_class_to_K(const IdealSlices<K>&, const Polynomial<K>&);            \
    template Polynomial<K> socle_and_thom_to_K(const Presentation<K>&);                             \
    template CsConditionReport<K> check_cs_conditions(const Polynomial<K>&, const Polynomial<K>&, \
                                                      const Polynomial<K>&);

AGSUM_INSTANTIATE(Rational)
AGSUM_INSTANTIATE(Fp)

#undef AGSUM_INSTANTIATE

}  // namespace agsum
