#include "agsum/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "agsum/apolarity.hpp"
#include "agsum/betti.hpp"
#include "agsum/constructions.hpp"

namespace agsum {

bool VerifyReport::passed() const { return failures() == 0; }

unsigned VerifyReport::failures() const {
    unsigned n = 0;
    for (const auto& inst : instances) n += !(inst.fiber_product_ok && inst.connected_sum_ok);
    return n;
}

namespace {

unsigned draw(std::mt19937_64& rng, unsigned lo, unsigned hi) {
    return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
}

Fp nonzero(const FieldSpec& f, std::mt19937_64& rng) {
    for (;;) {
        Fp c = Fp::random(f, rng);
        if (!c.is_zero()) return c;
    }
}

Polynomial<Fp> random_form(const Ring& ring, unsigned degree, bool dense, std::mt19937_64& rng) {
    const FieldSpec& f = ring->field;
    Polynomial<Fp> F(ring);
    const auto basis = monomial_basis(ring->nvars(), degree);
    for (const auto& e : basis)
        if (dense || draw(rng, 0, 2) == 0) F.add_term(e, nonzero(f, rng));
    if (F.is_zero()) F.add_term(basis[draw(rng, 0, static_cast<unsigned>(basis.size() - 1))], nonzero(f, rng));
    return F;
}

bool check(const char* what, const BettiTable& formula, const BettiTable& oracle, VerifyInstance& inst) {
    const auto diff = betti_diff(formula, oracle);
    for (const auto& d : diff) inst.problems.push_back(std::string(what) + " formula vs oracle " + d);
    return diff.empty();
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options, std::ostream* log) {
    const FieldSpec field = FieldSpec::prime(options.prime);
    std::mt19937_64 rng(options.seed);
    VerifyReport report;
    for (unsigned k = 0; k < options.instances; ++k) {
        VerifyInstance inst;
        inst.index = k;
        const unsigned r = draw(rng, 2, 3);
        const unsigned e = draw(rng, 3, 5);
        const bool dense = draw(rng, 0, 1) == 1;
        std::vector<unsigned> nvec;
        do {
            nvec.assign(r, 0);
            for (auto& n : nvec) n = draw(rng, 1, 3);
        } while (std::accumulate(nvec.begin(), nvec.end(), 0u) > options.max_total_vars);

        std::vector<Presentation<Fp>> factors;
        for (unsigned i = 0; i < r; ++i) {
            std::vector<std::string> names;
            for (unsigned j = 0; j < nvec[i]; ++j) names.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
            const Ring ring = make_ring(names, field);
            for (unsigned attempt = 0;; ++attempt) {
                if (attempt == 1000) throw std::runtime_error("verify: could not draw a factor without linear forms");
                const auto F = random_form(ring, e, dense, rng);
                auto A = annihilator(F);
                if (std::any_of(A.ideal.begin(), A.ideal.end(), [](const auto& g) { return g.degree() == 1; })) {
                    ++report.rejected_factors;
                    continue;
                }
                inst.dual_generators.push_back(F.to_string());
                factors.push_back(std::move(A));
                break;
            }
        }
        std::ostringstream desc;
        desc << "r=" << r << " e=" << e << " n=(";
        for (unsigned i = 0; i < r; ++i) desc << (i ? "," : "") << nvec[i];
        desc << ") " << (dense ? "dense" : "sparse");
        inst.description = desc.str();

        try {
            std::vector<BettiTable> tables;
            for (const auto& A : factors) tables.push_back(tor_betti(A, options.limits));
            const auto fp = fiber_product_K(factors);
            inst.fiber_product_ok =
                check("fiber product", betti_fiber_product_K(tables, nvec), tor_betti(fp.slices, options.limits), inst);
            const auto cs = connected_sum_K(factors);
            inst.connected_sum_ok = check("connected sum", betti_connected_sum_K(tables, nvec, static_cast<int>(e)),
                                          tor_betti(cs.slices, options.limits), inst);
        } catch (const std::exception& ex) {
            inst.problems.push_back(ex.what());
        }
        if (log) {
            *log << "instance " << k << ": " << inst.description << ": "
                 << (inst.fiber_product_ok && inst.connected_sum_ok ? "agree" : "DISAGREE") << '\n';
            for (const auto& p : inst.problems) *log << "  " << p << '\n';
        }
        report.instances.push_back(std::move(inst));
    }
    return report;
}

}  // namespace agsum
