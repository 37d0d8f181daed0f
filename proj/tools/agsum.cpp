// agsum: Hilbert functions, Betti tables, fiber products, connected sums and
// doubling certificates for graded Artinian algebras.
//
// Exit status: 0 success or agreement, 1 disagreement or failed certificate,
// 2 usage, parse or input errors.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "agsum/apolarity.hpp"
#include "agsum/betti.hpp"
#include "agsum/constructions.hpp"
#include "agsum/doubling.hpp"
#include "agsum/io.hpp"
#include "agsum/resolution.hpp"
#include "agsum/verify.hpp"

using namespace agsum;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string field;  // empty: take each file's own field
    std::string output = "text";
    std::string method = "oracle";
    std::size_t max_dim = OracleLimits{}.max_dim;
    unsigned degree_cap = kDefaultDegreeCap;
    std::vector<std::string> files;
    std::string tau;
    std::string construct;  // betti on several factor files: fp or cs
    std::uint64_t seed = 1;
    unsigned instances = 25;
    bool machine() const { return output == "machine"; }
    OracleLimits limits() const {
        OracleLimits l;
        l.max_dim = max_dim;
        return l;
    }
};

// "QQ", "GF(p)" or a bare prime.
FieldSpec field_from_flag(const std::string& s) {
    if (s == "QQ") return FieldSpec::rational();
    std::string digits = s;
    if (s.rfind("GF(", 0) == 0 && s.back() == ')') digits = s.substr(3, s.size() - 4);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10)
        throw UsageError("--field: expected QQ, GF(p) or a prime, got \"" + s + "\"");
    const auto p = std::stoull(digits);
    if (p >= (1ull << 31)) throw UsageError("--field: prime too large");
    try {
        return FieldSpec::prime(static_cast<std::uint32_t>(p));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--field: ") + e.what());
    }
}

std::vector<AlgebraFile> load(const Options& o, FieldSpec& field) {
    std::vector<AlgebraFile> files;
    for (const auto& path : o.files) files.push_back(read_algebra_file(path));
    if (!o.field.empty()) {
        field = field_from_flag(o.field);
        return files;
    }
    field = files.front().field;
    for (const auto& f : files)
        if (!(f.field == field))
            throw UsageError("inputs use different fields (" + field.name() + ", " + f.field.name() + "); pass --field");
    return files;
}

template <class K>
std::vector<Presentation<K>> presentations(const std::vector<AlgebraFile>& files, const FieldSpec& field) {
    std::vector<Presentation<K>> out;
    for (const auto& f : files) out.push_back(to_presentation<K>(f, field));
    return out;
}

template <class K>
std::vector<std::string> strings(const std::vector<Polynomial<K>>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
    return out;
}

std::string join(const std::vector<std::size_t>& xs) {
    std::vector<std::string> s;
    for (auto x : xs) s.push_back(std::to_string(x));
    return join(s, " ");
}

// Prints ideal, Hilbert function and the requested Betti tables; returns the exit code.
int report(const Options& o, const std::vector<std::string>& ideal, const std::vector<std::size_t>& hilbert,
           const std::optional<BettiTable>& formula, const std::optional<BettiTable>& oracle, bool hilbert_continues = false) {
    std::vector<std::string> diff;
    if (formula && oracle) diff = betti_diff(*formula, *oracle);
    const BettiTable* shown = formula ? &*formula : (oracle ? &*oracle : nullptr);
    if (o.machine()) {
        auto j = machine_output(shown, &hilbert, ideal.empty() ? nullptr : &ideal);
        if (!diff.empty()) j["diff"] = diff;
        std::cout << j.dump() << '\n';
    } else {
        if (!ideal.empty()) std::cout << "ideal: " << join(ideal, ", ") << '\n';
        std::cout << "hilbert: " << join(hilbert) << (hilbert_continues ? " ..." : "") << '\n';
        if (shown) {
            std::cout << "poincare: " << shown->poincare().to_string() << '\n';
            std::cout << render_betti(*shown);
        }
        if (formula && oracle) {
            if (diff.empty()) {
                std::cout << "formula and oracle agree\n";
            } else {
                std::cout << "formula and oracle DISAGREE (formula vs oracle):\n";
                for (const auto& d : diff) std::cout << "  " << d << '\n';
                std::cout << "oracle table:\n" << render_betti(*oracle);
            }
        }
    }
    return diff.empty() ? kOk : kMismatch;
}

bool wants_formula(const Options& o) { return o.method == "formula" || o.method == "both"; }
bool wants_oracle(const Options& o) { return o.method == "oracle" || o.method == "both"; }

int cmd_hilbert(const Options& o) {
    if (o.files.size() != 1) throw UsageError("hilbert takes one algebra file");
    FieldSpec field;
    const auto files = load(o, field);
    return with_field(field, [&]<class K>() {
        const auto A = presentations<K>(files, field).front();
        const auto h = IdealSlices<K>::artinian(A.ring, A.ideal, o.degree_cap).hilbert_function();
        if (o.machine())
            std::cout << machine_output(nullptr, &h).dump() << '\n';
        else
            std::cout << "hilbert: " << join(h) << '\n';
        return kOk;
    });
}

int cmd_construction(const Options& o, ConstructionKind kind);

int cmd_betti(const Options& o) {
    if (o.construct == "fp") return cmd_construction(o, ConstructionKind::fiber_product);
    if (o.construct == "cs") return cmd_construction(o, ConstructionKind::connected_sum);
    if (o.files.size() != 1) throw UsageError("betti takes one algebra file, or factor files with --construct fp|cs");
    if (wants_formula(o))
        throw UsageError("--method " + o.method + ": closed formulas exist only for fiber-product and connected-sum jobs");
    FieldSpec field;
    const auto files = load(o, field);
    return with_field(field, [&]<class K>() {
        const auto A = presentations<K>(files, field).front();
        const auto st = stabilize(A.ring, A.ideal, o.degree_cap);
        std::vector<std::size_t> h;
        for (unsigned d = 0; d <= st.slices.computed_degree(); ++d) h.push_back(st.slices.hf(d));
        while (st.artinian && !h.empty() && h.back() == 0) h.pop_back();
        return report(o, {}, h, std::nullopt, tor_betti(A, o.limits()), !st.artinian);
    });
}

template <class K>
std::vector<unsigned> variable_counts(const std::vector<Presentation<K>>& factors) {
    std::vector<unsigned> n;
    for (const auto& f : factors) n.push_back(static_cast<unsigned>(f.ring->nvars()));
    return n;
}

int cmd_construction(const Options& o, ConstructionKind kind) {
    const bool cs = kind == ConstructionKind::connected_sum;
    if (!o.tau.empty()) {
        if (!cs) throw UsageError("--tau applies to connected-sum only");
        if (wants_formula(o)) throw UsageError("--method " + o.method + ": the closed formulas need T = K (drop --tau)");
    }
    if (o.files.size() < 2) throw UsageError("need at least two factor files");
    FieldSpec field;
    const auto files = load(o, field);
    return with_field(field, [&]<class K>() {
        const auto factors = presentations<K>(files, field);
        if (!o.tau.empty()) {
            if (factors.size() != 2) throw UsageError("--tau takes exactly two dual generator files");
            if (!factors[0].dual_generator || !factors[1].dual_generator)
                throw UsageError("--tau needs files with \"dual_generator\"");
            if (!(*factors[0].ring == *factors[1].ring))
                throw UsageError("--tau needs both dual generators in the same variables");
            const auto& F = *factors[0].dual_generator;
            const auto G = factors[1].dual_generator->embed(factors[0].ring);
            const auto tau = parse_polynomial<K>(factors[0].ring, o.tau);
            const auto res = connected_sum_T(F, G, tau);
            const auto& s = res.connected_sum.slices;
            if (!o.machine()) std::cout << "T: " << join(strings(res.T.ideal), ", ") << '\n';
            return report(o, strings(s.minimal_generators()), res.connected_sum.hilbert, std::nullopt,
                          tor_betti(s, o.limits()));
        }
        const auto res = cs ? connected_sum_K(factors) : fiber_product_K(factors);
        std::optional<BettiTable> formula, oracle;
        if (wants_formula(o)) {
            std::vector<BettiTable> tables;
            for (const auto& A : factors) tables.push_back(tor_betti(A, o.limits()));
            formula = cs ? betti_connected_sum_K(tables, variable_counts(factors), res.socle_degree)
                         : betti_fiber_product_K(tables, variable_counts(factors));
        }
        if (wants_oracle(o)) oracle = tor_betti(res.slices, o.limits());
        return report(o, strings(res.slices.minimal_generators()), res.hilbert, formula, oracle);
    });
}

int cmd_annihilator(const Options& o) {
    if (o.files.size() != 1) throw UsageError("annihilator takes one file");
    FieldSpec field;
    const auto files = load(o, field);
    if (!files.front().dual_generator) throw UsageError("annihilator needs a file with \"dual_generator\"");
    return with_field(field, [&]<class K>() {
        const auto A = presentations<K>(files, field).front();
        const auto h = IdealSlices<K>::artinian(A.ring, A.ideal, o.degree_cap).hilbert_function();
        const auto gens = strings(A.ideal);
        if (o.machine())
            std::cout << machine_output(nullptr, &h, &gens).dump() << '\n';
        else
            std::cout << "ideal: " << join(gens, ", ") << "\nhilbert: " << join(h) << '\n';
        return kOk;
    });
}

int cmd_doubling(const Options& o) {
    if (o.files.size() != 2) throw UsageError("doubling-check takes J and I");
    FieldSpec field;
    const auto files = load(o, field);
    return with_field(field, [&]<class K>() {
        const auto ps = presentations<K>(files, field);
        if (!(*ps[0].ring == *ps[1].ring)) throw UsageError("J and I must use the same variables");
        Presentation<K> I = ps[1];
        I.ring = ps[0].ring;
        for (auto& g : I.ideal) g = g.embed(I.ring);
        const auto cert = doubling_certificate(ps[0], I, o.degree_cap);
        if (o.machine()) {
            nlohmann::json j{{"verdict", cert.verdict()}, {"pass", cert.pass}, {"t", cert.t},
                             {"quotient_hilbert", cert.quotient_hilbert}};
            for (const auto& c : cert.checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
            std::cout << j.dump() << '\n';
        } else {
            std::cout << cert.verdict() << '\n';
            for (const auto& c : cert.checks)
                std::cout << "  " << c.name << ": " << (c.passed ? "ok" : "failed") << (c.detail.empty() ? "" : " (" + c.detail + ")")
                          << '\n';
            if (!cert.quotient_hilbert.empty()) std::cout << "  HF(I/J): " << join(cert.quotient_hilbert) << " ...\n";
            for (const auto& n : cert.notes) std::cout << "  note: " << n << '\n';
        }
        return cert.pass ? kOk : kMismatch;
    });
}

int cmd_verify(const Options& o) {
    VerifyOptions v;
    v.seed = o.seed;
    v.instances = o.instances;
    v.limits = o.limits();
    if (!o.field.empty()) {
        const auto f = field_from_flag(o.field);
        if (f.is_rational()) throw UsageError("verify draws random forms over a prime field");
        v.prime = f.characteristic();
    }
    const auto rep = run_verify(v, o.machine() ? nullptr : &std::cout);
    if (o.machine()) {
        nlohmann::json j{{"seed", v.seed}, {"instances", rep.instances.size()}, {"failures", rep.failures()},
                         {"rejected_factors", rep.rejected_factors}};
        for (const auto& inst : rep.instances)
            j["results"].push_back({{"description", inst.description},
                                    {"dual_generators", inst.dual_generators},
                                    {"agree", inst.fiber_product_ok && inst.connected_sum_ok},
                                    {"problems", inst.problems}});
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "seed " << v.seed << ": " << rep.instances.size() - rep.failures() << "/" << rep.instances.size()
                  << " instances agree (" << rep.rejected_factors << " factors redrawn for linear forms)\n";
    }
    return rep.passed() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Betti tables of fiber products and connected sums of graded Artinian algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--field", o.field, "Field override: QQ, GF(p) or p");
    app.add_option("--output", o.output, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--max-dim", o.max_dim, "Oracle cap on dim A");
    app.add_option("--degree-cap", o.degree_cap, "Give up on Artinian checks past this degree");

    auto files = [&](CLI::App* sub, const std::string& what) {
        sub->add_option("files", o.files, what)->required()->check(CLI::ExistingFile);
    };
    auto method = [&](CLI::App* sub) {
        sub->add_option("--method", o.method, "formula, oracle or both")->check(CLI::IsMember({"formula", "oracle", "both"}));
    };
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of one algebra");
    files(hilbert, "algebra file");
    auto* betti = app.add_subcommand("betti", "Betti table of one algebra (Koszul oracle)");
    files(betti, "algebra file, or factor files with --construct");
    method(betti);
    betti->add_option("--construct", o.construct, "Treat the files as factors of a fiber product (fp) or connected sum (cs)")
        ->check(CLI::IsMember({"fp", "cs"}));
    auto* fp = app.add_subcommand("fiber-product", "Fiber product over K of two or more factors");
    files(fp, "factor files");
    method(fp);
    auto* cs = app.add_subcommand("connected-sum", "Connected sum over K of AG factors of equal socle degree");
    files(cs, "factor files");
    method(cs);
    cs->add_option("--tau", o.tau, "Thom class for a connected sum over T = Q/Ann(tau o F) of two dual generators");
    auto* ann = app.add_subcommand("annihilator", "Minimal generators of Ann(F) for a dual generator file");
    files(ann, "dual generator file");
    auto* dbl = app.add_subcommand("doubling-check", "Necessary conditions for Q/I to double Q/J");
    files(dbl, "J file, then I file");
    auto* ver = app.add_subcommand("verify", "Randomized formula vs oracle differential suite");
    ver->add_option("--seed", o.seed, "RNG seed");
    ver->add_option("--instances", o.instances, "Number of random instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*hilbert) return cmd_hilbert(o);
        if (*betti) return cmd_betti(o);
        if (*fp) return cmd_construction(o, ConstructionKind::fiber_product);
        if (*cs) return cmd_construction(o, ConstructionKind::connected_sum);
        if (*ann) return cmd_annihilator(o);
        if (*dbl) return cmd_doubling(o);
        return cmd_verify(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << " (raise --max-dim)\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kMismatch;
    }
}
