#include "agsum/polynomial.hpp"

#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace agsum {

std::size_t RingSpec::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < variables.size(); ++i)
        if (variables[i] == name) return i;
    return std::string::npos;
}

namespace {

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char ch : s)
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
    return true;
}

}  // namespace

Ring make_ring(std::vector<std::string> variables, FieldSpec field, std::vector<std::size_t> blocks) {
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (!is_identifier(v)) throw std::invalid_argument("invalid variable name '" + v + "'");
        if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name '" + v + "'");
    }
    if (!blocks.empty()) {
        const std::size_t total = std::accumulate(blocks.begin(), blocks.end(), std::size_t{0});
        if (total != variables.size()) throw std::invalid_argument("blocks do not partition the variables");
        for (std::size_t b : blocks)
            if (b == 0) throw std::invalid_argument("empty variable block");
    }
    return std::make_shared<const RingSpec>(RingSpec{std::move(variables), field, std::move(blocks)});
}

Ring join_rings(const std::vector<Ring>& rings) {
    if (rings.empty()) throw std::invalid_argument("join_rings: no rings");
    std::vector<std::string> vars;
    std::vector<std::size_t> blocks;
    for (const Ring& r : rings) {
        if (!(r->field == rings.front()->field)) throw std::invalid_argument("factors are defined over different fields");
        vars.insert(vars.end(), r->variables.begin(), r->variables.end());
        blocks.push_back(r->nvars());
    }
    std::set<std::string> seen;
    for (const auto& v : vars)
        if (!seen.insert(v).second) throw std::invalid_argument("variable '" + v + "' is shared between factors");
    // rings without variables (K itself) contribute empty blocks; drop them
    std::erase(blocks, std::size_t{0});
    return make_ring(std::move(vars), rings.front()->field, std::move(blocks));
}

bool same_ring(const Ring& a, const Ring& b) {
    return a == b || (a && b && a->variables == b->variables && a->field == b->field);
}

unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

int grevlex_compare(const Exponents& a, const Exponents& b) {
    const unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
}

long long binomial(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    b = std::min(b, a - b);
    long long r = 1;
    for (long long k = 1; k <= b; ++k) r = r * (a - b + k) / k;
    return r;
}

std::size_t monomial_count(std::size_t n, unsigned d) {
    if (n == 0) return d == 0 ? 1 : 0;
    return static_cast<std::size_t>(binomial(static_cast<long long>(d + n - 1), static_cast<long long>(n - 1)));
}

namespace {

void fill_basis(std::size_t n, unsigned d, Exponents& cur, std::vector<Exponents>& out) {
    if (n == 1) {
        cur[0] = d;
        out.push_back(cur);
        return;
    }
    // last variable's exponent ascending gives descending grevlex
    for (unsigned k = 0; k <= d; ++k) {
        cur[n - 1] = k;
        fill_basis(n - 1, d - k, cur, out);
    }
    cur[n - 1] = 0;
}

}  // namespace

std::vector<Exponents> monomial_basis(std::size_t n, unsigned d) {
    std::vector<Exponents> out;
    if (n == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    out.reserve(monomial_count(n, d));
    Exponents cur(n, 0);
    fill_basis(n, d, cur, out);
    return out;
}

std::size_t monomial_rank(const Exponents& e) {
    std::size_t rank = 0;
    unsigned rem = total_degree(e);
    for (std::size_t i = e.size(); i-- > 1;) {
        for (unsigned k = 0; k < e[i]; ++k) rank += monomial_count(i, rem - k);
        rem -= e[i];
    }
    return rank;
}

std::string format_monomial(const RingSpec& ring, const Exponents& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += ring.variables[i];
        if (e[i] > 1) s += '^' + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

template <class K>
Polynomial<K> Polynomial<K>::constant(Ring ring, const K& c) {
    const std::size_t n = ring->nvars();
    Polynomial p(std::move(ring));
    p.add_term(Exponents(n, 0), c);
    return p;
}

template <class K>
Polynomial<K> Polynomial<K>::monomial(Ring ring, Exponents e, const K& c) {
    if (e.size() != ring->nvars()) throw std::invalid_argument("monomial: exponent length mismatch");
    Polynomial p(std::move(ring));
    p.add_term(e, c);
    return p;
}

template <class K>
Polynomial<K> Polynomial<K>::variable(Ring ring, std::size_t index) {
    Exponents e(ring->nvars(), 0);
    e.at(index) = 1;
    const K one = K::one(ring->field);
    return monomial(std::move(ring), std::move(e), one);
}

template <class K>
int Polynomial<K>::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(total_degree(terms_.begin()->first));
}

template <class K>
bool Polynomial<K>::is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = total_degree(terms_.begin()->first);
    return total_degree(terms_.rbegin()->first) == d;
}

template <class K>
K Polynomial<K>::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? K::zero(field()) : it->second;
}

template <class K>
void Polynomial<K>::add_term(const Exponents& e, const K& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

template <class K>
Polynomial<K> Polynomial<K>::homogeneous_part(unsigned d) const {
    Polynomial out(ring_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == d) out.terms_.emplace(e, c);
    return out;
}

template <class K>
Polynomial<K> operator*(const Polynomial<K>& a, const Polynomial<K>& b) {
    Polynomial<K> out(a.ring());
    Exponents e(a.ring()->nvars());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

template <class K>
Polynomial<K> Polynomial<K>::scaled(const K& c) const {
    Polynomial out(ring_);
    if (c.is_zero()) return out;
    for (const auto& [e, x] : terms_) out.terms_.emplace(e, x * c);
    return out;
}

template <class K>
std::string Polynomial<K>::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string coeff = c.to_string();
        bool negative = !coeff.empty() && coeff[0] == '-';
        if (negative) coeff.erase(0, 1);
        if (first)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        first = false;
        const bool constant_term = total_degree(e) == 0;
        if (constant_term) {
            s += coeff;
        } else {
            if (coeff != "1") s += coeff + "*";
            s += format_monomial(*ring_, e);
        }
    }
    return s;
}

template <class K>
Polynomial<K> Polynomial<K>::embed(const Ring& target) const {
    if (!(target->field == ring_->field)) throw std::invalid_argument("embed: field mismatch");
    std::vector<std::size_t> where(ring_->nvars());
    for (std::size_t i = 0; i < where.size(); ++i) {
        where[i] = target->index_of(ring_->variables[i]);
        if (where[i] == std::string::npos)
            throw std::invalid_argument("embed: variable '" + ring_->variables[i] + "' missing from target ring");
    }
    Polynomial out(target);
    Exponents f(target->nvars());
    for (const auto& [e, c] : terms_) {
        std::fill(f.begin(), f.end(), 0u);
        for (std::size_t i = 0; i < e.size(); ++i) f[where[i]] = e[i];
        out.terms_.emplace(f, c);
    }
    return out;
}

namespace {

class PolyParser {
   public:
    PolyParser(const RingSpec& ring, std::string_view text) : ring_(ring), text_(text) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos_ + 1) + ": " + what +
                                    " in \"" + std::string(text_) + "\"");
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip();
        return pos_ >= text_.size();
    }
    char peek() {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    std::string digits() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string identifier() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    // factor: var [^ exp]
    void factor(Exponents& e) {
        const std::size_t at = pos_;
        const std::string name = identifier();
        if (name.empty()) fail("expected a variable");
        const std::size_t idx = ring_.index_of(name);
        if (idx == std::string::npos) {
            pos_ = at;
            skip();
            fail("unknown variable '" + name + "'");
        }
        unsigned exp = 1;
        if (peek() == '^') {
            ++pos_;
            const std::string d = digits();
            if (d.empty()) fail("expected an exponent");
            if (d.size() > 6) fail("exponent too large");
            exp = static_cast<unsigned>(std::stoul(d));
        }
        e[idx] += exp;
    }

    struct Term {
        bool negative = false;
        mpz_class num = 1, den = 1;
        Exponents exps;
    };

    Term term(bool negative) {
        Term t;
        t.negative = negative;
        t.exps.assign(ring_.nvars(), 0);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t.num = mpz_class(digits());
            have_coeff = true;
            if (peek() == '/') {
                ++pos_;
                const std::string d = digits();
                if (d.empty()) fail("expected a denominator");
                t.den = mpz_class(d);
                if (t.den == 0) fail("zero denominator");
            }
        }
        bool need_factor = !have_coeff;
        if (have_coeff && peek() == '*') {
            ++pos_;
            need_factor = true;
        }
        const char c = peek();
        if (need_factor || std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            factor(t.exps);
            while (peek() == '*') {
                ++pos_;
                factor(t.exps);
            }
        }
        return t;
    }

    template <class K>
    Polynomial<K> parse(const Ring& ring) {
        Polynomial<K> p(ring);
        if (at_end()) fail("empty polynomial");
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        for (;;) {
            Term t = term(negative);
            K c = K::from_fraction(ring->field, t.negative ? mpz_class(-t.num) : t.num, t.den);
            p.add_term(t.exps, c);
            if (at_end()) break;
            const char op = peek();
            if (op != '+' && op != '-') fail(std::string("unexpected character '") + op + "'");
            negative = op == '-';
            ++pos_;
        }
        return p;
    }

   private:
    const RingSpec& ring_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

template <class K>
Polynomial<K> parse_polynomial(const Ring& ring, std::string_view text) {
    PolyParser parser(*ring, text);
    return parser.parse<K>(ring);
}

template class Polynomial<Rational>;
template class Polynomial<Fp>;
template Polynomial<Rational> operator*(const Polynomial<Rational>&, const Polynomial<Rational>&);
template Polynomial<Fp> operator*(const Polynomial<Fp>&, const Polynomial<Fp>&);
template Polynomial<Rational> parse_polynomial<Rational>(const Ring&, std::string_view);
template Polynomial<Fp> parse_polynomial<Fp>(const Ring&, std::string_view);

}  // namespace agsum
