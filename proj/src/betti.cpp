#include "agsum/betti.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "agsum/polynomial.hpp"

namespace agsum {

BiPoly BiPoly::monomial(int ti, int sj, std::int64_t c) {
    BiPoly p;
    p.add(ti, sj, c);
    return p;
}

BiPoly BiPoly::koszul(unsigned n) {
    BiPoly p;
    for (unsigned q = 0; q <= n; ++q) p.add(static_cast<int>(q), static_cast<int>(q), binomial(n, q));
    return p;
}

std::int64_t BiPoly::coefficient(int ti, int sj) const {
    auto it = terms_.find({ti, sj});
    return it == terms_.end() ? 0 : it->second;
}

void BiPoly::add(int ti, int sj, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({ti, sj}, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

BiPoly operator+(BiPoly a, const BiPoly& b) {
    for (const auto& [k, c] : b.terms_) a.add(k.first, k.second, c);
    return a;
}

BiPoly operator-(BiPoly a, const BiPoly& b) {
    for (const auto& [k, c] : b.terms_) a.add(k.first, k.second, -c);
    return a;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) out.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

namespace {

std::string power(const char* var, int e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        std::int64_t mag = c < 0 ? -c : c;
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        std::vector<std::string> parts;
        if (mag != 1 || (k.first == 0 && k.second == 0)) parts.push_back(std::to_string(mag));
        if (k.first != 0) parts.push_back(power("t", k.first));
        if (k.second != 0) parts.push_back(power("s", k.second));
        for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
    }
    return out;
}

BettiTable BettiTable::from_poincare(const BiPoly& p) {
    BettiTable t;
    for (const auto& [k, c] : p.terms()) {
        if (c < 0 || k.first < 0 || k.second < 0)
            throw std::domain_error("Poincare polynomial has a negative coefficient or exponent: " + p.to_string());
        t.set(k.first, k.second, c);
    }
    return t;
}

BiPoly BettiTable::poincare() const {
    BiPoly p;
    for (const auto& [k, c] : entries_) p.add(k.first, k.second, c);
    return p;
}

std::int64_t BettiTable::at(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(int i, int j, std::int64_t value) {
    if (value < 0) throw std::domain_error("negative Betti number");
    if (value == 0)
        entries_.erase({i, j});
    else
        entries_[{i, j}] = value;
}

void BettiTable::add(int i, int j, std::int64_t value) { set(i, j, at(i, j) + value); }

int BettiTable::length() const {
    int m = -1;
    for (const auto& [k, c] : entries_) m = std::max(m, k.first);
    return m;
}

int BettiTable::regularity() const {
    int r = 0;
    for (const auto& [k, c] : entries_) r = std::max(r, k.second - k.first);
    return r;
}

std::vector<std::int64_t> BettiTable::totals() const {
    std::vector<std::int64_t> t(static_cast<std::size_t>(length() + 1), 0);
    for (const auto& [k, c] : entries_) t[static_cast<std::size_t>(k.first)] += c;
    return t;
}

std::vector<std::string> betti_diff(const BettiTable& a, const BettiTable& b) {
    std::map<BettiTable::Key, std::pair<std::int64_t, std::int64_t>> cells;
    for (const auto& [k, c] : a.entries()) cells[k].first = c;
    for (const auto& [k, c] : b.entries()) cells[k].second = c;
    std::vector<std::string> out;
    for (const auto& [k, v] : cells)
        if (v.first != v.second)
            out.push_back("(" + std::to_string(k.first) + "," + std::to_string(k.second) + "): " +
                          std::to_string(v.first) + " vs " + std::to_string(v.second));
    return out;
}

std::string render_betti(const BettiTable& table) {
    if (table.empty()) return "(empty table)\n";
    const int cols = table.length() + 1;
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto& [k, c] : table.entries()) {
        const int r = k.second - k.first;
        lo = first ? r : std::min(lo, r);
        hi = first ? r : std::max(hi, r);
        first = false;
    }
    const auto totals = table.totals();
    std::vector<std::vector<std::string>> grid;  // header, totals, rows
    std::vector<std::string> labels;
    grid.emplace_back();
    labels.emplace_back("");
    for (int i = 0; i < cols; ++i) grid.back().push_back(std::to_string(i));
    grid.emplace_back();
    labels.emplace_back("total:");
    for (int i = 0; i < cols; ++i) grid.back().push_back(std::to_string(totals[static_cast<std::size_t>(i)]));
    for (int r = lo; r <= hi; ++r) {
        grid.emplace_back();
        labels.push_back(std::to_string(r) + ":");
        for (int i = 0; i < cols; ++i) {
            const auto v = table.at(i, i + r);
            grid.back().push_back(v == 0 ? "." : std::to_string(v));
        }
    }
    std::size_t label_width = 0;
    for (const auto& l : labels) label_width = std::max(label_width, l.size());
    std::vector<std::size_t> width(static_cast<std::size_t>(cols), 0);
    for (const auto& row : grid)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    std::ostringstream os;
    for (std::size_t r = 0; r < grid.size(); ++r) {
        std::string line = std::string(label_width - labels[r].size(), ' ') + labels[r];
        for (std::size_t i = 0; i < grid[r].size(); ++i)
            line += ' ' + std::string(width[i] - grid[r][i].size(), ' ') + grid[r][i];
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

std::int64_t betti_cross_ideal(unsigned m, unsigned n, int i) {
    if (i < 1) return 0;
    return binomial(m + n, i + 1) - binomial(m, i + 1) - binomial(n, i + 1);
}

BiPoly cross_ideal_poincare(unsigned m, unsigned n) {
    BiPoly p = BiPoly::one();
    for (int i = 1; i <= static_cast<int>(m + n); ++i) p.add(i, i + 1, betti_cross_ideal(m, n, i));
    return p;
}

std::int64_t betti_cross_ideal_multi(const std::vector<unsigned>& n_vec, int t) {
    if (t < 1 || n_vec.size() < 2) return 0;
    const long long N = std::accumulate(n_vec.begin(), n_vec.end(), 0LL);
    std::int64_t v = static_cast<std::int64_t>(n_vec.size() - 1) * binomial(N, t + 1);
    for (unsigned nk : n_vec) v -= binomial(N - nk, t + 1);
    return v;
}

BiPoly cross_ideal_multi_poincare(const std::vector<unsigned>& n_vec) {
    BiPoly p = BiPoly::one();
    const int N = static_cast<int>(std::accumulate(n_vec.begin(), n_vec.end(), 0u));
    for (int t = 1; t <= N; ++t) p.add(t, t + 1, betti_cross_ideal_multi(n_vec, t));
    return p;
}

BettiTable inflate_betti(const BettiTable& table, unsigned extra) {
    return BettiTable::from_poincare(table.poincare() * BiPoly::koszul(extra));
}

BettiTable inflate_betti_reduced(const BettiTable& table, unsigned extra) {
    return BettiTable::from_poincare((table.poincare() - BiPoly::one()) * BiPoly::koszul(extra));
}

namespace {

void check_factor_tables(const std::vector<BettiTable>& tables, const std::vector<unsigned>& n_vec) {
    if (tables.size() != n_vec.size()) throw std::invalid_argument("one variable count per factor table is required");
    if (tables.size() < 2) throw std::invalid_argument("at least two factors are required");
    for (std::size_t k = 0; k < tables.size(); ++k) {
        if (tables[k].at(0, 0) != 1) throw std::invalid_argument("factor " + std::to_string(k) + " table lacks (0,0) = 1");
        if (tables[k].at(1, 1) != 0)
            throw std::invalid_argument("factor " + std::to_string(k) + " has linear forms in its ideal");
        for (const auto& [key, c] : tables[k].entries())
            if (key.first > static_cast<int>(n_vec[k]))
                throw std::invalid_argument("factor " + std::to_string(k) + " table is longer than its variable count");
    }
}

}  // namespace

BettiTable betti_fiber_product_K(const std::vector<BettiTable>& tables, const std::vector<unsigned>& n_vec) {
    check_factor_tables(tables, n_vec);
    const unsigned N = std::accumulate(n_vec.begin(), n_vec.end(), 0u);
    BiPoly p = cross_ideal_multi_poincare(n_vec);
    for (std::size_t k = 0; k < tables.size(); ++k)
        p = p + (tables[k].poincare() - BiPoly::one()) * BiPoly::koszul(N - n_vec[k]);
    return BettiTable::from_poincare(p);
}

BettiTable betti_connected_sum_K(const std::vector<BettiTable>& tables, const std::vector<unsigned>& n_vec, int e) {
    if (e < 3)
        throw std::domain_error("connected-sum Betti formula needs socle degree >= 3; use betti_socle2 or the oracle");
    check_factor_tables(tables, n_vec);
    for (std::size_t k = 0; k < tables.size(); ++k) {
        const int n = static_cast<int>(n_vec[k]);
        if (tables[k].at(n, n + e) != 1)
            throw std::invalid_argument("not Gorenstein: factor " + std::to_string(k) + " lacks top entry (" +
                                        std::to_string(n) + "," + std::to_string(n + e) + ") = 1");
        for (const auto& [key, c] : tables[k].entries())
            if (tables[k].at(n - key.first, n + e - key.second) != c)
                throw std::invalid_argument("not Gorenstein: factor " + std::to_string(k) + " table is not symmetric");
    }
    const int N = static_cast<int>(std::accumulate(n_vec.begin(), n_vec.end(), 0u));
    const BettiTable fp = betti_fiber_product_K(tables, n_vec);
    BiPoly p;
    for (const auto& [key, c] : fp.entries())
        if (key.second - key.first <= e - 1) p.add(key.first, key.second, c);
    p = p + poincare_dualize(cross_ideal_multi_poincare(n_vec), N, e);
    return BettiTable::from_poincare(p);
}

BettiTable betti_socle2(unsigned n) {
    if (n < 1) throw std::invalid_argument("betti_socle2 needs n >= 1");
    BettiTable t;
    t.set(0, 0, 1);
    for (unsigned i = 1; i + 1 <= n; ++i)
        t.set(static_cast<int>(i), static_cast<int>(i + 1),
              static_cast<std::int64_t>(i) * binomial(n, i + 1) + static_cast<std::int64_t>(n - i) * binomial(n, n - i + 1));
    t.set(static_cast<int>(n), static_cast<int>(n + 2), 1);
    return t;
}

BiPoly poincare_dualize(const BiPoly& p, int N, int e) {
    BiPoly out;
    for (const auto& [k, c] : p.terms()) {
        const int ti = N - k.first, sj = N + e - k.second;
        if (ti < 0 || sj < 0) throw std::logic_error("poincare_dualize: negative exponent from term of " + p.to_string());
        out.add(ti, sj, c);
    }
    return out;
}

BettiTable complete_intersection_betti(const std::vector<unsigned>& degrees) {
    BiPoly p = BiPoly::one();
    for (unsigned d : degrees) p = p * (BiPoly::one() + BiPoly::monomial(1, static_cast<int>(d), 1));
    return BettiTable::from_poincare(p);
}

}  // namespace agsum
