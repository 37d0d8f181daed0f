#include "agsum/ideal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace agsum {

namespace {

template <class K>
std::vector<bool> standard_mask(const QuotientSlice<K>& s, std::size_t count) {
    std::vector<bool> mask(count, false);
    for (const Exponents& e : s.standard) mask[monomial_rank(e)] = true;
    return mask;
}

}  // namespace

template <class K>
IdealSlices<K> IdealSlices<K>::from_generators(Ring ring, std::vector<Polynomial<K>> gens, unsigned dmax) {
    IdealSlices s;
    s.ring_ = std::move(ring);
    s.route_ = Route::generators;
    bool unit = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto& g = gens[i];
        if (!same_ring(g.ring(), s.ring_)) throw std::invalid_argument("generator " + std::to_string(i) + " lives in a different ring");
        if (!g.is_homogeneous())
            throw std::invalid_argument("generator " + std::to_string(i) + " (" + g.to_string() + ") is not homogeneous");
        if (g.degree() == 0) unit = true;
    }
    std::erase_if(gens, [](const Polynomial<K>& g) { return g.is_zero(); });
    s.gens_ = std::move(gens);
    s.push_degree_zero(unit);
    s.extend_to(dmax);
    return s;
}

template <class K>
IdealSlices<K> IdealSlices<K>::artinian(Ring ring, std::vector<Polynomial<K>> gens, unsigned cap) {
    IdealSlices s = from_generators(std::move(ring), std::move(gens), 0);
    while (!s.vanishes_) {
        if (s.computed_degree() >= cap)
            throw std::domain_error("not Artinian within cap (degree " + std::to_string(cap) + ")");
        s.compute_next_from_generators();
    }
    return s;
}

template <class K>
IdealSlices<K> IdealSlices<K>::annihilator(const Polynomial<K>& F) {
    if (F.is_zero()) throw std::invalid_argument("annihilator of the zero form");
    if (!F.is_homogeneous()) throw std::invalid_argument("dual generator " + F.to_string() + " is not homogeneous");
    IdealSlices s;
    s.ring_ = F.ring();
    const std::size_t n = s.nvars();
    const unsigned D = static_cast<unsigned>(F.degree());
    Exponents rest(n);
    for (unsigned d = 0; d <= D + 1; ++d) {
        const auto mons = monomial_basis(n, d);
        const std::size_t space = d <= D ? monomial_count(n, D - d) : 0;
        std::vector<std::vector<K>> images(mons.size(), std::vector<K>(space, K::zero(s.field())));
        if (space > 0)
            for (std::size_t i = 0; i < mons.size(); ++i) {
                const Exponents& m = mons[i];
                for (const auto& [a, c] : F.terms()) {
                    bool divides = true;
                    for (std::size_t v = 0; v < n && divides; ++v) divides = a[v] >= m[v];
                    if (!divides) continue;
                    for (std::size_t v = 0; v < n; ++v) rest[v] = a[v] - m[v];
                    images[i][monomial_rank(rest)] += c;
                }
            }
        s.push_from_images(images, space);
        if (s.vanishes_) break;
    }
    return s;
}

template <class K>
IdealSlices<K> IdealSlices<K>::intersection(const IdealSlices& a, const IdealSlices& b) {
    a.check_ring(b);
    IdealSlices s;
    s.ring_ = a.ring_;
    const std::size_t n = s.nvars();
    unsigned last;
    if (a.vanishes_ && b.vanishes_)
        last = std::max(a.computed_degree(), b.computed_degree());
    else if (a.vanishes_)
        last = b.computed_degree();
    else if (b.vanishes_)
        last = a.computed_degree();
    else
        last = std::min(a.computed_degree(), b.computed_degree());
    for (unsigned d = 0; d <= last; ++d) {
        const std::size_t ha = a.hf(d), hb = b.hf(d);
        const std::size_t count = monomial_count(n, d);
        std::vector<std::vector<K>> images(count, std::vector<K>(ha + hb, K::zero(s.field())));
        for (std::size_t i = 0; i < count; ++i) {
            for (std::size_t j = 0; j < ha; ++j) images[i][j] = a.slices_[d].nf(i, j);
            for (std::size_t j = 0; j < hb; ++j) images[i][ha + j] = b.slices_[d].nf(i, j);
        }
        s.push_from_images(images, ha + hb);
        if (s.vanishes_) break;
    }
    return s;
}

template <class K>
void IdealSlices<K>::extend_to(unsigned d) {
    if (route_ != Route::generators) throw std::logic_error("extend_to: ideal was not built from generators");
    while (!vanishes_ && computed_degree() < d) compute_next_from_generators();
}

template <class K>
void IdealSlices<K>::check_ring(const IdealSlices& other) const {
    if (!same_ring(ring_, other.ring_)) throw std::invalid_argument("ideals live in different rings");
}

template <class K>
void IdealSlices<K>::push_degree_zero(bool unit) {
    const FieldSpec& f = field();
    QuotientSlice<K> s;
    if (unit) {
        s.nf = DenseMatrix<K>(f, 1, 0);
        s.mult.assign(nvars(), DenseMatrix<K>(f, 0, 0));
        vanishes_ = true;
    } else {
        s.standard.push_back(Exponents(nvars(), 0));
        s.nf = DenseMatrix<K>::identity(f, 1);
    }
    slices_.push_back(std::move(s));
}

template <class K>
void IdealSlices<K>::push_from_images(const std::vector<std::vector<K>>& images, std::size_t space_dim) {
    const FieldSpec& f = field();
    const std::size_t n = nvars();
    const unsigned d = static_cast<unsigned>(slices_.size());
    const auto mons = monomial_basis(n, d);

    IncrementalBasis<K> basis(f, space_dim);
    std::vector<std::size_t> standard_idx;
    for (std::size_t i = 0; i < mons.size() && !basis.full(); ++i)
        if (basis.insert(images[i])) standard_idx.push_back(i);

    QuotientSlice<K> s;
    const std::size_t h = standard_idx.size();
    s.nf = DenseMatrix<K>(f, mons.size(), h);
    std::vector<bool> is_standard(mons.size(), false);
    for (std::size_t b = 0; b < h; ++b) {
        is_standard[standard_idx[b]] = true;
        s.standard.push_back(mons[standard_idx[b]]);
        s.nf(standard_idx[b], b) = K::one(f);
    }
    if (h > 0)
        for (std::size_t i = 0; i < mons.size(); ++i) {
            if (is_standard[i]) continue;
            const auto c = basis.coordinates(images[i]);
            for (std::size_t b = 0; b < h; ++b) s.nf(i, b) = c[b];
        }

    if (d > 0) {
        QuotientSlice<K>& prev = slices_[d - 1];
        prev.mult.assign(n, DenseMatrix<K>(f, prev.dim(), h));
        Exponents e;
        for (std::size_t b = 0; b < prev.dim(); ++b)
            for (std::size_t k = 0; k < n; ++k) {
                e = prev.standard[b];
                ++e[k];
                const std::size_t r = monomial_rank(e);
                for (std::size_t c = 0; c < h; ++c) prev.mult[k](b, c) = s.nf(r, c);
            }
    }
    if (h == 0) {
        s.mult.assign(n, DenseMatrix<K>(f, 0, 0));
        vanishes_ = true;
    }
    slices_.push_back(std::move(s));
}

template <class K>
void IdealSlices<K>::monomial_into_tensor(const Exponents& m, const K& c, std::vector<K>& w) const {
    std::size_t k = 0;
    while (m[k] == 0) ++k;
    Exponents rest = m;
    --rest[k];
    const QuotientSlice<K>& prev = slices_[total_degree(rest)];
    const std::size_t h = prev.dim();
    const std::size_t r = monomial_rank(rest);
    for (std::size_t b = 0; b < h; ++b)
        if (!prev.nf(r, b).is_zero()) w[k * h + b] += c * prev.nf(r, b);
}

template <class K>
RowEchelon<K> IdealSlices<K>::commutation_echelon(unsigned d) const {
    const FieldSpec& f = field();
    const std::size_t n = nvars();
    const std::size_t h1 = slices_[d - 1].dim();
    DenseMatrix<K> rel(f, 0, n * h1);
    if (d >= 2) {
        const QuotientSlice<K>& pp = slices_[d - 2];
        std::vector<K> row(n * h1);
        for (std::size_t b = 0; b < pp.dim(); ++b)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l) {
                    std::fill(row.begin(), row.end(), K::zero(f));
                    for (std::size_t c = 0; c < h1; ++c) {
                        row[k * h1 + c] += pp.mult[l](b, c);
                        row[l * h1 + c] -= pp.mult[k](b, c);
                    }
                    rel.append_row(row);
                }
    }
    return reduced_row_echelon(std::move(rel));
}

namespace {

// Coordinates of w in W / rowspace(e), read off the non-pivot columns.
template <class K>
std::vector<K> project_onto_free(const RowEchelon<K>& e, const std::vector<std::size_t>& free,
                                 const std::vector<K>& w) {
    std::vector<K> out(free.size());
    for (std::size_t j = 0; j < free.size(); ++j) out[j] = w[free[j]];
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        const K& x = w[e.pivots[i]];
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < free.size(); ++j)
            if (!e.matrix(i, free[j]).is_zero()) out[j] -= x * e.matrix(i, free[j]);
    }
    return out;
}

template <class K>
std::vector<std::size_t> free_columns(const RowEchelon<K>& e, std::size_t cols) {
    std::vector<bool> pivot(cols, false);
    for (std::size_t p : e.pivots) pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < cols; ++c)
        if (!pivot[c]) free.push_back(c);
    return free;
}

}  // namespace

template <class K>
void IdealSlices<K>::compute_next_from_generators() {
    const FieldSpec& f = field();
    const std::size_t n = nvars();
    const unsigned d = computed_degree() + 1;
    const std::size_t h1 = slices_[d - 1].dim();
    const std::size_t wdim = n * h1;
    const auto mons = monomial_basis(n, d);
    if (h1 == 0) {
        push_from_images(std::vector<std::vector<K>>(mons.size()), 0);
        return;
    }

    RowEchelon<K> comm = commutation_echelon(d);
    DenseMatrix<K> rel = std::move(comm.matrix);
    if (rel.rows() == 0) rel = DenseMatrix<K>(f, 0, wdim);
    std::vector<K> w(wdim);
    for (const auto& g : gens_) {
        if (static_cast<unsigned>(g.degree()) != d) continue;
        std::fill(w.begin(), w.end(), K::zero(f));
        for (const auto& [m, c] : g.terms()) monomial_into_tensor(m, c, w);
        rel.append_row(w);
    }
    const RowEchelon<K> e = reduced_row_echelon(std::move(rel));
    const auto free = free_columns(e, wdim);

    std::vector<std::vector<K>> images(mons.size());
    const K one = K::one(f);
    for (std::size_t i = 0; i < mons.size(); ++i) {
        std::fill(w.begin(), w.end(), K::zero(f));
        monomial_into_tensor(mons[i], one, w);
        images[i] = project_onto_free(e, free, w);
    }
    push_from_images(images, free.size());
}

template <class K>
std::size_t IdealSlices<K>::hf(unsigned d) const {
    if (d < slices_.size()) return slices_[d].dim();
    if (vanishes_) return 0;
    throw std::out_of_range("degree " + std::to_string(d) + " has not been computed");
}

template <class K>
std::vector<std::size_t> IdealSlices<K>::hilbert_function() const {
    if (!vanishes_) throw std::domain_error("Hilbert function requested for a quotient not known to be Artinian");
    std::vector<std::size_t> h;
    for (const auto& s : slices_) h.push_back(s.dim());
    while (!h.empty() && h.back() == 0) h.pop_back();
    return h;
}

template <class K>
int IdealSlices<K>::top_degree() const {
    return static_cast<int>(hilbert_function().size()) - 1;
}

template <class K>
const QuotientSlice<K>& IdealSlices<K>::slice(unsigned d) const {
    if (d >= slices_.size()) throw std::out_of_range("degree " + std::to_string(d) + " has no stored slice");
    return slices_[d];
}

template <class K>
const DenseMatrix<K>& IdealSlices<K>::multiplication(unsigned d, std::size_t k) const {
    static const DenseMatrix<K> empty;
    if (d >= slices_.size() && vanishes_) return empty;
    const auto& s = slice(d);
    if (s.mult.empty()) throw std::out_of_range("degree " + std::to_string(d + 1) + " has not been computed");
    return s.mult.at(k);
}

template <class K>
std::vector<K> IdealSlices<K>::coordinates(const Polynomial<K>& f, unsigned d) const {
    const std::size_t h = hf(d);
    std::vector<K> out(h, K::zero(field()));
    if (h == 0) return out;
    const auto& s = slices_[d];
    for (const auto& [m, c] : f.terms()) {
        if (total_degree(m) != d) throw std::invalid_argument("coordinates: term of the wrong degree");
        const std::size_t r = monomial_rank(m);
        for (std::size_t b = 0; b < h; ++b)
            if (!s.nf(r, b).is_zero()) out[b] += c * s.nf(r, b);
    }
    return out;
}

template <class K>
Polynomial<K> IdealSlices<K>::normal_form(const Polynomial<K>& f) const {
    Polynomial<K> out(ring_);
    if (f.is_zero()) return out;
    const unsigned top = static_cast<unsigned>(f.degree());
    for (unsigned d = 0; d <= top; ++d) {
        const auto part = f.homogeneous_part(d);
        if (part.is_zero()) continue;
        const auto c = coordinates(part, d);
        for (std::size_t b = 0; b < c.size(); ++b) out.add_term(slices_[d].standard[b], c[b]);
    }
    return out;
}

template <class K>
bool IdealSlices<K>::contains(const Polynomial<K>& f) const {
    return normal_form(f).is_zero();
}

template <class K>
std::vector<Polynomial<K>> IdealSlices<K>::echelon_basis(unsigned d) const {
    const FieldSpec& f = field();
    const auto mons = monomial_basis(nvars(), d);
    std::vector<Polynomial<K>> out;
    if (d >= slices_.size()) {
        (void)hf(d);  // throws when unknown
        for (const auto& m : mons) out.push_back(Polynomial<K>::monomial(ring_, m, K::one(f)));
        return out;
    }
    const auto& s = slices_[d];
    const auto mask = standard_mask(s, mons.size());
    for (std::size_t i = 0; i < mons.size(); ++i) {
        if (mask[i]) continue;
        auto p = Polynomial<K>::monomial(ring_, mons[i], K::one(f));
        for (std::size_t b = 0; b < s.dim(); ++b) p.add_term(s.standard[b], -s.nf(i, b));
        out.push_back(std::move(p));
    }
    return out;
}

template <class K>
std::vector<Polynomial<K>> IdealSlices<K>::minimal_generators() const {
    const FieldSpec& f = field();
    std::vector<Polynomial<K>> out;
    if (slices_[0].dim() == 0) {
        out.push_back(Polynomial<K>::constant(ring_, K::one(f)));
        return out;
    }
    const std::size_t n = nvars();
    for (unsigned d = 1; d < slices_.size(); ++d) {
        const std::size_t h1 = slices_[d - 1].dim();
        if (h1 == 0) break;
        const std::size_t wdim = n * h1;
        const RowEchelon<K> comm = commutation_echelon(d);
        const auto free = free_columns(comm, wdim);
        IncrementalBasis<K> basis(f, free.size());
        std::vector<K> w(wdim);
        for (auto& row : echelon_basis(d)) {
            if (basis.full()) break;
            std::fill(w.begin(), w.end(), K::zero(f));
            for (const auto& [m, c] : row.terms()) monomial_into_tensor(m, c, w);
            if (basis.insert(project_onto_free(comm, free, w))) out.push_back(std::move(row));
        }
    }
    return out;
}

template <class K>
std::vector<Polynomial<K>> IdealSlices<K>::socle_in_degree(unsigned d) const {
    const FieldSpec& f = field();
    std::vector<Polynomial<K>> out;
    const std::size_t h = hf(d);
    if (h == 0) return out;
    const std::size_t n = nvars();
    const std::size_t h_next = hf(d + 1);
    DenseMatrix<K> m(f, h, n * h_next);
    if (h_next > 0)
        for (std::size_t k = 0; k < n; ++k) {
            const auto& mk = multiplication(d, k);
            for (std::size_t b = 0; b < h; ++b)
                for (std::size_t c = 0; c < h_next; ++c) m(b, k * h_next + c) = mk(b, c);
        }
    const DenseMatrix<K> ker = kernel_basis(m.transpose());
    for (std::size_t col = 0; col < ker.cols(); ++col) {
        Polynomial<K> p(ring_);
        for (std::size_t b = 0; b < h; ++b) p.add_term(slices_[d].standard[b], ker(b, col));
        out.push_back(std::move(p));
    }
    return out;
}

template <class K>
std::vector<Polynomial<K>> IdealSlices<K>::socle_basis() const {
    if (!vanishes_) throw std::domain_error("socle requested for a quotient not known to be Artinian");
    std::vector<Polynomial<K>> out;
    for (unsigned d = 0; d < slices_.size(); ++d)
        for (auto& p : socle_in_degree(d)) out.push_back(std::move(p));
    return out;
}

template <class K>
Polynomial<K> IdealSlices<K>::dual_generator() const {
    const int top = top_degree();
    if (top < 0) throw std::domain_error("dual generator of the zero algebra");
    const auto& s = slices_[static_cast<unsigned>(top)];
    if (s.dim() != 1)
        throw std::domain_error("not Gorenstein: top degree has dimension " + std::to_string(s.dim()));
    Polynomial<K> F(ring_);
    const auto mons = monomial_basis(nvars(), static_cast<unsigned>(top));
    for (std::size_t i = 0; i < mons.size(); ++i) F.add_term(mons[i], s.nf(i, 0));
    return F;
}

template <class K>
bool IdealSlices<K>::contains_ideal_in_degree(const IdealSlices& other, unsigned d) const {
    check_ring(other);
    if (hf(d) == 0) return true;
    for (const auto& row : other.echelon_basis(d)) {
        for (const K& x : coordinates(row, d))
            if (!x.is_zero()) return false;
    }
    return true;
}

namespace {

template <class K>
unsigned common_last_degree(const IdealSlices<K>& a, const IdealSlices<K>& b) {
    if (a.vanishes_beyond() && b.vanishes_beyond()) return std::max(a.computed_degree(), b.computed_degree());
    if (a.vanishes_beyond()) return b.computed_degree();
    if (b.vanishes_beyond()) return a.computed_degree();
    return std::min(a.computed_degree(), b.computed_degree());
}

}  // namespace

template <class K>
bool IdealSlices<K>::contains_ideal(const IdealSlices& other) const {
    const unsigned last = common_last_degree(*this, other);
    for (unsigned d = 0; d <= last; ++d)
        if (!contains_ideal_in_degree(other, d)) return false;
    return true;
}

template <class K>
bool IdealSlices<K>::same_ideal(const IdealSlices& other) const {
    check_ring(other);
    const unsigned last = common_last_degree(*this, other);
    for (unsigned d = 0; d <= last; ++d) {
        if (hf(d) != other.hf(d)) return false;
        if (!contains_ideal_in_degree(other, d)) return false;
    }
    return true;
}

template <class K>
std::size_t IdealSlices<K>::hf_of_sum(const IdealSlices& other, unsigned d) const {
    check_ring(other);
    const std::size_t h = hf(d);
    if (h == 0) return 0;
    DenseMatrix<K> m(field(), 0, h);
    for (const auto& row : other.echelon_basis(d)) m.append_row(coordinates(row, d));
    if (m.rows() == 0) return h;
    return h - rank(std::move(m));
}

template <class K>
StableQuotient<K> stabilize(Ring ring, std::vector<Polynomial<K>> gens, unsigned cap) {
    unsigned maxdeg = 0;
    for (const auto& g : gens)
        if (!g.is_zero()) maxdeg = std::max(maxdeg, static_cast<unsigned>(std::max(g.degree(), 0)));
    StableQuotient<K> out;
    out.slices = IdealSlices<K>::from_generators(std::move(ring), std::move(gens), 1);
    for (unsigned d = 0;; ++d) {
        if (d + 1 > cap)
            throw std::domain_error("Hilbert function did not stabilize within degree cap " + std::to_string(cap));
        out.slices.extend_to(d + 1);
        const std::size_t c = out.slices.hf(d);
        if (c == 0 && out.slices.vanishes_beyond()) {
            out.artinian = true;
            out.stable_from = d;
            out.stable_value = 0;
            return out;
        }
        if (d >= maxdeg && c > 0 && c <= d && out.slices.hf(d + 1) == c) {
            unsigned from = d;
            while (from > 0 && out.slices.hf(from - 1) == c) --from;
            out.stable_from = from;
            out.stable_value = c;
            return out;
        }
    }
}

template <class K>
std::vector<Polynomial<K>> cross_products(const Ring& ring) {
    std::vector<Polynomial<K>> out;
    const auto& blocks = ring->blocks;
    std::vector<std::size_t> start{0};
    for (std::size_t b : blocks) start.push_back(start.back() + b);
    const K one = K::one(ring->field);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
            for (std::size_t a = start[i]; a < start[i + 1]; ++a)
                for (std::size_t b = start[j]; b < start[j + 1]; ++b) {
                    Exponents e(ring->nvars(), 0);
                    e[a] = 1;
                    e[b] = 1;
                    out.push_back(Polynomial<K>::monomial(ring, e, one));
                }
    std::sort(out.begin(), out.end(), [](const Polynomial<K>& p, const Polynomial<K>& q) {
        return grevlex_compare(p.terms().begin()->first, q.terms().begin()->first) > 0;
    });
    return out;
}

template class IdealSlices<Rational>;
template class IdealSlices<Fp>;
template StableQuotient<Rational> stabilize(Ring, std::vector<Polynomial<Rational>>, unsigned);
template StableQuotient<Fp> stabilize(Ring, std::vector<Polynomial<Fp>>, unsigned);
template std::vector<Polynomial<Rational>> cross_products<Rational>(const Ring&);
template std::vector<Polynomial<Fp>> cross_products<Fp>(const Ring&);

}  // namespace agsum
