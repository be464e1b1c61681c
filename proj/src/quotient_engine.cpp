#include "qalg/quotient_engine.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qalg {

namespace {

using Combo = std::vector<std::pair<std::size_t, Rational>>;

/// a + f * b for sorted sparse rows.
SparseRow axpy(const SparseRow& a, const Rational& f, const SparseRow& b)
{
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].col < a[i].col) {
            out.push_back({b[j].col, f * b[j].value});
            ++j;
        } else {
            Rational v = a[i].value + f * b[j].value;
            if (v != 0)
                out.push_back({a[i].col, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

Combo combo_axpy(const Combo& a, const Rational& f, const Combo& b)
{
    Combo out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, f * b[j].second);
            ++j;
        } else {
            Rational v = a[i].second + f * b[j].second;
            if (v != 0)
                out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

std::uint64_t ipow(std::uint64_t base, int e)
{
    std::uint64_t r = 1;
    for (int k = 0; k < e; ++k)
        r *= base;
    return r;
}

}  // namespace

bool IdealSlice::reduce_to_zero(SparseRow row) const
{
    while (!row.empty()) {
        auto it = pivots_.find(row.back().col);
        if (it == pivots_.end())
            return false;
        const Rational f = -row.back().value;
        row = axpy(row, f, rows_[it->second]);
    }
    return true;
}

SparseRow IdealSlice::remainder(SparseRow row) const
{
    SparseRow rest;
    while (!row.empty()) {
        auto it = pivots_.find(row.back().col);
        if (it == pivots_.end()) {
            rest.push_back(std::move(row.back()));
            row.pop_back();
            continue;
        }
        const Rational f = -row.back().value;
        row = axpy(row, f, rows_[it->second]);
    }
    std::reverse(rest.begin(), rest.end());
    return rest;
}

bool IdealSlice::insert(SparseRow row, Combo* combo, std::uint64_t entry_cap)
{
    while (!row.empty()) {
        auto it = pivots_.find(row.back().col);
        if (it == pivots_.end())
            break;
        const Rational f = -row.back().value;
        row = axpy(row, f, rows_[it->second]);
        if (combo)
            *combo = combo_axpy(*combo, f, provenance_[it->second]);
    }
    if (row.empty())
        return false;
    const Rational inv = 1 / row.back().value;
    if (inv != 1) {
        for (auto& e : row)
            e.value *= inv;
        if (combo)
            for (auto& c : *combo)
                c.second *= inv;
    }
    entries_ += row.size();
    if (entries_ > entry_cap)
        throw std::length_error("ideal slice at degree " + std::to_string(degree_) + " exceeds " +
                                std::to_string(entry_cap) + " stored entries");
    pivots_.emplace(row.back().col, rows_.size());
    rows_.push_back(std::move(row));
    if (combo)
        provenance_.push_back(std::move(*combo));
    return true;
}

TruncatedIdealBasis::TruncatedIdealBasis(Presentation p, int max_degree, EngineOptions options)
    : presentation_(std::move(p)), max_degree_(max_degree)
{
    if (max_degree < 0)
        throw InputError("negative degree bound");
    const auto& alphabet = presentation_.alphabet();
    for (std::size_t k = 0; k < alphabet.size(); ++k)
        letter_.emplace(alphabet[k], static_cast<std::uint32_t>(k));
    for (const auto& r : presentation_.relations())
        if (!r.is_homogeneous())
            throw InputError("inhomogeneous relation: " + r.str());
    word_count(alphabet.size(), max_degree, options.monomial_cap);
    for (int e = 0; e <= max_degree; ++e)
        build_slice(e, options);
}

void TruncatedIdealBasis::build_slice(int e, const EngineOptions& options)
{
    const std::uint64_t n = presentation_.alphabet().size();
    IdealSlice slice(e, word_count(n, e, options.monomial_cap));

    std::vector<SparseRow> raw;
    std::uint64_t raw_entries = 0;
    const auto& rels = presentation_.relations();
    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
        const Polynomial& g = rels[ri];
        if (g.is_zero() || g.degree() > e)
            continue;
        const int e0 = g.degree();
        const SparseRow base = coordinates(g);
        const std::uint64_t mid = ipow(n, e0);
        for (int ld = 0; ld <= e - e0; ++ld) {
            const int rd = e - e0 - ld;
            const std::uint64_t lcount = ipow(n, ld), rcount = ipow(n, rd);
            for (std::uint64_t l = 0; l < lcount; ++l)
                for (std::uint64_t r = 0; r < rcount; ++r) {
                    SparseRow row;
                    row.reserve(base.size());
                    for (const auto& entry : base)
                        row.push_back({(l * mid + entry.col) * rcount + r, entry.value});
                    raw_entries += row.size();
                    if (raw_entries > options.entry_cap)
                        throw std::length_error("ideal slice at degree " + std::to_string(e) + " exceeds " +
                                                std::to_string(options.entry_cap) + " generated entries");
                    raw.push_back(std::move(row));
                    if (options.track_provenance)
                        slice.products_.push_back({ri, l, ld, r, rd});
                }
        }
    }

    // Sparsest rows first; the stable order keeps the result deterministic.
    std::vector<std::size_t> order(raw.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return raw[a].size() < raw[b].size(); });
    for (std::size_t idx : order) {
        if (options.track_provenance) {
            Combo combo{{idx, Rational(1)}};
            slice.insert(std::move(raw[idx]), &combo, options.entry_cap);
        } else {
            slice.insert(std::move(raw[idx]), nullptr, options.entry_cap);
        }
        if (slice.rank() == slice.columns())
            break;
    }
    slices_.push_back(std::move(slice));
}

std::vector<std::uint64_t> TruncatedIdealBasis::dimensions() const
{
    std::vector<std::uint64_t> dims;
    for (const auto& s : slices_)
        dims.push_back(s.columns() - s.rank());
    return dims;
}

std::uint64_t TruncatedIdealBasis::word_index(const Monomial& m) const
{
    const std::uint64_t n = presentation_.alphabet().size();
    std::uint64_t idx = 0;
    for (const auto& g : m) {
        auto it = letter_.find(g);
        if (it == letter_.end())
            throw InputError("symbol " + g.str() + " is not a generator of " + presentation_.label());
        idx = idx * n + it->second;
    }
    return idx;
}

Monomial TruncatedIdealBasis::word(std::uint64_t index, int degree) const
{
    const auto& alphabet = presentation_.alphabet();
    const std::uint64_t n = alphabet.size();
    Monomial m;
    m.reserve(degree);
    for (int k = 0; k < degree; ++k) {
        m.push_back(alphabet[index % n]);
        index /= n;
    }
    std::reverse(m.begin(), m.end());
    return m;
}

SparseRow TruncatedIdealBasis::coordinates(const Polynomial& q) const
{
    SparseRow row;
    row.reserve(q.size());
    for (const auto& [m, c] : q.terms())
        row.push_back({word_index(m), c});
    std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
    return row;
}

Polynomial TruncatedIdealBasis::from_coordinates(const SparseRow& row, int degree) const
{
    Polynomial p;
    for (const auto& e : row)
        p += Polynomial(word(e.col, degree), e.value, presentation_.universe());
    return p;
}

int TruncatedIdealBasis::checked_degree(const Polynomial& q) const
{
    if (!q.is_homogeneous())
        throw InputError("membership query must be homogeneous: " + q.str());
    const int d = q.degree();
    if (d > max_degree_)
        throw InputError("query degree " + std::to_string(d) + " exceeds computed bound " +
                         std::to_string(max_degree_));
    return d;
}

bool TruncatedIdealBasis::contains(const Polynomial& q) const
{
    if (q.is_zero())
        return true;
    return slices_[checked_degree(q)].reduce_to_zero(coordinates(q));
}

Polynomial TruncatedIdealBasis::reduce(const Polynomial& q) const
{
    if (q.is_zero())
        return q;
    const int d = checked_degree(q);
    return from_coordinates(slices_[d].remainder(coordinates(q)), d);
}

std::vector<Monomial> TruncatedIdealBasis::quotient_basis(int e) const
{
    const IdealSlice& s = slices_.at(e);
    std::vector<Monomial> out;
    for (std::uint64_t col = 0; col < s.columns(); ++col)
        if (!s.is_pivot(col))
            out.push_back(word(col, e));
    return out;
}

Polynomial TruncatedIdealBasis::expand(const Product& prod) const
{
    const int n = presentation_.universe();
    const Polynomial left(word(prod.left, prod.left_degree), Rational(1), n);
    const Polynomial right(word(prod.right, prod.right_degree), Rational(1), n);
    return left * presentation_.relations().at(prod.relation) * right;
}

std::vector<std::uint64_t> graded_dimension(const Presentation& p, int d, EngineOptions options)
{
    return TruncatedIdealBasis(p, d, options).dimensions();
}

std::vector<std::vector<Monomial>> quotient_basis(const Presentation& p, int d, EngineOptions options)
{
    TruncatedIdealBasis b(p, d, options);
    std::vector<std::vector<Monomial>> out;
    for (int e = 0; e <= d; ++e)
        out.push_back(b.quotient_basis(e));
    return out;
}

}  // namespace qalg
