#pragma once

#include "qalg/free_algebra.hpp"
#include "qalg/presentations.hpp"

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

namespace qalg {

inline constexpr std::uint64_t kEntryCap = 10'000'000;

/// One entry of a sparse coordinate vector over the degree-e word list.
struct Entry {
    std::uint64_t col;
    Rational value;
};
using SparseRow = std::vector<Entry>;  // strictly increasing col

/// Records m1 * relation * m2 as a raw spanning element of an ideal slice.
struct Product {
    std::size_t relation;
    std::uint64_t left;   // word index of m1 at degree left_degree
    int left_degree;
    std::uint64_t right;  // word index of m2 at degree right_degree
    int right_degree;
};

struct EngineOptions {
    std::uint64_t entry_cap = kEntryCap;
    std::uint64_t monomial_cap = kMonomialCap;
    /// Keep, for each echelon row, its expansion in raw products m1*g*m2.
    bool track_provenance = false;
};

/// Row-echelon span of one homogeneous slice of a two-sided ideal. Columns
/// are degree-e words in lexicographic order of the alphabet; the pivot of a
/// row is its largest column, normalized to 1.
class IdealSlice {
public:
    IdealSlice(int degree, std::uint64_t columns) : degree_(degree), columns_(columns) {}

    int degree() const { return degree_; }
    std::uint64_t columns() const { return columns_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<SparseRow>& rows() const { return rows_; }
    bool is_pivot(std::uint64_t col) const { return pivots_.count(col) != 0; }

    /// Leading-term reduction; returns true iff `row` became zero.
    bool reduce_to_zero(SparseRow row) const;
    /// Full reduction; returns the remainder (no entry sits on a pivot).
    SparseRow remainder(SparseRow row) const;

    const std::vector<std::vector<std::pair<std::size_t, Rational>>>& provenance() const { return provenance_; }
    const std::vector<Product>& products() const { return products_; }

private:
    friend class TruncatedIdealBasis;

    /// Reduces and inserts; returns true if the rank grew.
    bool insert(SparseRow row, std::vector<std::pair<std::size_t, Rational>>* combo, std::uint64_t entry_cap);

    int degree_;
    std::uint64_t columns_;
    std::vector<SparseRow> rows_;
    std::unordered_map<std::uint64_t, std::size_t> pivots_;
    std::uint64_t entries_ = 0;
    std::vector<Product> products_;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> provenance_;
};

/// Degree-wise echelonized spans of the two-sided ideal generated by a
/// presentation's relations, for every degree 0..max_degree.
class TruncatedIdealBasis {
public:
    TruncatedIdealBasis(Presentation p, int max_degree, EngineOptions options = {});

    const Presentation& presentation() const { return presentation_; }
    int max_degree() const { return max_degree_; }
    const IdealSlice& slice(int e) const { return slices_.at(e); }

    /// Graded dimensions of the quotient, degrees 0..max_degree.
    std::vector<std::uint64_t> dimensions() const;

    /// Word index <-> monomial over the presentation's alphabet.
    std::uint64_t word_index(const Monomial& m) const;
    Monomial word(std::uint64_t index, int degree) const;

    /// Coordinates of a homogeneous polynomial; throws on foreign symbols.
    SparseRow coordinates(const Polynomial& q) const;
    Polynomial from_coordinates(const SparseRow& row, int degree) const;

    /// q must be homogeneous with degree <= max_degree.
    bool contains(const Polynomial& q) const;
    /// Normal-form remainder of q against the slice at its degree.
    Polynomial reduce(const Polynomial& q) const;

    /// Non-pivot words at degree e.
    std::vector<Monomial> quotient_basis(int e) const;

    /// The free-algebra expansion of m1 * relation * m2.
    Polynomial expand(const Product& prod) const;

private:
    void build_slice(int e, const EngineOptions& options);
    int checked_degree(const Polynomial& q) const;

    Presentation presentation_;
    int max_degree_;
    std::map<Generator, std::uint32_t> letter_;
    std::vector<IdealSlice> slices_;
};

inline TruncatedIdealBasis truncated_ideal_basis(const Presentation& p, int d, EngineOptions options = {})
{
    return TruncatedIdealBasis(p, d, options);
}

inline bool ideal_contains(const TruncatedIdealBasis& b, const Polynomial& q) { return b.contains(q); }

std::vector<std::uint64_t> graded_dimension(const Presentation& p, int d, EngineOptions options = {});

std::vector<std::vector<Monomial>> quotient_basis(const Presentation& p, int d, EngineOptions options = {});

}  // namespace qalg
