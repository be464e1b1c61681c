#pragma once

#include "qalg/complexes.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace qalg {

using Rational = mpq_class;

/// A generator of the free algebra: either z(A,i) with i not in A, or u(A)
/// with A nonempty. u(empty) is the unit and never appears as a symbol.
class Generator {
public:
    enum class Kind : std::uint8_t { Z = 0, U = 1 };

    static Generator z(const NodeSet& a, int i);
    static Generator u(const NodeSet& a);

    Kind kind() const { return kind_; }
    NodeSet::Mask set_mask() const { return mask_; }
    /// The index i of z(A,i); 0 for u symbols.
    int index() const { return index_; }
    int set_size() const { return size_; }
    /// Largest vertex mentioned by the symbol.
    int max_vertex() const;

    /// Canonical order: all Z before all U; then (|A|, sorted elements of A
    /// lexicographically, i).
    bool operator<(const Generator& o) const { return key() < o.key(); }
    bool operator==(const Generator& o) const { return key() == o.key(); }
    bool operator!=(const Generator& o) const { return !(*this == o); }

    /// "u({1,2})", "z({},1)"
    std::string str() const;

private:
    Generator(Kind k, NodeSet::Mask mask, int index);
    std::tuple<std::uint8_t, std::uint8_t, std::uint64_t, std::uint8_t> key() const
    {
        return {static_cast<std::uint8_t>(kind_), size_, lex_, index_};
    }

    Kind kind_;
    std::uint8_t size_;
    std::uint8_t index_;
    NodeSet::Mask mask_;
    std::uint64_t lex_;  // sorted elements packed 4 bits each, first element most significant
};

/// A word in the generators; the empty word is the unit.
using Monomial = std::vector<Generator>;

/// Degree first, then lexicographic in the canonical symbol order.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

std::string to_string(const Monomial& m);

/// An element of the free associative algebra over Q. Canonical: no zero
/// coefficients stored. A universe of 0 means "not yet tied to any n"
/// (constants); otherwise operands must agree on n.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, MonomialLess>;

    Polynomial() = default;
    explicit Polynomial(const Rational& c);
    Polynomial(const Generator& g, int n);
    Polynomial(const Monomial& m, const Rational& c, int n);

    static Polynomial z(const NodeSet& a, int i);
    static Polynomial u(const NodeSet& a);  // u(empty) is the unit

    const Terms& terms() const { return terms_; }
    int universe() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coeff(const Monomial& m) const;

    /// Maximum word length, -1 for zero.
    int degree() const;
    bool is_homogeneous() const;
    /// The set of generators occurring, in canonical order.
    std::vector<Generator> symbols() const;

    void add_term(const Monomial& m, const Rational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Canonical text form, e.g. "-u({1})*u({2}) + 3/2*u({1,2})"; "0" for zero.
    std::string str() const;

private:
    int merge_universe(const Polynomial& o) const;

    Terms terms_;
    int n_ = 0;
};

inline Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }
inline Polynomial scale(const Rational& c, const Polynomial& p) { return c * p; }
Polynomial commutator(const Polynomial& p, const Polynomial& q);

using SubstitutionMap = std::map<Generator, Polynomial>;

/// Applies the algebra homomorphism determined by `images`. Throws
/// std::invalid_argument when an occurring symbol has no image.
Polynomial substitute(const Polynomial& p, const SubstitutionMap& images);

/// Applies `images` where present and leaves other symbols unchanged.
Polynomial substitute_partial(const Polynomial& p, const SubstitutionMap& images);

/// Terms of word length exactly d.
Polynomial graded_component(const Polynomial& p, int d);

inline constexpr std::uint64_t kMonomialCap = 10'000'000;

/// All |alphabet|^d words of length d, lexicographic in the order of `alphabet`.
/// Throws std::length_error beyond `cap` words.
std::vector<Monomial> enumerate_monomials(const std::vector<Generator>& alphabet, int d,
                                          std::uint64_t cap = kMonomialCap);

/// Checked |alphabet|^d; throws std::length_error beyond `cap`.
std::uint64_t word_count(std::size_t alphabet_size, int d, std::uint64_t cap = kMonomialCap);

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses the polynomial grammar (see README): sums of terms such as
/// `3/2*u({1,2})*u({1}) - [u({1}),u({2})]`, with parentheses and `[p,q]`
/// commutator sugar. Every vertex must lie in 1..n.
Polynomial parse_polynomial(std::string_view text, int n);

}  // namespace qalg
