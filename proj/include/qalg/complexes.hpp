#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qalg {

inline constexpr int kMaxNodes = 16;

/// Thrown for malformed combinatorial input (out-of-range vertex, bad n, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

void check_universe(int n);

/// A subset of {1,...,n}, stored as a bitmask (bit k-1 <-> element k).
class NodeSet {
public:
    using Mask = std::uint32_t;

    NodeSet() = default;
    explicit NodeSet(int n) : n_(n) { check_universe(n); }
    NodeSet(int n, std::initializer_list<int> elems);
    NodeSet(int n, const std::vector<int>& elems);

    static NodeSet from_mask(int n, Mask mask);
    static NodeSet full(int n) { return from_mask(n, full_mask(n)); }
    static Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1); }

    int universe() const { return n_; }
    Mask mask() const { return mask_; }
    int size() const { return __builtin_popcount(mask_); }
    bool empty() const { return mask_ == 0; }
    bool contains(int i) const { return i >= 1 && i <= n_ && ((mask_ >> (i - 1)) & 1u); }
    bool subset_of(const NodeSet& o) const { return (mask_ & ~o.mask_) == 0; }

    /// Sorted ascending list of members.
    std::vector<int> elements() const;
    int min_element() const;

    NodeSet with(int i) const;
    NodeSet without(int i) const;
    NodeSet operator|(const NodeSet& o) const;
    NodeSet operator&(const NodeSet& o) const;
    NodeSet operator-(const NodeSet& o) const;

    bool operator==(const NodeSet& o) const { return n_ == o.n_ && mask_ == o.mask_; }
    bool operator!=(const NodeSet& o) const { return !(*this == o); }

    /// "{1,3}" / "{}"
    std::string str() const;

private:
    void check_same(const NodeSet& o) const;

    int n_ = 0;
    Mask mask_ = 0;
};

/// Every subset of `s` (including the empty set and `s`), in increasing mask order.
std::vector<NodeSet> subsets(const NodeSet& s);

using Edge = std::pair<int, int>;  // i < j

/// A downward-closed family of nonempty subsets of {1,...,n} that contains
/// every singleton.
class Complex {
public:
    int universe() const { return n_; }
    /// Faces ordered by (size, mask).
    const std::vector<NodeSet>& faces() const { return faces_; }
    bool is_face(const NodeSet& a) const;
    int dimension() const;
    std::vector<Edge> edges() const;
    /// Maximal faces ordered by (size, mask).
    std::vector<NodeSet> facets() const;

    bool operator==(const Complex& o) const { return n_ == o.n_ && members_ == o.members_; }

private:
    friend Complex closure(const std::vector<NodeSet>& facets, int n);

    int n_ = 0;
    std::vector<NodeSet> faces_;
    std::vector<bool> members_;  // indexed by mask
};

Complex closure(const std::vector<NodeSet>& facets, int n);
Complex closure(const std::vector<std::vector<int>>& facets, int n);

inline int dimension(const Complex& c) { return c.dimension(); }
inline bool is_face(const Complex& c, const NodeSet& a) { return c.is_face(a); }
inline std::vector<Edge> edges(const Complex& c) { return c.edges(); }

/// The 1-skeleton of a complex of dimension at most one.
class Graph {
public:
    Graph(int n, std::vector<Edge> edges);
    explicit Graph(const Complex& c);

    int universe() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(int i, int j) const;
    Complex as_complex() const;

    static Graph complete(int n);
    static Graph path(int n);
    static Graph cycle(int n);
    static Graph star(int leaves);
    static Graph edgeless(int n);

private:
    int n_;
    std::vector<Edge> edges_;
};

}  // namespace qalg
