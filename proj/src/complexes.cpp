#include "qalg/complexes.hpp"

#include <algorithm>

namespace qalg {

void check_universe(int n)
{
    if (n < 1 || n > kMaxNodes)
        throw InputError("n=" + std::to_string(n) + " outside 1.." + std::to_string(kMaxNodes));
}

NodeSet::NodeSet(int n, std::initializer_list<int> elems) : NodeSet(n, std::vector<int>(elems)) {}

NodeSet::NodeSet(int n, const std::vector<int>& elems) : n_(n)
{
    check_universe(n);
    for (int e : elems) {
        if (e < 1)
            throw InputError("vertex " + std::to_string(e) + " is not positive");
        if (e > n)
            throw InputError("vertex " + std::to_string(e) + " exceeds n=" + std::to_string(n));
        mask_ |= Mask{1} << (e - 1);
    }
}

NodeSet NodeSet::from_mask(int n, Mask mask)
{
    NodeSet s(n);
    if (mask & ~full_mask(n))
        throw InputError("mask has bits outside 1.." + std::to_string(n));
    s.mask_ = mask;
    return s;
}

std::vector<int> NodeSet::elements() const
{
    std::vector<int> out;
    for (int i = 1; i <= n_; ++i)
        if (contains(i))
            out.push_back(i);
    return out;
}

int NodeSet::min_element() const
{
    if (mask_ == 0)
        throw std::logic_error("min_element of empty set");
    return __builtin_ctz(mask_) + 1;
}

NodeSet NodeSet::with(int i) const
{
    if (i < 1 || i > n_)
        throw InputError("vertex " + std::to_string(i) + " exceeds n=" + std::to_string(n_));
    return from_mask(n_, mask_ | (Mask{1} << (i - 1)));
}

NodeSet NodeSet::without(int i) const
{
    if (i < 1 || i > n_)
        return *this;
    return from_mask(n_, mask_ & ~(Mask{1} << (i - 1)));
}

void NodeSet::check_same(const NodeSet& o) const
{
    if (n_ != o.n_)
        throw InputError("node sets over different universes (n=" + std::to_string(n_) + " vs n=" +
                         std::to_string(o.n_) + ")");
}

NodeSet NodeSet::operator|(const NodeSet& o) const
{
    check_same(o);
    return from_mask(n_, mask_ | o.mask_);
}

NodeSet NodeSet::operator&(const NodeSet& o) const
{
    check_same(o);
    return from_mask(n_, mask_ & o.mask_);
}

NodeSet NodeSet::operator-(const NodeSet& o) const
{
    check_same(o);
    return from_mask(n_, mask_ & ~o.mask_);
}

std::string NodeSet::str() const
{
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
        if (!first)
            s += ',';
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

std::vector<NodeSet> subsets(const NodeSet& s)
{
    std::vector<NodeSet> out;
    const NodeSet::Mask m = s.mask();
    // Standard submask walk, collected then reversed to increasing order.
    for (NodeSet::Mask sub = m;; sub = (sub - 1) & m) {
        out.push_back(NodeSet::from_mask(s.universe(), sub));
        if (sub == 0)
            break;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

namespace {

bool face_less(const NodeSet& a, const NodeSet& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a.mask() < b.mask();
}

}  // namespace

Complex closure(const std::vector<NodeSet>& facets, int n)
{
    check_universe(n);
    Complex c;
    c.n_ = n;
    c.members_.assign(std::size_t{1} << n, false);
    for (int i = 0; i < n; ++i)
        c.members_[std::size_t{1} << i] = true;
    for (const auto& f : facets) {
        if (f.universe() != n) {
            for (int e : f.elements())
                if (e > n)
                    throw InputError("vertex " + std::to_string(e) + " exceeds n=" + std::to_string(n));
        }
        if (f.empty())
            throw InputError("empty facet");
        const auto m = f.mask();
        for (NodeSet::Mask sub = m; sub != 0; sub = (sub - 1) & m)
            c.members_[sub] = true;
    }
    for (std::size_t m = 1; m < c.members_.size(); ++m)
        if (c.members_[m])
            c.faces_.push_back(NodeSet::from_mask(n, static_cast<NodeSet::Mask>(m)));
    std::sort(c.faces_.begin(), c.faces_.end(), face_less);
    return c;
}

Complex closure(const std::vector<std::vector<int>>& facets, int n)
{
    check_universe(n);
    std::vector<NodeSet> sets;
    sets.reserve(facets.size());
    for (const auto& f : facets) {
        if (f.empty())
            throw InputError("empty facet");
        sets.emplace_back(n, f);
    }
    return closure(sets, n);
}

bool Complex::is_face(const NodeSet& a) const
{
    if (a.empty())
        throw InputError("the empty set is not a face");
    if (a.universe() != n_ && (a.mask() & ~NodeSet::full_mask(n_)))
        return false;
    return members_[a.mask()];
}

int Complex::dimension() const
{
    int d = 0;
    for (const auto& f : faces_)
        d = std::max(d, f.size() - 1);
    return d;
}

std::vector<Edge> Complex::edges() const
{
    std::vector<Edge> out;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (members_[(NodeSet::Mask{1} << (i - 1)) | (NodeSet::Mask{1} << (j - 1))])
                out.emplace_back(i, j);
    return out;
}

std::vector<NodeSet> Complex::facets() const
{
    std::vector<NodeSet> out;
    for (const auto& f : faces_) {
        bool maximal = true;
        for (int i = 1; i <= n_ && maximal; ++i)
            if (!f.contains(i) && members_[f.with(i).mask()])
                maximal = false;
        if (maximal)
            out.push_back(f);
    }
    return out;
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n)
{
    check_universe(n);
    for (auto& [i, j] : edges) {
        if (i == j)
            throw InputError("loop edge at vertex " + std::to_string(i));
        if (i > j)
            std::swap(i, j);
        if (i < 1 || j > n)
            throw InputError("edge (" + std::to_string(i) + "," + std::to_string(j) + ") outside 1.." +
                             std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
}

Graph::Graph(const Complex& c) : n_(c.universe()), edges_(c.edges())
{
    if (c.dimension() > 1)
        throw InputError("complex of dimension " + std::to_string(c.dimension()) + " is not a graph");
}

bool Graph::has_edge(int i, int j) const
{
    if (i > j)
        std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{i, j});
}

Complex Graph::as_complex() const
{
    std::vector<NodeSet> facets;
    for (auto [i, j] : edges_)
        facets.push_back(NodeSet(n_, {i, j}));
    return closure(facets, n_);
}

Graph Graph::complete(int n)
{
    std::vector<Edge> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            e.emplace_back(i, j);
    return Graph(n, e);
}

Graph Graph::path(int n)
{
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph Graph::cycle(int n)
{
    auto g = path(n);
    auto e = g.edges_;
    if (n >= 3)
        e.emplace_back(1, n);
    return Graph(n, e);
}

Graph Graph::star(int leaves)
{
    std::vector<Edge> e;
    for (int i = 2; i <= leaves + 1; ++i)
        e.emplace_back(1, i);
    return Graph(leaves + 1, e);
}

Graph Graph::edgeless(int n) { return Graph(n, {}); }

}  // namespace qalg
