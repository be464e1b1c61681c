#include "qalg/presentations.hpp"

#include <algorithm>
#include <set>

namespace qalg {

namespace {

void require_vertex(int n, int i)
{
    if (i < 1 || i > n)
        throw InputError("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

void require_pair(const NodeSet& a, int i, int j)
{
    require_vertex(a.universe(), i);
    require_vertex(a.universe(), j);
    if (i == j)
        throw InputError("indices must differ (i=j=" + std::to_string(i) + ")");
    if (a.contains(i) || a.contains(j))
        throw InputError("indices " + std::to_string(i) + "," + std::to_string(j) + " must lie outside A=" + a.str());
}

NodeSet single(int n, int i) { return NodeSet(n, {i}); }

Polynomial u_of(const NodeSet& s) { return Polynomial::u(s); }

/// u({a,b}) with the convention that it is a plain symbol (a != b).
Polynomial u2(int n, int a, int b) { return Polynomial::u(NodeSet(n, {a, b})); }

Polynomial u1(int n, int a) { return Polynomial::u(NodeSet(n, {a})); }

}  // namespace

Presentation::Presentation(std::string label, int n, std::vector<Generator> alphabet,
                           std::vector<Polynomial> relations)
    : label_(std::move(label)), n_(n), alphabet_(std::move(alphabet)), relations_(std::move(relations))
{
    check_universe(n);
    std::set<Generator> known(alphabet_.begin(), alphabet_.end());
    if (known.size() != alphabet_.size())
        throw InputError("duplicate symbol in alphabet of " + label_);
    for (const auto& g : alphabet_)
        if (g.max_vertex() > n)
            throw InputError("symbol " + g.str() + " exceeds n=" + std::to_string(n));
    for (const auto& r : relations_) {
        if (!r.is_homogeneous())
            throw InputError("inhomogeneous relation in " + label_ + ": " + r.str());
        if (r.universe() != 0 && r.universe() != n)
            throw InputError("relation over n=" + std::to_string(r.universe()) + " in presentation over n=" +
                             std::to_string(n));
        for (const auto& g : r.symbols())
            if (!known.count(g))
                throw InputError("relation symbol " + g.str() + " not in alphabet of " + label_);
    }
}

Presentation Presentation::with_alphabet(std::vector<Generator> alphabet) const
{
    std::vector<Generator> a = alphabet, b = alphabet_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
        throw InputError("reordered alphabet is not a permutation of the original");
    return Presentation(label_, n_, std::move(alphabet), relations_);
}

Polynomial rel_additive(const NodeSet& a, int i, int j)
{
    require_pair(a, i, j);
    return Polynomial::z(a.with(i), j) + Polynomial::z(a, i) - Polynomial::z(a.with(j), i) - Polynomial::z(a, j);
}

Polynomial rel_multiplicative(const NodeSet& a, int i, int j)
{
    require_pair(a, i, j);
    return Polynomial::z(a.with(i), j) * Polynomial::z(a, i) - Polynomial::z(a.with(j), i) * Polynomial::z(a, j);
}

Polynomial z_in_u(const NodeSet& a, int i)
{
    require_vertex(a.universe(), i);
    if (a.contains(i))
        throw InputError("z(" + a.str() + "," + std::to_string(i) + ") requires i not in A");
    Polynomial p;
    for (const auto& d : subsets(a))
        p += u_of(d.with(i));
    return p;
}

Polynomial u_in_z(const NodeSet& a, int i)
{
    if (!a.contains(i))
        throw InputError("u_in_z requires i=" + std::to_string(i) + " in A=" + a.str());
    const NodeSet rest = a.without(i);
    Polynomial p;
    for (const auto& d : subsets(rest)) {
        const int exponent = a.size() - d.size() - 1;
        const Rational sign = (exponent % 2 == 0) ? 1 : -1;
        p += sign * Polynomial::z(d, i);
    }
    return p;
}

SubstitutionMap z_to_u_map(int n)
{
    SubstitutionMap m;
    for (const auto& g : z_alphabet(n))
        m.emplace(g, z_in_u(NodeSet::from_mask(n, g.set_mask()), g.index()));
    return m;
}

SubstitutionMap u_to_z_map(int n)
{
    SubstitutionMap m;
    for (const auto& g : u_alphabet(n)) {
        const NodeSet a = NodeSet::from_mask(n, g.set_mask());
        m.emplace(g, u_in_z(a, a.min_element()));
    }
    return m;
}

Polynomial rel_4(const NodeSet& a, int i, int j)
{
    require_pair(a, i, j);
    const auto subs = subsets(a);
    Polynomial sum_j, sum_ij, sum_i;
    for (const auto& c : subs) {
        sum_i += u_of(c.with(i));
        sum_j += u_of(c.with(j));
        sum_ij += u_of(c.with(i).with(j));
    }
    // Both double sums factor as products of single sums over C and D.
    return (sum_j + sum_ij) * sum_i - (sum_i + sum_ij) * sum_j;
}

Polynomial rel_5(const NodeSet& a, int i, int j)
{
    require_pair(a, i, j);
    const auto subs = subsets(a);
    Polynomial lhs, sum_ij, diff;
    for (const auto& c : subs)
        for (const auto& d : subs)
            lhs += commutator(u_of(c.with(i)), u_of(d.with(j)));
    for (const auto& e : subs)
        sum_ij += u_of(e.with(i).with(j));
    for (const auto& f : subs)
        diff += u_of(f.with(i)) - u_of(f.with(j));
    return lhs - sum_ij * diff;
}

Polynomial rel_9(const NodeSet& ap, const NodeSet& bp, int i, int j)
{
    const int n = ap.universe();
    if (bp.universe() != n)
        throw InputError("A' and B' over different universes");
    require_vertex(n, i);
    require_vertex(n, j);
    if (i == j)
        throw InputError("indices must differ (i=j=" + std::to_string(i) + ")");
    if (ap.contains(i))
        throw InputError("i=" + std::to_string(i) + " must lie outside A'=" + ap.str());
    if (bp.contains(j))
        throw InputError("j=" + std::to_string(j) + " must lie outside B'=" + bp.str());
    Polynomial p;
    for (const auto& c : subsets(ap))
        for (const auto& d : subsets(bp))
            p += commutator(u_of(c.with(i)), u_of(d.with(j)));
    return p;
}

Polynomial rel_10(const NodeSet& a, int i, int j)
{
    require_pair(a, i, j);
    const int n = a.universe();
    const auto ks = a.elements();
    const Polynomial ui = u1(n, i), uj = u1(n, j), uij = u2(n, i, j);
    Polynomial r;
    for (int k : ks)
        for (int l : ks)
            r += commutator(u2(n, i, k), u2(n, j, l));
    for (int k : ks) {
        r += commutator(u2(n, i, k), uj);
        r += commutator(ui, u2(n, j, k));
    }
    r += commutator(ui, uj);
    for (int k : ks)
        r -= uij * (u2(n, i, k) - u2(n, j, k));
    r -= uij * (ui - uj);
    return r;
}

Polynomial rel_12(int n, int i, int j, int k)
{
    require_vertex(n, i);
    require_vertex(n, j);
    require_vertex(n, k);
    if (i == j || j == k || i == k)
        throw InputError("indices must be distinct");
    const Polynomial uik = u2(n, i, k), ujk = u2(n, j, k);
    return commutator(uik, ujk) + commutator(uik, u1(n, j)) + commutator(u1(n, i), ujk) -
           u2(n, i, j) * (uik - ujk);
}

Polynomial identity_11_residual(const NodeSet& a, int i, int j, int k)
{
    require_pair(a, i, j);
    if (!a.contains(k))
        throw InputError("k=" + std::to_string(k) + " must lie in A=" + a.str());
    const int n = a.universe();
    const NodeSet rest = a.without(k);
    const Polynomial uik = u2(n, i, k), ujk = u2(n, j, k);
    Polynomial p = rel_10(a, i, j) - rel_10(rest, i, j) - commutator(uik, ujk);
    for (int l : rest.elements()) {
        p -= commutator(u2(n, i, l), ujk);
        p -= commutator(uik, u2(n, j, l));
    }
    p -= commutator(uik, u1(n, j));
    p -= commutator(u1(n, i), ujk);
    p += u2(n, i, j) * (uik - ujk);
    return p;
}

Polynomial truncate_large_sets(const Polynomial& p, int min_size)
{
    SubstitutionMap zero;
    for (const auto& g : p.symbols())
        if (g.kind() == Generator::Kind::U && g.set_size() >= min_size)
            zero.emplace(g, Polynomial());
    return substitute_partial(p, zero);
}

Polynomial restrict_to_graph(const Polynomial& p, const Graph& g)
{
    SubstitutionMap zero;
    for (const auto& s : p.symbols()) {
        if (s.kind() != Generator::Kind::U)
            continue;
        if (s.set_size() >= 3) {
            zero.emplace(s, Polynomial());
        } else if (s.set_size() == 2) {
            const auto e = NodeSet::from_mask(g.universe(), s.set_mask()).elements();
            if (!g.has_edge(e[0], e[1]))
                zero.emplace(s, Polynomial());
        }
    }
    return substitute_partial(p, zero);
}

std::vector<TheoremRelation> theorem_relation_instances(const Graph& g)
{
    const int n = g.universe();
    auto edge = [&](int a, int b) { return g.has_edge(a, b) ? u2(n, a, b) : Polynomial(); };
    std::vector<TheoremRelation> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Polynomial p = commutator(u1(n, i), u1(n, j)) - edge(i, j) * (u1(n, i) - u1(n, j));
            if (!p.is_zero())
                out.push_back({1, {i, j}, std::move(p)});
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k)
                    continue;
                const Polynomial uik = edge(i, k), ujk = edge(j, k);
                Polynomial p = commutator(uik, ujk) + commutator(uik, u1(n, j)) + commutator(u1(n, i), ujk) -
                               edge(i, j) * (uik - ujk);
                if (!p.is_zero())
                    out.push_back({2, {i, j, k}, std::move(p)});
            }
    const auto& es = g.edges();
    for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = a + 1; b < es.size(); ++b) {
            const auto [i, j] = es[a];
            const auto [k, l] = es[b];
            if (i == k || i == l || j == k || j == l)
                continue;
            Polynomial p = commutator(u2(n, i, j), u2(n, k, l));
            out.push_back({3, {i, j, k, l}, std::move(p)});
        }
    return out;
}

std::vector<Polynomial> theorem_relations(const Graph& g)
{
    std::vector<Polynomial> out;
    for (auto& r : theorem_relation_instances(g))
        out.push_back(std::move(r.poly));
    return out;
}

std::vector<Generator> z_alphabet(int n)
{
    check_universe(n);
    std::vector<Generator> out;
    const NodeSet::Mask full = NodeSet::full_mask(n);
    for (NodeSet::Mask m = 0; m <= full; ++m)
        for (int i = 1; i <= n; ++i)
            if (!((m >> (i - 1)) & 1u))
                out.push_back(Generator::z(NodeSet::from_mask(n, m), i));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Generator> u_alphabet(int n)
{
    check_universe(n);
    std::vector<Generator> out;
    const NodeSet::Mask full = NodeSet::full_mask(n);
    for (NodeSet::Mask m = 1; m <= full; ++m)
        out.push_back(Generator::u(NodeSet::from_mask(n, m)));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

/// Every (A, i, j) with i != j and i, j outside A, A ascending by mask.
template <class F>
void for_each_triple(int n, F&& f)
{
    const NodeSet::Mask full = NodeSet::full_mask(n);
    for (NodeSet::Mask m = 0; m <= full; ++m) {
        const NodeSet a = NodeSet::from_mask(n, m);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j && !a.contains(i) && !a.contains(j))
                    f(a, i, j);
    }
}

}  // namespace

Presentation qn_presentation(int n, GeneratorForm form)
{
    check_universe(n);
    std::vector<Polynomial> rels;
    if (form == GeneratorForm::Z) {
        for_each_triple(n, [&](const NodeSet& a, int i, int j) { rels.push_back(rel_additive(a, i, j)); });
        for_each_triple(n, [&](const NodeSet& a, int i, int j) { rels.push_back(rel_multiplicative(a, i, j)); });
        return Presentation("Q_" + std::to_string(n) + " (z)", n, z_alphabet(n), std::move(rels));
    }
    for_each_triple(n, [&](const NodeSet& a, int i, int j) { rels.push_back(rel_4(a, i, j)); });
    return Presentation("Q_" + std::to_string(n) + " (u)", n, u_alphabet(n), std::move(rels));
}

namespace {

std::string describe(const Complex& c)
{
    std::string s = "[";
    bool first = true;
    for (const auto& f : c.facets()) {
        if (!first)
            s += ',';
        s += f.str();
        first = false;
    }
    return s + "]";
}

}  // namespace

Presentation qF_presentation(const Complex& c)
{
    const int n = c.universe();
    std::vector<Polynomial> rels;
    for_each_triple(n, [&](const NodeSet& a, int i, int j) { rels.push_back(rel_4(a, i, j)); });
    for (const auto& g : u_alphabet(n)) {
        const NodeSet a = NodeSet::from_mask(n, g.set_mask());
        if (!c.is_face(a))
            rels.push_back(Polynomial(g, n));
    }
    return Presentation("Q(F) n=" + std::to_string(n) + " F=" + describe(c), n, u_alphabet(n), std::move(rels));
}

Presentation graph_presentation(const Graph& g)
{
    const int n = g.universe();
    std::vector<Generator> alphabet;
    for (int i = 1; i <= n; ++i)
        alphabet.push_back(Generator::u(NodeSet(n, {i})));
    for (auto [i, j] : g.edges())
        alphabet.push_back(Generator::u(NodeSet(n, {i, j})));
    std::sort(alphabet.begin(), alphabet.end());
    return Presentation("graph n=" + std::to_string(n) + " E=" + describe(g.as_complex()), n, std::move(alphabet),
                        theorem_relations(g));
}

}  // namespace qalg
