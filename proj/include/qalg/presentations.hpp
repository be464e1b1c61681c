#pragma once

#include "qalg/complexes.hpp"
#include "qalg/free_algebra.hpp"

#include <string>
#include <vector>

namespace qalg {

/// Generators plus homogeneous relations (each stored as LHS - RHS).
class Presentation {
public:
    Presentation(std::string label, int n, std::vector<Generator> alphabet, std::vector<Polynomial> relations);

    const std::string& label() const { return label_; }
    int universe() const { return n_; }
    const std::vector<Generator>& alphabet() const { return alphabet_; }
    const std::vector<Polynomial>& relations() const { return relations_; }

    /// Same relations over a permuted alphabet; the alphabet order drives the
    /// monomial order used by the quotient engine.
    Presentation with_alphabet(std::vector<Generator> alphabet) const;

private:
    std::string label_;
    int n_;
    std::vector<Generator> alphabet_;
    std::vector<Polynomial> relations_;
};

// Relation families. Every builder validates its indices and throws
// InputError on collisions (i == j, i or j in A, vertices out of range).

/// z(A+i,j) + z(A,i) - z(A+j,i) - z(A,j)
Polynomial rel_additive(const NodeSet& a, int i, int j);
/// z(A+i,j) z(A,i) - z(A+j,i) z(A,j)
Polynomial rel_multiplicative(const NodeSet& a, int i, int j);

/// z(A,i) = sum over D in A of u(D+i)
Polynomial z_in_u(const NodeSet& a, int i);
/// The Mobius inverse of z_in_u: u(A) = sum over D in A-i of (-1)^(|A|-|D|-1) z(D,i).
Polynomial u_in_z(const NodeSet& a, int i);

/// Images z(A,i) -> z_in_u(A,i) for every z symbol over n nodes.
SubstitutionMap z_to_u_map(int n);
/// Images u(A) -> u_in_z(A, min A) for every u symbol over n nodes.
SubstitutionMap u_to_z_map(int n);

/// sum_{C,D in A} (u(C+j) + u(C+i+j)) u(D+i) - (u(D+i) + u(D+i+j)) u(C+j)
Polynomial rel_4(const NodeSet& a, int i, int j);
/// sum_{C,D in A} [u(C+i), u(D+j)] - (sum_E u(E+i+j)) sum_F (u(F+i) - u(F+j))
Polynomial rel_5(const NodeSet& a, int i, int j);
/// sum_{C in A', D in B'} [u(C+i), u(D+j)]
Polynomial rel_9(const NodeSet& ap, const NodeSet& bp, int i, int j);
/// R(A,i,j): rel_5 with every u(S), |S| >= 3, set to zero, written out over
/// pairs. The final term carries a minus sign.
Polynomial rel_10(const NodeSet& a, int i, int j);
/// [u(ik),u(jk)] + [u(ik),u(j)] + [u(i),u(jk)] - u(ij)(u(ik) - u(jk))
Polynomial rel_12(int n, int i, int j, int k);
/// R(A,i,j) - R(A-k,i,j) minus the explicit right-hand side of the one-step
/// expansion in k; identically zero when the expansion is right.
Polynomial identity_11_residual(const NodeSet& a, int i, int j, int k);

/// Sends every u(S) with |S| >= min_size to zero, keeps everything else.
Polynomial truncate_large_sets(const Polynomial& p, int min_size);

struct TheoremRelation {
    int family;                // 1, 2, 3 for the pair, triple and quadruple families
    std::vector<int> indices;  // (i,j), (i,j,k) or (i,j,k,l)
    Polynomial poly;
};

/// The three relation families for a graph, with u(ij) = 0 for non-edges
/// applied at build time. Identically zero instances are dropped.
std::vector<TheoremRelation> theorem_relation_instances(const Graph& g);
std::vector<Polynomial> theorem_relations(const Graph& g);

/// Sends u(ij) to zero for every pair that is not an edge of g, and u(S) with
/// |S| >= 3 to zero.
Polynomial restrict_to_graph(const Polynomial& p, const Graph& g);

enum class GeneratorForm { Z, U };

/// All z(A,i) over n nodes in canonical order.
std::vector<Generator> z_alphabet(int n);
/// All u(A), A nonempty, over n nodes in canonical order.
std::vector<Generator> u_alphabet(int n);

Presentation qn_presentation(int n, GeneratorForm form);
Presentation qF_presentation(const Complex& c);
Presentation graph_presentation(const Graph& g);

}  // namespace qalg
