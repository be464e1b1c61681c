#include "qalg/verifier.hpp"

#include <doctest.h>

using namespace qalg;

namespace {

Polynomial U(int n, std::initializer_list<int> s) { return Polynomial::u(NodeSet(n, s)); }

}  // namespace

TEST_CASE("basis lemma")
{
    const auto e1 = check_basis_lemma(1);
    CHECK(e1.pass);
    CHECK(e1.witness["z_form_dims"][1] == 1);
    CHECK(u_in_z(NodeSet(1, {1}), 1) == Polynomial::z(NodeSet(1), 1));

    const auto e2 = check_basis_lemma(2);
    CHECK(e2.pass);
    CHECK(e2.witness["z_form_dims"][1] == 3);

    const auto e4 = check_basis_lemma(4);
    CHECK(e4.pass);
    CHECK(e4.witness["z_form_dims"][1] == 15);
    // 4 * 2^3 z-symbols, 15 surviving directions.
    CHECK(e4.witness["additive_rank"] == 32 - 15);
}

TEST_CASE("eq3 well-definedness")
{
    const int n = 2;
    const NodeSet a(n, {1, 2});
    const Polynomial diff = u_in_z(a, 1) - u_in_z(a, 2);
    CHECK(diff == (Polynomial::z(NodeSet(n, {2}), 1) - Polynomial::z(NodeSet(n), 1)) -
                      (Polynomial::z(NodeSet(n, {1}), 2) - Polynomial::z(NodeSet(n), 2)));
    CHECK(diff == -rel_additive(NodeSet(n), 1, 2));

    const auto e1 = check_eq3_welldefined(1);
    CHECK(e1.pass);
    CHECK(e1.witness["instances"] == 0);

    const auto e4 = check_eq3_welldefined(4);
    CHECK(e4.pass);
    // pairs {i,i'} inside every A with |A| >= 2: 6*1 + 4*3 + 1*6
    CHECK(e4.witness["instances"] == 24);
}

TEST_CASE("corollary and identity 11")
{
    const int n = 2;
    const Polynomial image = substitute(rel_multiplicative(NodeSet(n), 1, 2), z_to_u_map(n));
    CHECK(image == U(n, {2}) * U(n, {1}) + U(n, {1, 2}) * U(n, {1}) - U(n, {1}) * U(n, {2}) -
                       U(n, {1, 2}) * U(n, {2}));
    CHECK(check_corollary(2).pass);
    const auto e4 = check_corollary(4);
    CHECK(e4.pass);
    CHECK(e4.witness["failures"].empty());
    CHECK(check_identity_11(4).pass);
}

TEST_CASE("proposition: commutative case and disjoint edges")
{
    const auto e = check_proposition(closure(std::vector<NodeSet>{}, 3));
    CHECK(e.pass);
    CHECK(e.witness["readings"]["non_edge"]["pairs"] == 6);

    const auto d = check_proposition(closure(std::vector<std::vector<int>>{{1, 2}, {3, 4}}, 4));
    CHECK(d.pass);
    const TruncatedIdealBasis b(qF_presentation(closure(std::vector<std::vector<int>>{{1, 2}, {3, 4}}, 4)), 2);
    CHECK(b.contains(commutator(U(4, {1, 2}), U(4, {3, 4}))));
}

TEST_CASE("proposition on the path reports the engine's verdict")
{
    const Complex path = Graph::path(3).as_complex();
    const auto ij = qualifying_indices(path, NodeSet(3, {1, 2}), NodeSet(3, {3}), PairReading::NonEdge);
    REQUIRE(ij);
    CHECK(*ij == std::pair{1, 3});

    // In Q(path) the triple relation at (2,3,1) reads [u12,u3] = u23 u12,
    // and u23 u12 is a normal word, so the commutator does not vanish.
    const TruncatedIdealBasis b(qF_presentation(path), 2);
    const Polynomial comm = commutator(U(3, {1, 2}), U(3, {3}));
    CHECK(b.contains(comm - U(3, {2, 3}) * U(3, {1, 2})));
    CHECK_FALSE(b.contains(U(3, {2, 3}) * U(3, {1, 2})));
    CHECK_FALSE(b.contains(comm));

    const auto e = check_proposition(path);
    CHECK_FALSE(e.pass);
    CHECK(e.witness["readings_agree"] == true);
    CHECK(e.witness["readings"]["non_edge"]["failing_pairs"] == 6);
    CHECK(e.witness["readings"]["proof_sound"]["pass"] == true);
    CHECK_FALSE(qualifying_indices(path, NodeSet(3, {1, 2}), NodeSet(3, {3}), PairReading::ProofSound));
}

TEST_CASE("proposition with a higher degree bound")
{
    const auto e = check_proposition(closure(std::vector<NodeSet>{}, 3), 3);
    CHECK(e.pass);
    CHECK(e.witness["readings"]["non_edge"]["stability_failures"] == 0);
}

TEST_CASE("theorem")
{
    const auto k2 = check_theorem(Graph::complete(2));
    CHECK(k2.pass);
    CHECK(k2.witness["relations"] == 1);

    const auto k3 = check_theorem(Graph::complete(3));
    CHECK(k3.pass);
    const TruncatedIdealBasis b(qF_presentation(Graph::complete(3).as_complex()), 2);
    CHECK(b.contains(commutator(U(3, {1, 2}), U(3, {2, 3})) + commutator(U(3, {1, 2}), U(3, {3})) +
                     commutator(U(3, {1}), U(3, {2, 3})) - U(3, {1, 3}) * (U(3, {1, 2}) - U(3, {2, 3}))));

    const auto k4 = check_theorem(Graph::complete(4));
    CHECK(k4.pass);
    const TruncatedIdealBasis b4(qF_presentation(Graph::complete(4).as_complex()), 2);
    CHECK(b4.contains(commutator(U(4, {1, 2}), U(4, {3, 4}))));
}

TEST_CASE("presentation equivalence")
{
    const auto e = check_presentation_equivalence(Graph::edgeless(3), 2);
    CHECK(e.pass);
    CHECK(e.witness["qF"] == Json::array({1, 3, 6}));
    const auto k2 = check_presentation_equivalence(Graph::complete(2), 2);
    CHECK(k2.pass);
    CHECK(k2.witness["graph"] == Json::array({1, 3, 8}));
    CHECK(check_presentation_equivalence(Graph::path(3), 3).pass);
}

TEST_CASE("commutative case")
{
    CHECK(check_commutative_case(3, 2).witness["dims"] == Json::array({1, 3, 6}));
    CHECK(check_commutative_case(2, 3).witness["dims"] == Json::array({1, 2, 3, 4}));
    const auto one = check_commutative_case(1, 3);
    CHECK(one.pass);
    CHECK(one.witness["dims"] == Json::array({1, 1, 1, 1}));
    CHECK(multiset_count(3, 3) == 10);
    CHECK(multiset_count(4, 3) == 20);
}

TEST_CASE("run_all")
{
    const auto all = run_all(RunConfig{});
    CHECK(all.passed());
    CHECK(all.entries.size() == known_checks().size());
    for (std::size_t k = 1; k < all.entries.size(); ++k)
        CHECK(all.entries[k - 1].check <= all.entries[k].check);

    RunConfig one;
    one.checks = {"corollary"};
    CHECK(run_all(one).entries.size() == 1);

    RunConfig five;
    five.n = 5;
    five.checks = {"basis_lemma"};
    const auto r5 = run_all(five);
    REQUIRE(r5.entries.size() == 1);
    CHECK(r5.passed());
    CHECK(r5.entries[0].witness["z_form_dims"][1] == 31);

    RunConfig bad;
    bad.checks = {"no_such_check"};
    CHECK_THROWS_AS(run_all(bad), InputError);

    RunConfig simplex;
    simplex.complex = closure(std::vector<std::vector<int>>{{1, 2, 3}}, 3);
    simplex.checks = {"theorem"};
    CHECK_FALSE(run_all(simplex).passed());
}

TEST_CASE("report serialization")
{
    RunConfig cfg;
    cfg.checks = {"commutative_case", "basis_lemma"};
    const auto report = run_all(cfg);
    const Json j = report.to_json(false);
    CHECK(j["schema"] == 1);
    CHECK(j["pass"] == true);
    REQUIRE(j["entries"].size() == 2);
    CHECK(j["entries"][0]["check"] == "basis_lemma");
    for (const auto& e : j["entries"]) {
        CHECK(e.contains("params"));
        CHECK(e.contains("witness"));
        CHECK(e["millis"] == 0.0);
    }
    CHECK(j.dump() == run_all(cfg).to_json(false).dump());
    CHECK(Json::parse(j.dump()) == j);
    CHECK(report.to_text(false).find("all 2/2 checks passed") != std::string::npos);
}
