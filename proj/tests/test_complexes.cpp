#include "qalg/complexes.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace qalg;

namespace {

std::vector<std::string> face_strings(const Complex& c)
{
    std::vector<std::string> out;
    for (const auto& f : c.faces())
        out.push_back(f.str());
    return out;
}

std::vector<NodeSet> random_facets(std::mt19937& rng, int n)
{
    std::uniform_int_distribution<int> count(0, 4);
    std::uniform_int_distribution<NodeSet::Mask> mask(1, NodeSet::full_mask(n));
    std::vector<NodeSet> out;
    for (int k = count(rng); k > 0; --k)
        out.push_back(NodeSet::from_mask(n, mask(rng)));
    return out;
}

}  // namespace

TEST_CASE("node set basics")
{
    const NodeSet a(5, {1, 3});
    CHECK(a.str() == "{1,3}");
    CHECK(a.size() == 2);
    CHECK(a.contains(3));
    CHECK_FALSE(a.contains(2));
    CHECK((a | NodeSet(5, {2})).str() == "{1,2,3}");
    CHECK((a - NodeSet(5, {1})).str() == "{3}");
    CHECK((a & NodeSet(5, {3, 4})).str() == "{3}");
    CHECK(NodeSet(5).str() == "{}");
    CHECK(a.subset_of(NodeSet::full(5)));
    CHECK(subsets(a).size() == 4);
    CHECK(subsets(NodeSet(5)).size() == 1);

    CHECK_THROWS_AS(NodeSet(3, {4}), InputError);
    CHECK_THROWS_AS(NodeSet(0), InputError);
    CHECK_THROWS_AS(NodeSet(17), InputError);
    CHECK_THROWS_AS(NodeSet(3) | NodeSet(4), InputError);
}

TEST_CASE("closure examples")
{
    CHECK(face_strings(closure(std::vector<std::vector<int>>{{1, 2, 3}}, 3)) ==
          std::vector<std::string>{"{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}", "{1,2,3}"});
    CHECK(face_strings(closure(std::vector<std::vector<int>>{}, 3)) ==
          std::vector<std::string>{"{1}", "{2}", "{3}"});
    CHECK(face_strings(closure(std::vector<std::vector<int>>{{1, 2}, {2, 3}}, 4)) ==
          std::vector<std::string>{"{1}", "{2}", "{3}", "{4}", "{1,2}", "{2,3}"});

    CHECK_THROWS_AS(closure(std::vector<std::vector<int>>{{1, 4}}, 3), InputError);
    CHECK_THROWS_AS(closure(std::vector<std::vector<int>>{}, 0), InputError);
    CHECK_THROWS_AS(closure(std::vector<std::vector<int>>{}, 17), InputError);
    CHECK_THROWS_AS(closure(std::vector<std::vector<int>>{{}}, 3), InputError);
}

TEST_CASE("dimension")
{
    CHECK(closure(std::vector<std::vector<int>>{}, 3).dimension() == 0);
    CHECK(closure(std::vector<std::vector<int>>{{1, 2}, {2, 3}}, 3).dimension() == 1);
    CHECK(closure(std::vector<std::vector<int>>{{1, 2, 3}}, 3).dimension() == 2);
}

TEST_CASE("is_face")
{
    CHECK(closure(std::vector<std::vector<int>>{{1, 2, 3}}, 3).is_face(NodeSet(3, {1, 2})));
    CHECK_FALSE(closure(std::vector<std::vector<int>>{{1, 2}, {2, 3}}, 3).is_face(NodeSet(3, {1, 3})));
    CHECK(closure(std::vector<std::vector<int>>{}, 2).is_face(NodeSet(2, {2})));
    CHECK_THROWS_AS(closure(std::vector<std::vector<int>>{}, 2).is_face(NodeSet(2)), InputError);
}

TEST_CASE("edges")
{
    CHECK(closure(std::vector<std::vector<int>>{{1, 2}, {2, 3}}, 3).edges() == std::vector<Edge>{{1, 2}, {2, 3}});
    CHECK(closure(std::vector<std::vector<int>>{}, 3).edges().empty());
    CHECK(closure(std::vector<std::vector<int>>{{1, 2, 3}}, 3).edges() == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("graph view")
{
    CHECK(Graph::complete(4).edges().size() == 6);
    CHECK(Graph::cycle(4).edges() == std::vector<Edge>{{1, 2}, {1, 4}, {2, 3}, {3, 4}});
    CHECK(Graph::star(3).universe() == 4);
    CHECK(Graph::path(3).as_complex() == closure(std::vector<std::vector<int>>{{1, 2}, {2, 3}}, 3));
    CHECK_THROWS_AS(Graph(closure(std::vector<std::vector<int>>{{1, 2, 3}}, 3)), InputError);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), InputError);
    CHECK_THROWS_AS(Graph(3, {{1, 4}}), InputError);
}

TEST_CASE("closure properties on random facet lists")
{
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 8;
        const auto facets = random_facets(rng, n);
        const Complex c = closure(facets, n);

        // downward closed, exhaustively
        for (const auto& f : c.faces())
            for (const auto& b : subsets(f))
                if (!b.empty())
                    REQUIRE(c.is_face(b));
        for (int i = 1; i <= n; ++i)
            REQUIRE(c.is_face(NodeSet(n, {i})));

        int expected_dim = 0;
        for (const auto& f : facets)
            expected_dim = std::max(expected_dim, f.size() - 1);
        CHECK(c.dimension() == expected_dim);

        std::vector<Edge> two_faces;
        for (const auto& f : c.faces())
            if (f.size() == 2) {
                const auto e = f.elements();
                two_faces.emplace_back(e[0], e[1]);
            }
        std::sort(two_faces.begin(), two_faces.end());
        CHECK(c.edges() == two_faces);

        CHECK(closure(c.faces(), n) == c);
        CHECK(closure(c.facets(), n) == c);
    }
}
