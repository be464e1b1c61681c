#include "qalg/free_algebra.hpp"
#include "qalg/presentations.hpp"

#include <doctest.h>

#include <random>

using namespace qalg;

namespace {

Polynomial U(int n, std::initializer_list<int> s) { return Polynomial::u(NodeSet(n, s)); }
Polynomial Z(int n, std::initializer_list<int> s, int i) { return Polynomial::z(NodeSet(n, s), i); }

/// Random polynomial over u-symbols on 3 nodes and one z-symbol, degree <= 3.
Polynomial random_poly(std::mt19937& rng)
{
    const int n = 3;
    auto alphabet = u_alphabet(n);
    alphabet.push_back(Generator::z(NodeSet(n, {2}), 1));
    std::uniform_int_distribution<std::size_t> letter(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> len(0, 3), terms(0, 4), num(-5, 5), den(1, 4);
    Polynomial p;
    for (int t = terms(rng); t > 0; --t) {
        Monomial m;
        for (int k = len(rng); k > 0; --k)
            m.push_back(alphabet[letter(rng)]);
        Rational c(num(rng), den(rng));
        c.canonicalize();
        p += Polynomial(m, c, n);
    }
    return p;
}

}  // namespace

TEST_CASE("add, mul, scale")
{
    CHECK((U(3, {1}) + scale(-1, U(3, {1}))).is_zero());
    const Polynomial prod = mul(U(3, {1}), U(3, {2}));
    CHECK(prod.size() == 1);
    CHECK(prod.str() == "u({1})*u({2})");
    CHECK(((U(3, {1}) + U(3, {2})) * U(3, {3})) == U(3, {1}) * U(3, {3}) + U(3, {2}) * U(3, {3}));
    CHECK_THROWS_AS(U(3, {1}) + U(4, {1}), InputError);
    CHECK_THROWS_AS(U(3, {1}) * U(4, {1}), InputError);
}

TEST_CASE("commutator")
{
    CHECK(commutator(U(3, {1}), U(3, {1})).is_zero());
    CHECK(commutator(U(3, {1}), U(3, {2})).str() == "u({1})*u({2}) - u({2})*u({1})");
}

TEST_CASE("substitute")
{
    const int n = 2;
    SubstitutionMap m;
    m.emplace(Generator::z(NodeSet(n), 1), U(n, {1}));
    CHECK(substitute(Z(n, {}, 1), m) == U(n, {1}));

    SubstitutionMap m2;
    m2.emplace(Generator::z(NodeSet(n, {2}), 1), U(n, {1}) + U(n, {1, 2}));
    m2.emplace(Generator::z(NodeSet(n), 2), U(n, {2}));
    CHECK(substitute(Z(n, {2}, 1) * Z(n, {}, 2), m2) == U(n, {1}) * U(n, {2}) + U(n, {1, 2}) * U(n, {2}));

    CHECK_THROWS_AS(substitute(Z(n, {1}, 2), m2), std::invalid_argument);
}

TEST_CASE("graded_component")
{
    const Polynomial p = U(2, {1}) + U(2, {1}) * U(2, {2});
    CHECK(graded_component(p, 1) == U(2, {1}));
    CHECK(graded_component(p, 2) == U(2, {1}) * U(2, {2}));
    CHECK(graded_component(p, 0).is_zero());
}

TEST_CASE("enumerate_monomials")
{
    const std::vector<Generator> two = {Generator::u(NodeSet(2, {1})), Generator::u(NodeSet(2, {2}))};
    const auto words = enumerate_monomials(two, 2);
    CHECK(words.size() == 4);
    CHECK(to_string(words[1]) == "u({1})*u({2})");
    CHECK(enumerate_monomials(two, 0) == std::vector<Monomial>{Monomial{}});
    CHECK(enumerate_monomials(u_alphabet(4), 2).size() == 225);
    CHECK_THROWS_AS(enumerate_monomials(u_alphabet(5), 5), std::length_error);  // 31^5 > 1e7
}

TEST_CASE("canonical symbol order")
{
    const int n = 3;
    // Z before U; then size; then sorted elements; then index.
    CHECK(Generator::z(NodeSet(n, {1, 2}), 3) < Generator::u(NodeSet(n, {1})));
    CHECK(Generator::u(NodeSet(n, {3})) < Generator::u(NodeSet(n, {1, 2})));
    CHECK(Generator::u(NodeSet(n, {1, 3})) < Generator::u(NodeSet(n, {2, 3})));
    CHECK(Generator::z(NodeSet(n), 2) < Generator::z(NodeSet(n, {1}), 2));
    CHECK(Generator::z(NodeSet(n, {1}), 2) < Generator::z(NodeSet(n, {1}), 3));
    CHECK(Generator::z(NodeSet(n, {1}), 3) < Generator::z(NodeSet(n, {2}), 1));
    CHECK_THROWS_AS(Generator::z(NodeSet(n, {1}), 1), InputError);
    CHECK_THROWS_AS(Generator::u(NodeSet(n)), InputError);
}

TEST_CASE("serialization format")
{
    const int n = 3;
    CHECK(Polynomial().str() == "0");
    CHECK(Polynomial(Rational(3, 2)).str() == "3/2");
    CHECK(Z(n, {1, 3}, 2).str() == "z({1,3},2)");
    CHECK(Z(n, {}, 2).str() == "z({},2)");
    const Polynomial p = Rational(3, 2) * U(n, {1, 2}) * U(n, {1}) - U(n, {1}) * U(n, {2}) + U(n, {3});
    CHECK(p.str() == "u({3}) - u({1})*u({2}) + 3/2*u({1,2})*u({1})");
    CHECK((Rational(-2) * U(n, {1})).str() == "-2*u({1})");
}

TEST_CASE("parser")
{
    const int n = 3;
    CHECK(parse_polynomial("3/2*u({1,2})*u({1}) - [u({1}),u({2})]", n) ==
          Rational(3, 2) * U(n, {1, 2}) * U(n, {1}) - commutator(U(n, {1}), U(n, {2})));
    CHECK(parse_polynomial("  - ( u({1}) + z({2},1) ) * 2 ", n) == Rational(-2) * (U(n, {1}) + Z(n, {2}, 1)));
    CHECK(parse_polynomial("0", n).is_zero());
    CHECK(parse_polynomial("u({})", n) == Polynomial(Rational(1)));
    CHECK(parse_polynomial("4/6", n) == Polynomial(Rational(2, 3)));
    CHECK_THROWS_AS(parse_polynomial("u({4})", n), ParseError);
    CHECK_THROWS_AS(parse_polynomial("u({1}", n), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1/0", n), ParseError);
    CHECK_THROWS_AS(parse_polynomial("z({1},1)", n), ParseError);
    CHECK_THROWS_AS(parse_polynomial("u({1}) u({2})", n), ParseError);
    CHECK_THROWS_AS(parse_polynomial("", n), ParseError);
}

TEST_CASE("ring axioms and canonical form on random inputs")
{
    std::mt19937 rng(7);
    const Polynomial one = Polynomial::u(NodeSet(3));
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        REQUIRE((p * q) * r == p * (q * r));
        REQUIRE(p * (q + r) == p * q + p * r);
        REQUIRE((p + q) * r == p * r + q * r);
        REQUIRE(p * one == p);
        REQUIRE(one * p == p);
        REQUIRE((p + q) - q == p);
        REQUIRE((commutator(p, q) + commutator(q, p)).is_zero());

        // serialize . parse is the identity, and equal polynomials print equally
        REQUIRE(parse_polynomial(p.str(), 3) == p);
        REQUIRE((p + q).str() == (q + p).str());

        Polynomial sum;
        for (int d = 0; d <= std::max(p.degree(), 0); ++d)
            sum += graded_component(p, d);
        REQUIRE(sum == p);

        for (const auto& [m, c] : p.terms())
            REQUIRE(c != 0);
    }
}

TEST_CASE("substitute is a homomorphism")
{
    std::mt19937 rng(11);
    const int n = 3;
    SubstitutionMap images;
    for (const auto& g : u_alphabet(n))
        images.emplace(g, Polynomial(g, n) + U(n, {1}) * Polynomial(g, n) - Rational(1, 3) * U(n, {2}));
    images.emplace(Generator::z(NodeSet(n, {2}), 1), U(n, {1}) + U(n, {1, 2}));
    for (int trial = 0; trial < 100; ++trial) {
        const Polynomial p = random_poly(rng), q = random_poly(rng);
        REQUIRE(substitute(p * q, images) == substitute(p, images) * substitute(q, images));
        REQUIRE(substitute(p + q, images) == substitute(p, images) + substitute(q, images));
    }
}
