#include <doctest.h>

#include <lft/backend.hpp>
#include <lft/error.hpp>

#include "support.hpp"

using namespace lft;
using lft::testing::generator;
using lft::testing::q;

namespace
{

coeff random_element(generator &g, const backend &b)
{
    const auto &ring = b.ring();
    std::vector<rational> v;
    for (int i = 0; i < ring->dim(); ++i) {
        v.push_back(g.chance(0.3) ? rational(0) : g.small_rational(4, 3));
    }
    return coeff(ring, v);
}

} // namespace

TEST_CASE("rational parsing and printing")
{
    CHECK(parse_rational("3/6") == q(1, 2));
    CHECK(parse_rational("-4") == -4);
    CHECK(parse_rational("+7/2") == q(7, 2));
    CHECK(to_string(q(-3, 9)) == "-1/3");
    CHECK(to_string(rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1.5"), error);
    CHECK_THROWS_AS(parse_rational("1/0"), error);
    CHECK_THROWS_AS(parse_rational(""), error);
    CHECK(fractional_part(q(-1, 3)) == q(2, 3));
    CHECK(fractional_part(q(5, 2)) == q(1, 2));
    CHECK(exact_root(q(8, 27), 3) == q(2, 3));
    CHECK(exact_root(q(-8, 27), 3) == q(-2, 3));
    CHECK(exact_root(rational(4), 2) == 2);
    CHECK_FALSE(exact_root(rational(2), 2).has_value());
    CHECK_FALSE(exact_root(rational(-4), 2).has_value());
}

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_polynomial(1) == std::vector<integer>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<integer>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<integer>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<integer>{1, 0, -1, 0, 1});
}

TEST_CASE("ring axioms on random triples")
{
    generator g(11);
    const backend rings[] = {backend::parse("cyclotomic:5"), backend::parse("ext:3,2,2"), backend::parse("ext:4,3,-5")};
    for (const backend &b : rings) {
        for (int i = 0; i < 100; ++i) {
            const coeff x = random_element(g, b), y = random_element(g, b), z = random_element(g, b);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x * y == y * x);
            CHECK(x + (-x) == coeff());
        }
    }
}

TEST_CASE("radical and root of unity")
{
    const backend b = backend::parse("ext:6,3,7/2");
    const coeff x = b.radical();
    CHECK(x.pow(3) == coeff(q(7, 2)));
    CHECK(x.inverse() == x.pow(2) * coeff(q(2, 7)));
    const coeff z = b.zeta();
    CHECK(z.pow(6) == coeff(1));
    CHECK(z.pow(3) == coeff(-1));
    CHECK(z.pow(2) != coeff(1));
    CHECK(z.pow(-1) * z == coeff(1));
}

TEST_CASE("zero divisors are reported")
{
    // x^2 - 1 splits, so x - 1 has no inverse.
    const backend b = backend::parse("ext:1,2,1");
    const coeff d = b.radical() - coeff(1);
    CHECK_FALSE(d.try_inverse().has_value());
    CHECK_THROWS_AS(d.inverse(), error);
    CHECK_THROWS_AS(coeff().inverse(), error);
}

TEST_CASE("element parsing and printing")
{
    const backend b = backend::parse("ext:3,2,5");
    const coeff e = b.parse_element("3/2*z^2*x - x + 1");
    CHECK(b.parse_element(e.to_string()) == e);
    CHECK(b.parse_element("z^3") == coeff(1));
    CHECK(b.parse_element("x^2") == coeff(5));
    CHECK(b.parse_element("(z + 1)*(z - 1)") == b.zeta().pow(2) - coeff(1));
    CHECK(b.parse_element("-1/3") == coeff(q(-1, 3)));
    CHECK_THROWS_AS(b.parse_element("y"), error);
    CHECK_THROWS_AS(backend::rational_field().parse_element("z"), error);
    CHECK(coeff(q(-2, 3)).to_string() == "-2/3");
}

TEST_CASE("backend specs")
{
    CHECK(backend::parse("rational").is_rational());
    CHECK(backend::parse("cyclotomic:4").spec() == "cyclotomic:4");
    CHECK(backend::parse("ext:4,2,3").spec() == "ext:4,2,3");
    CHECK(backend::parse("ext:5,1,1").same_as(backend::parse("cyclotomic:5")));
    CHECK_THROWS_AS(backend::parse("ext:4,2,0"), error);
    CHECK_THROWS_AS(backend::parse("complex"), error);
    CHECK_THROWS_AS(backend::parse("cyclotomic:0"), error);
}

TEST_CASE("roots in backends")
{
    const backend rat = backend::rational_field();
    CHECK(rat.nth_root(coeff(q(27, 8)), 3) == coeff(q(3, 2)));
    CHECK(rat.nth_root(coeff(4), 2) == coeff(2));
    CHECK_FALSE(rat.nth_root(coeff(2), 2).has_value());
    CHECK(rat.primitive_root_of_unity(2) == coeff(-1));
    CHECK_FALSE(rat.primitive_root_of_unity(3).has_value());
    CHECK(rat.root_of_minus_one(3) == coeff(-1));
    CHECK_FALSE(rat.root_of_minus_one(2).has_value());

    const backend cyc = backend::parse("cyclotomic:4");
    const auto i = cyc.nth_root(coeff(-1), 2);
    REQUIRE(i.has_value());
    CHECK(i->pow(2) == coeff(-1));
    const auto m = cyc.root_of_minus_one(2);
    REQUIRE(m.has_value());
    CHECK(m->pow(2) == coeff(-1));

    const backend odd = backend::parse("cyclotomic:3");
    const auto sixth = odd.primitive_root_of_unity(6);
    REQUIRE(sixth.has_value());
    CHECK(sixth->pow(6) == coeff(1));
    CHECK(sixth->pow(3) == coeff(-1));

    const backend rad = backend::parse("ext:1,2,2");
    const auto root = rad.nth_root(coeff(8), 2);
    REQUIRE(root.has_value());
    CHECK(root->pow(2) == coeff(8));
}
