#include <doctest.h>

#include <lft/backend.hpp>
#include <lft/error.hpp>

#include "support.hpp"

using namespace lft;
using lft::testing::generator;
using lft::testing::naive_poly;
using lft::testing::q;

namespace
{

trunc_series poly(long start, std::vector<rational> c, long prec = kExact)
{
    std::vector<coeff> v(c.begin(), c.end());
    return trunc_series::from_coeffs(start, std::move(v), prec);
}

// Coefficients agree wherever both series are known.
bool agree(const trunc_series &a, const trunc_series &b)
{
    const long hi = std::min(a.prec(), b.prec());
    const long lo = std::min(std::min(a.low(), b.low()), hi);
    for (long e = lo; e < hi; ++e) {
        if (a.at(e) != b.at(e)) {
            return false;
        }
    }
    return true;
}

// Exact polynomial with random coefficients on [low, hi).
trunc_series exact_poly(generator &g, long low, long hi)
{
    std::vector<coeff> c;
    c.emplace_back(g.nonzero_rational());
    for (long e = low + 1; e < hi; ++e) {
        c.emplace_back(g.chance(0.25) ? rational(0) : g.small_rational());
    }
    return trunc_series::from_coeffs(low, std::move(c));
}

} // namespace

TEST_CASE("arith examples")
{
    CHECK(poly(0, {1, 1}) + poly(0, {-1, 1}) == poly(1, {2}));
    CHECK(poly(0, {1, 1}) * poly(0, {1, -1}) == poly(0, {1, 0, -1}));
    CHECK(poly(-1, {1, 1}) * poly(1, {1}) == poly(0, {1, 1}));
    CHECK((poly(0, {1, 1}) - poly(0, {1, 1})).is_zero());
}

TEST_CASE("precision rules")
{
    const trunc_series a = poly(0, {1, 2, 3}, 3);
    const trunc_series b = poly(1, {1, 1}, 5);
    CHECK((a + b).prec() == 3);
    CHECK((a * b).prec() == 4);
    CHECK((a * poly(0, {5})).prec() == 3);
    CHECK_THROWS_AS(a.at(3), error);
    CHECK(a.at(-4) == coeff());
    CHECK(trunc_series::zero(4).prec() == 4);
    CHECK(trunc_series::zero(4) != trunc_series::zero(5));
    CHECK_THROWS_AS(arith(a, a.rescaled(2), series_op::add), error);
    CHECK(a.rescaled(2).reduced(2) == a);
    CHECK(exp_add(kExact, 5) == kExact);
    CHECK(exp_mul(kExact, 3) == kExact);
    CHECK(exp_add(3, -5) == -2);
}

TEST_CASE("invert_unit examples")
{
    CHECK(invert_unit(poly(0, {1, 1}, 5)) == poly(0, {1, -1, 1, -1, 1}, 5));
    CHECK(invert_unit(poly(0, {2})) == poly(0, {q(1, 2)}));
    CHECK(invert_unit(poly(1, {1, 1}, 5)) == poly(-1, {1, -1, 1, -1}, 3));
    CHECK_THROWS_AS(invert_unit(poly(0, {1, 1})), error);
    CHECK_THROWS_AS(invert_unit(trunc_series::zero(3)), error);
    const backend b = backend::parse("ext:1,2,1");
    const coeff zd = b.radical() - coeff(1);
    CHECK_THROWS_AS(invert_unit(trunc_series::from_coeffs(0, {zd, coeff(1)}, 3)), error);
}

TEST_CASE("differentiate examples")
{
    CHECK(differentiate(poly(2, {1})) == poly(1, {2}));
    CHECK(differentiate(poly(-1, {1})) == poly(-2, {-1}));
    CHECK(differentiate(poly(0, {5})).is_zero());
    CHECK(differentiate(poly(0, {1, 1}, 4)).prec() == 3);
    // X^(3/2) on the uniformizer X^(1/2) is the integral exponent 3.
    CHECK(differentiate(trunc_series::monomial(coeff(1), 3, kExact, 2))
          == trunc_series::monomial(coeff(q(3, 2)), 1, kExact, 2));
}

TEST_CASE("compose examples")
{
    CHECK(compose(poly(2, {1}), poly(1, {1, 1})) == poly(2, {1, 2, 1}));
    CHECK(compose(poly(-1, {1}), poly(1, {2})) == poly(-1, {q(1, 2)}));
    // 1/(Y(1+Y)) + Y(1+Y) with g known to O(Y^4), so 1/g to O(Y^2).
    const trunc_series r = compose(poly(-1, {1, 0, 1}), poly(1, {1, 1}, 4));
    CHECK(r == poly(-1, {1, -1, 2}, 2));
    CHECK_THROWS_AS(compose(poly(0, {1}), poly(0, {1, 1})), error);
    CHECK(compose(poly(0, {1, 1}, 3), poly(2, {1})).prec() == 6);
}

TEST_CASE("solve_branch examples")
{
    CHECK(solve_branch(poly(0, {1, 1}), 2, coeff(1), 3) == poly(0, {1, q(1, 2), q(1, 8)}, 3));
    CHECK(solve_branch(poly(0, {q(3, 7)}), 1, coeff(q(3, 7)), 4) == poly(0, {q(3, 7)}, 4));
    CHECK(solve_branch(poly(0, {4}), 2, coeff(-2), 5) == poly(0, {-2}, 5));
    CHECK_THROWS_AS(solve_branch(poly(0, {4}), 2, coeff(3), 5), error);
    CHECK_THROWS_AS(solve_branch(poly(0, {4}), 2, coeff(2)), error);
    CHECK(solve_branch(poly(0, {1, 1}, 2), 2, coeff(1), 6).prec() == 2);
}

TEST_CASE("pow_series examples")
{
    CHECK(pow_series(poly(0, {1, 1}), 2) == poly(0, {1, 2, 1}));
    const trunc_series w = poly(0, {1, q(1, 2), q(1, 8)}, 3);
    CHECK(pow_series(w, 1) == w);
    CHECK(pow_series(poly(1, {2}), -1) == poly(-1, {q(1, 2)}));
    CHECK(pow_series(w, 0) == trunc_series::constant(coeff(1)));
    CHECK_THROWS_AS(pow_series(poly(1, {1, 1}), -1), error);
}

TEST_CASE("property: solve_branch residual")
{
    generator g(101);
    for (int i = 0; i < 100; ++i) {
        const long n = g.uniform(1, 5);
        const long prec = g.uniform(1, 10);
        const rational w0 = g.nonzero_rational(3, 3);
        trunc_series u = exact_poly(g, 1, prec + 2) + trunc_series::constant(coeff(pow(w0, n)));
        const trunc_series w = solve_branch(u, n, coeff(w0), prec);
        CHECK(w.prec() == prec);
        CHECK(w.at(0) == coeff(w0));
        const trunc_series lhs = pow_series(w, n);
        const trunc_series rhs = compose(u, w.shifted(1));
        CHECK(agree(lhs, rhs));
        CHECK(std::min(lhs.prec(), rhs.prec()) >= prec);
    }
}

TEST_CASE("property: coefficient locality of solve_branch")
{
    generator g(102);
    for (int i = 0; i < 50; ++i) {
        const long n = g.uniform(1, 4);
        const rational w0 = g.nonzero_rational(3, 2);
        const trunc_series u = exact_poly(g, 1, 9) + trunc_series::constant(coeff(pow(w0, n)));
        const long j = g.uniform(1, 7);
        const trunc_series bumped = u + trunc_series::monomial(coeff(g.nonzero_rational()), j);
        const trunc_series a = solve_branch(u, n, coeff(w0), 9);
        const trunc_series b = solve_branch(bumped, n, coeff(w0), 9);
        for (long k = 0; k < 9; ++k) {
            if (k < j) {
                CHECK(a.at(k) == b.at(k));
            }
        }
        CHECK(a.at(j) != b.at(j));
    }
}

TEST_CASE("property: invert_unit")
{
    generator g(103);
    for (int i = 0; i < 100; ++i) {
        const long low = g.uniform(-3, 3);
        const long prec = low + g.uniform(1, 8);
        const trunc_series full = exact_poly(g, low, prec + 4);
        const trunc_series s = full.truncated(prec);
        const trunc_series inv = invert_unit(s);
        CHECK(inv.low() == -low);
        CHECK(inv.prec() == prec - 2 * low);
        const trunc_series one = s * inv;
        CHECK(agree(one, trunc_series::constant(coeff(1))));
        // The window is as wide as the input allows, and correct for any
        // completion of the input.
        const naive_poly oracle = lft::testing::naive_inverse(lft::testing::naive_from(full), inv.prec());
        CHECK(lft::testing::naive_equal_below(lft::testing::naive_from(inv), oracle, inv.prec()));
    }
}

TEST_CASE("property: compose agrees with brute-force substitution")
{
    generator g(104);
    for (int i = 0; i < 100; ++i) {
        const long flow = g.uniform(-2, 3);
        const long fprec = std::max(flow + 1, g.uniform(1, 8));
        const long glow = g.uniform(1, 2);
        const long gprec = glow + g.uniform(1, 8 - glow);
        const trunc_series f_full = exact_poly(g, flow, fprec + 3);
        const trunc_series g_full = exact_poly(g, glow, gprec + 3);
        const trunc_series f = f_full.truncated(fprec);
        const trunc_series h = g_full.truncated(gprec);
        const trunc_series r = compose(f, h);
        REQUIRE(r.prec() < kExact);
        const naive_poly oracle =
            lft::testing::naive_compose(lft::testing::naive_from(f_full), lft::testing::naive_from(g_full), r.prec());
        CHECK(lft::testing::naive_equal_below(lft::testing::naive_from(r), oracle, r.prec()));
        // Exact inputs need exact agreement with no truncation at all.
        if (flow >= 0) {
            const trunc_series exact = compose(f_full, g_full);
            CHECK(exact.is_exact());
            const long bound = exact.end();
            const naive_poly full_oracle = lft::testing::naive_compose(lft::testing::naive_from(f_full),
                                                                       lft::testing::naive_from(g_full), bound + 1);
            CHECK(lft::testing::naive_equal_below(lft::testing::naive_from(exact), full_oracle, bound + 1));
        }
    }
}

TEST_CASE("property: Leibniz rule")
{
    generator g(105);
    for (int i = 0; i < 100; ++i) {
        const long denom = g.uniform(1, 3);
        trunc_series a = g.series(g.uniform(-3, 2), g.uniform(3, 8));
        trunc_series b = g.series(g.uniform(-3, 2), g.uniform(3, 8));
        if (denom > 1) {
            a = trunc_series::from_coeffs(a.low(), a.coeffs(), a.prec(), denom);
            b = trunc_series::from_coeffs(b.low(), b.coeffs(), b.prec(), denom);
        }
        const trunc_series lhs = differentiate(a * b);
        const trunc_series rhs = differentiate(a) * b + a * differentiate(b);
        CHECK(agree(lhs, rhs));
        CHECK(lhs.prec() == rhs.prec());
    }
}

TEST_CASE("property: branch equivariance of solve_branch")
{
    generator g(106);
    for (long n = 2; n <= 4; ++n) {
        const backend b = backend::parse("cyclotomic:" + std::to_string(n));
        const coeff eps = *b.primitive_root_of_unity(static_cast<int>(n));
        for (int i = 0; i < 10; ++i) {
            const rational w0 = g.nonzero_rational(3, 2);
            const trunc_series u = exact_poly(g, 1, 8) + trunc_series::constant(coeff(pow(w0, n)));
            const trunc_series w = solve_branch(u, n, coeff(w0), 7);
            const trunc_series w2 = solve_branch(u, n, eps * coeff(w0), 7);
            // x2(Y) = x(eps Y), i.e. w2(Y) = eps w(eps Y).
            CHECK(w2 == scale_argument(w, eps).scaled(eps));
        }
    }
}
