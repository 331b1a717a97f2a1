#include <doctest.h>

#include <functional>

#include <lft/error.hpp>
#include <lft/oracle.hpp>

#include "support.hpp"

using namespace lft;
using lft::testing::generator;
using lft::testing::q;

namespace
{

const backend rat = backend::rational_field();

connection_piece piece_at(point at, long ram, std::vector<rational> polar, coeff c = coeff())
{
    connection_piece p;
    p.at = at;
    p.ram = ram;
    std::vector<coeff> v(polar.begin(), polar.end());
    p.alpha = trunc_series::from_coeffs(-static_cast<long>(polar.size()), std::move(v));
    p.regular.push_back({std::move(c), 1});
    return p;
}

error_code code_of(const std::function<void()> &fn)
{
    try {
        fn();
    } catch (const error &e) {
        return e.code();
    }
    FAIL("no error raised");
    return error_code::invalid_argument;
}

} // namespace

TEST_CASE("kind names")
{
    CHECK(parse_kind("0-inf") == transform_kind::zero_to_inf);
    CHECK(parse_kind("inf-0") == transform_kind::inf_to_zero);
    CHECK(parse_kind("inf-inf") == transform_kind::inf_to_inf);
    CHECK(kind_name(transform_kind::inf_to_inf) == "inf-inf");
    CHECK(code_of([] { parse_kind("0-0"); }) == error_code::parse_error);
}

TEST_CASE("zero to infinity: worked example")
{
    const connection_piece in = piece_at(point::zero, 1, {4});
    const transform_result res = transform_piece(in, transform_kind::zero_to_inf, 8, coeff(2), rat);
    CHECK(res.output == piece_at(point::infinity, 2, {4}, coeff(q(1, 2))));
    CHECK(res.degree == 2);
    CHECK(res.residual_ok);
    CHECK(res.b.at(0) == coeff(2));
    for (long i = 1; i < 8; ++i) {
        CHECK(res.b.at(i) == coeff());
    }
    CHECK(lft_zero_to_inf(in, 8, std::nullopt, rat) == res.output);
}

TEST_CASE("zero to infinity: r=1, s=2")
{
    const connection_piece in = piece_at(point::zero, 1, {4, 0});
    const transform_result res = transform_piece(in, transform_kind::zero_to_inf, 6, coeff(2), rat);
    CHECK(res.output.at == point::infinity);
    CHECK(res.output.ram == 3);
    CHECK(res.output.pole_order() == 2);
    CHECK(res.b.at(0) == coeff(2));
    CHECK(res.w.at(0) == coeff(2));
    CHECK(res.output.regular.front().c == coeff(0));
    CHECK(res.residual_ok);
}

TEST_CASE("infinity to zero: r=2, s=1")
{
    const connection_piece in = piece_at(point::infinity, 2, {1});
    const auto a = symbol_coefficients(in.alpha, 2);
    CHECK(a.front() == coeff(q(1, 2)));
    const transform_result res = transform_piece(in, transform_kind::inf_to_zero, 7, coeff(q(-1, 2)), rat);
    CHECK(res.output.at == point::zero);
    CHECK(res.output.ram == 1);
    CHECK(res.output.pole_order() == 1);
    CHECK(res.b.at(0) == coeff(q(-1, 4)));
    CHECK(res.residual_ok);
    const trunc_series oracle = oracle_b_series(transform_kind::inf_to_zero, 2, 1, a, coeff(q(-1, 2)), 7);
    CHECK(oracle == res.b.truncated(7));
    CHECK(verify_piece(transform_kind::inf_to_zero, in, res.output, 7, coeff(q(-1, 2)), rat).passed());
}

TEST_CASE("infinity to infinity: r=1, s=2")
{
    const connection_piece in = piece_at(point::infinity, 1, {1, 0});
    const transform_result res = transform_piece(in, transform_kind::inf_to_inf, 7, std::nullopt, rat);
    CHECK(res.branch == coeff(-2));
    CHECK(res.output.at == point::infinity);
    CHECK(res.output.ram == 1);
    CHECK(res.output.pole_order() == 2);
    CHECK(res.b.at(0) == coeff(q(-1, 2)));
    CHECK(res.residual_ok);
    CHECK(verify_piece(transform_kind::inf_to_inf, in, res.output, 7, std::nullopt, rat).passed());
}

TEST_CASE("dispatch and branch errors")
{
    CHECK(code_of([] { transform_piece(piece_at(point::zero, 1, {}), transform_kind::zero_to_inf, 4, {}, rat); })
          == error_code::regular_piece);
    CHECK(code_of([] { transform_piece(piece_at(point::infinity, 2, {1, 1}), transform_kind::inf_to_inf, 4, {}, rat); })
          == error_code::unsupported_case);
    CHECK(code_of([] { transform_piece(piece_at(point::infinity, 1, {4}), transform_kind::zero_to_inf, 4, {}, rat); })
          == error_code::invalid_argument);
    CHECK(code_of([] { transform_piece(piece_at(point::infinity, 1, {1, 1}), transform_kind::inf_to_zero, 4, {}, rat); })
          == error_code::invalid_argument);
    CHECK(code_of([] { transform_piece(piece_at(point::zero, 1, {4}), transform_kind::zero_to_inf, 4, coeff(3), rat); })
          == error_code::invalid_branch);
    CHECK(code_of([] { transform_piece(piece_at(point::zero, 1, {3}), transform_kind::zero_to_inf, 4, {}, rat); })
          == error_code::missing_root);
    CHECK(code_of([] { transform_piece(piece_at(point::zero, 1, {4, 1}), transform_kind::zero_to_inf, 2, {}, rat); })
          == error_code::invalid_argument);
    const backend cyc = backend::parse("cyclotomic:4");
    CHECK(code_of([&] {
              transform_piece(piece_at(point::zero, 1, {4}), transform_kind::zero_to_inf, 4, cyc.zeta(), rat);
          })
          == error_code::ring_mismatch);
    // The other square root is a valid branch.
    CHECK_NOTHROW(transform_piece(piece_at(point::zero, 1, {4}), transform_kind::zero_to_inf, 4, coeff(-2), rat));
    // sqrt(3) becomes available with a radical.
    const backend rad = backend::parse("ext:1,2,3");
    const auto res = transform_piece(piece_at(point::zero, 1, {3}), transform_kind::zero_to_inf, 5, {}, rad);
    CHECK(res.residual_ok);
    CHECK(res.b.at(0) == rad.radical());
}

TEST_CASE("property: residual identity and bookkeeping")
{
    generator g(301);
    for (int i = 0; i < 60; ++i) {
        const auto kind = static_cast<transform_kind>(i % 3);
        long r = g.uniform(1, 4), s = g.uniform(1, 4);
        if (kind == transform_kind::inf_to_zero && r <= s) {
            r = s + g.uniform(1, 2);
        }
        if (kind == transform_kind::inf_to_inf && s <= r) {
            s = r + g.uniform(1, 2);
        }
        const auto inst = lft::testing::rational_instance(g, kind, r, s, false, g.uniform(1, 2));
        const transform_result res = transform_piece(inst.piece, kind, s + 4, inst.branch, rat);
        CHECK(res.residual_ok);
        CHECK(res.beta.low() == -s);
        // The exponential factor alone has a_s = 0, so b_s = 0.
        CHECK(res.b.at(s).is_zero());
        const auto in = invariants(inst.piece);
        const auto out = invariants(res.output);
        CHECK(out.slope == q(s, res.degree));
        CHECK(out.rank == res.degree * inst.piece.regular_dim());
        CHECK(out.irregularity == in.irregularity);
        REQUIRE(res.output.regular.size() == inst.piece.regular.size());
        // Eigenvalues move by s/2.
        connection_piece shifted = inst.piece;
        for (auto &blk : shifted.regular) {
            blk.c += coeff(q(s, 2));
        }
        shifted.alpha = res.output.alpha;
        shifted.at = res.output.at;
        shifted.ram = res.output.ram;
        CHECK(canonicalize(shifted, rat) == res.output);
    }
}

TEST_CASE("transform_connection")
{
    connection empty;
    CHECK(transform_connection(empty, transform_kind::zero_to_inf, 4, {}, rat).output.pieces.empty());

    connection two;
    two.pieces.push_back(piece_at(point::zero, 1, {4}));
    two.pieces.push_back(piece_at(point::zero, 2, {16, 0}));
    two.pieces.back().regular.push_back({coeff(q(1, 3)), 2});
    const auto out = transform_connection(two, transform_kind::zero_to_inf, 5, {}, rat);
    REQUIRE(out.output.pieces.size() == 2);
    CHECK(invariants(out.output.pieces[0]).rank == 2);
    CHECK(invariants(out.output.pieces[1]).rank == 4 * 3);
    CHECK(out.output.pieces[0] == lft_zero_to_inf(two.pieces[0], 5, {}, rat));

    connection bad = two;
    bad.pieces.push_back(piece_at(point::zero, 1, {3}));
    try {
        transform_connection(bad, transform_kind::zero_to_inf, 5, {}, rat);
        FAIL("expected an error");
    } catch (const error &e) {
        CHECK(e.code() == error_code::missing_root);
        CHECK(std::string(e.what()).rfind("piece 2: ", 0) == 0);
    }
}
