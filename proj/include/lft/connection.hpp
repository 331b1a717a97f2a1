#pragma once

#include <string>
#include <vector>

#include <lft/backend.hpp>
#include <lft/series.hpp>

namespace lft
{

enum class point { zero, infinity };

std::string_view point_name(point p) noexcept;

struct regular_block
{
    coeff c;
    long size = 1;

    friend bool operator==(const regular_block &, const regular_block &) = default;
};

// [ram]_*([T d/dT (alpha)] (x) R) with T the local uniformizer at the point
// (t^(1/ram) at zero, t^(-1/ram) at infinity).
struct connection_piece
{
    point at = point::zero;
    long ram = 1;
    trunc_series alpha;
    std::vector<regular_block> regular;

    // Pole order of alpha, zero for a purely regular piece.
    long pole_order() const;
    long regular_dim() const;

    friend bool operator==(const connection_piece &, const connection_piece &) = default;
};

struct connection
{
    std::vector<connection_piece> pieces;

    friend bool operator==(const connection &, const connection &) = default;
};

struct piece_invariants
{
    rational slope;
    long irregularity = 0;
    long rank = 0;
};

piece_invariants invariants(const connection_piece &piece);

// a_0..a_s of a(X) = -(1/r) X^(s+1) alpha'(X) - (c/r) X^s, the normalized
// symbol of the exponential factor twisted by the eigenvalue c.
std::vector<coeff> symbol_coefficients(const trunc_series &alpha, long ram, const coeff &c = coeff());

// The exact polar part of alpha: exponents -s..-1.
trunc_series polar_part(const trunc_series &alpha);

// True when the Galois orbit T -> eta T can be searched inside the backend.
bool galois_normalizable(const connection_piece &piece, const backend &b);

connection_piece canonicalize(const connection_piece &piece, const backend &b);
connection canonicalize(const connection &conn, const backend &b);

long stabilizer_order(const connection_piece &piece);
// Stabilizer order 1 and a one-dimensional regular part; a regular piece is
// irreducible only in rank one.
bool is_irreducible(const connection_piece &piece);

std::vector<connection_piece> descend_ramification(const connection_piece &piece);

std::vector<regular_block> pushforward_regular(long d, const std::vector<regular_block> &regular);

// Pullback along t -> -t: alpha_j -> zeta^j alpha_j with zeta^ram = -1.
connection_piece pullback_negation(const connection_piece &piece, const backend &b);

} // namespace lft
