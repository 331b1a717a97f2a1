#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <lft/connection.hpp>

namespace lft
{

enum class transform_kind { zero_to_inf, inf_to_zero, inf_to_inf };

std::string_view kind_name(transform_kind k) noexcept;
transform_kind parse_kind(std::string_view text);

// Everything one piece-level transform computes. With Y the new uniformizer
// the old one is Y * w(Y); beta is the new exponential factor (constant term
// dropped) and b(Y) = -(1/n) Y^(s+1) beta'(Y) its normalized symbol, obtained
// independently from w.
struct transform_result
{
    connection_piece output;
    coeff branch;
    trunc_series w;
    trunc_series beta;
    trunc_series b;
    long degree = 0;
    // b from w agrees with the symbol recomputed from beta.
    bool residual_ok = false;
};

// Checks the dispatch precondition and returns the degree n of the branch
// equation (r+s, r-s or s-r).
long branch_degree(const connection_piece &piece, transform_kind kind);

// The quantity an explicit branch must be an n-th root of: a_0 for zero to
// infinity, -a_0 otherwise.
coeff branch_target(const connection_piece &piece, transform_kind kind);

// The explicit branch after validation, or the backend's distinguished root.
coeff resolve_branch(const connection_piece &piece, transform_kind kind, const std::optional<coeff> &branch,
                     const backend &b);

transform_result transform_piece(const connection_piece &piece, transform_kind kind, long prec,
                                 const std::optional<coeff> &branch, const backend &b);

connection_piece lft_zero_to_inf(const connection_piece &piece, long prec, const std::optional<coeff> &branch,
                                  const backend &b);
connection_piece lft_inf_to_zero(const connection_piece &piece, long prec, const std::optional<coeff> &branch,
                                  const backend &b);
connection_piece lft_inf_to_inf(const connection_piece &piece, long prec, const std::optional<coeff> &branch,
                                 const backend &b);

struct connection_transform
{
    connection output;
    std::vector<transform_result> details;
};

connection_transform transform_connection(const connection &conn, transform_kind kind, long prec,
                                          const std::optional<coeff> &branch, const backend &b);

} // namespace lft
