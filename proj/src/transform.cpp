#include <lft/error.hpp>
#include <lft/transform.hpp>

namespace lft
{

std::string_view kind_name(transform_kind k) noexcept
{
    switch (k) {
    case transform_kind::zero_to_inf:
        return "0-inf";
    case transform_kind::inf_to_zero:
        return "inf-0";
    case transform_kind::inf_to_inf:
        return "inf-inf";
    }
    return "?";
}

transform_kind parse_kind(std::string_view text)
{
    if (text == "0-inf") {
        return transform_kind::zero_to_inf;
    }
    if (text == "inf-0") {
        return transform_kind::inf_to_zero;
    }
    if (text == "inf-inf") {
        return transform_kind::inf_to_inf;
    }
    throw error(error_code::parse_error, "unknown transform kind '" + std::string(text) + "'");
}

long branch_degree(const connection_piece &piece, transform_kind kind)
{
    const long r = piece.ram;
    const long s = piece.pole_order();
    if (r < 1) {
        throw error(error_code::invalid_argument, "ramification must be positive");
    }
    if (s == 0) {
        throw error(error_code::regular_piece, "regular pieces have no local Fourier transform here");
    }
    switch (kind) {
    case transform_kind::zero_to_inf:
        if (piece.at != point::zero) {
            throw error(error_code::invalid_argument, "0-inf needs a piece at zero");
        }
        return r + s;
    case transform_kind::inf_to_zero:
        if (piece.at != point::infinity) {
            throw error(error_code::invalid_argument, "inf-0 needs a piece at infinity");
        }
        if (r == s) {
            throw error(error_code::unsupported_case, "ramification equal to pole order is not supported");
        }
        if (r < s) {
            throw error(error_code::invalid_argument, "inf-0 needs ramification above pole order");
        }
        return r - s;
    case transform_kind::inf_to_inf:
        if (piece.at != point::infinity) {
            throw error(error_code::invalid_argument, "inf-inf needs a piece at infinity");
        }
        if (r == s) {
            throw error(error_code::unsupported_case, "ramification equal to pole order is not supported");
        }
        if (s < r) {
            throw error(error_code::invalid_argument, "inf-inf needs pole order above ramification");
        }
        return s - r;
    }
    throw error(error_code::invalid_argument, "bad transform kind");
}

coeff branch_target(const connection_piece &piece, transform_kind kind)
{
    const coeff a0 = symbol_coefficients(piece.alpha, piece.ram).front();
    return kind == transform_kind::zero_to_inf ? a0 : -a0;
}

coeff resolve_branch(const connection_piece &piece, transform_kind kind, const std::optional<coeff> &branch,
                     const backend &b)
{
    const long n = branch_degree(piece, kind);
    const coeff target = branch_target(piece, kind);
    if (branch) {
        if (!b.contains(*branch)) {
            throw error(error_code::ring_mismatch, "branch does not lie in backend " + b.spec());
        }
        if (branch->pow(n) != target) {
            throw error(error_code::invalid_branch,
                        "branch " + branch->to_string() + " is not a root of degree " + std::to_string(n) + " of "
                            + target.to_string());
        }
        return *branch;
    }
    auto root = b.nth_root(target, static_cast<int>(n));
    if (!root) {
        throw error(error_code::missing_root, "no root of degree " + std::to_string(n) + " of " + target.to_string()
                                                  + " in backend " + b.spec());
    }
    return *root;
}

transform_result transform_piece(const connection_piece &piece, transform_kind kind, long prec,
                                 const std::optional<coeff> &branch, const backend &b)
{
    const long n = branch_degree(piece, kind);
    const long r = piece.ram;
    const long s = piece.pole_order();
    if (prec < s + 1) {
        throw error(error_code::invalid_argument,
                    "precision " + std::to_string(prec) + " is below the floor " + std::to_string(s + 1));
    }
    const trunc_series alpha = polar_part(piece.alpha);
    const auto a = symbol_coefficients(alpha, r);

    const coeff user_branch = resolve_branch(piece, kind, branch, b);

    // a(X) as an exact polynomial; a_s vanishes for the exponential factor alone.
    std::vector<coeff> a_poly(a.begin(), a.end() - 1);
    const trunc_series a_series = trunc_series::from_coeffs(0, a_poly);

    trunc_series u;
    coeff w0 = user_branch;
    switch (kind) {
    case transform_kind::zero_to_inf:
        u = a_series;
        break;
    case transform_kind::inf_to_zero:
        u = -invert_unit(a_series.truncated(prec));
        w0 = user_branch.inverse();
        break;
    case transform_kind::inf_to_inf:
        u = -a_series;
        break;
    }

    transform_result res;
    res.degree = n;
    res.branch = user_branch;
    res.w = solve_branch(u, n, w0, prec);

    const trunc_series old_uniformizer = res.w.shifted(1);
    const long sign = kind == transform_kind::zero_to_inf ? 1 : -1;
    const trunc_series w_r = pow_series(res.w, sign * r);
    trunc_series beta = compose(alpha, old_uniformizer) + w_r.shifted(-s);
    // The constant term only shifts eigenvalues by an integer multiple.
    beta = beta - trunc_series::constant(beta.at(0));
    res.beta = beta;

    res.b = kind == transform_kind::inf_to_zero ? -w_r : w_r;
    const trunc_series from_beta = differentiate(beta).shifted(s + 1).scaled(coeff(ratio(-1, n)));
    res.residual_ok = from_beta.truncated(prec) == res.b.truncated(prec) && from_beta.prec() >= prec;

    connection_piece out;
    out.at = kind == transform_kind::inf_to_zero ? point::zero : point::infinity;
    out.ram = n;
    out.alpha = beta;
    for (const auto &blk : piece.regular) {
        out.regular.push_back({blk.c + coeff(ratio(s, 2)), blk.size});
    }
    res.output = canonicalize(out, b);
    return res;
}

connection_piece lft_zero_to_inf(const connection_piece &piece, long prec, const std::optional<coeff> &branch,
                                  const backend &b)
{
    return transform_piece(piece, transform_kind::zero_to_inf, prec, branch, b).output;
}

connection_piece lft_inf_to_zero(const connection_piece &piece, long prec, const std::optional<coeff> &branch,
                                  const backend &b)
{
    return transform_piece(piece, transform_kind::inf_to_zero, prec, branch, b).output;
}

connection_piece lft_inf_to_inf(const connection_piece &piece, long prec, const std::optional<coeff> &branch,
                                 const backend &b)
{
    return transform_piece(piece, transform_kind::inf_to_inf, prec, branch, b).output;
}

connection_transform transform_connection(const connection &conn, transform_kind kind, long prec,
                                          const std::optional<coeff> &branch, const backend &b)
{
    connection_transform out;
    for (std::size_t i = 0; i < conn.pieces.size(); ++i) {
        try {
            auto res = transform_piece(conn.pieces[i], kind, prec, branch, b);
            out.output.pieces.push_back(res.output);
            out.details.push_back(std::move(res));
        } catch (const error &e) {
            throw error(e.code(), "piece " + std::to_string(i) + ": " + e.what());
        }
    }
    return out;
}

} // namespace lft
