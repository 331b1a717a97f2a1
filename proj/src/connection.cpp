#include <lft/connection.hpp>
#include <lft/error.hpp>

#include <algorithm>
#include <numeric>

namespace lft
{

std::string_view point_name(point p) noexcept
{
    return p == point::zero ? "zero" : "infinity";
}

long connection_piece::pole_order() const
{
    if (alpha.is_zero()) {
        return 0;
    }
    return std::max(0L, -alpha.low());
}

long connection_piece::regular_dim() const
{
    long d = 0;
    for (const auto &b : regular) {
        d += b.size;
    }
    return d;
}

piece_invariants invariants(const connection_piece &piece)
{
    const long s = piece.pole_order();
    const long dim = piece.regular_dim();
    return {ratio(s, piece.ram), s * dim, piece.ram * dim};
}

std::vector<coeff> symbol_coefficients(const trunc_series &alpha, long ram, const coeff &c)
{
    if (alpha.denom() != 1) {
        throw error(error_code::invalid_argument, "exponential factor must be integral in its uniformizer");
    }
    const long s = alpha.is_zero() ? 0 : std::max(0L, -alpha.low());
    if (s == 0) {
        throw error(error_code::regular_piece, "piece has no exponential factor");
    }
    std::vector<coeff> a(static_cast<std::size_t>(s + 1));
    for (long i = 0; i < s; ++i) {
        a[static_cast<std::size_t>(i)] = alpha.at(i - s) * coeff(ratio(s - i, ram));
    }
    a[static_cast<std::size_t>(s)] = -(c * coeff(ratio(1, ram)));
    return a;
}

trunc_series polar_part(const trunc_series &alpha)
{
    if (alpha.is_zero() || alpha.low() >= 0) {
        return trunc_series::zero(kExact, alpha.denom());
    }
    if (alpha.prec() < 0) {
        throw error(error_code::precision_exhausted, "polar part of alpha is not fully known");
    }
    std::vector<coeff> c;
    for (long e = alpha.low(); e < 0; ++e) {
        c.push_back(alpha.at(e));
    }
    return trunc_series::from_coeffs(alpha.low(), std::move(c), kExact, alpha.denom());
}

bool galois_normalizable(const connection_piece &piece, const backend &b)
{
    return piece.ram <= 2 || b.primitive_root_of_unity(static_cast<int>(piece.ram)).has_value();
}

namespace
{

std::vector<coeff> polar_vector(const trunc_series &polar, long s)
{
    std::vector<coeff> v;
    for (long j = -s; j < 0; ++j) {
        v.push_back(polar.at(j));
    }
    return v;
}

// Component by component: smaller magnitude first, then a positive value
// before its negative.
std::strong_ordering canonical_order(const coeff &x, const coeff &y)
{
    auto cx = x.components();
    auto cy = y.components();
    const auto n = std::max(cx.size(), cy.size());
    cx.resize(n);
    cy.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int mag = cmp(abs(cx[i]), abs(cy[i]));
        if (mag != 0) {
            return mag < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        const int sx = sgn(cx[i]);
        const int sy = sgn(cy[i]);
        if (sx != sy) {
            return sx > sy ? std::strong_ordering::less : std::strong_ordering::greater;
        }
    }
    return std::strong_ordering::equal;
}

} // namespace

connection_piece canonicalize(const connection_piece &piece, const backend &b)
{
    connection_piece out = piece;
    out.alpha = polar_part(piece.alpha);
    for (auto &blk : out.regular) {
        blk.c = blk.c.with_rational_part(fractional_part(blk.c.rational_part()));
    }
    std::sort(out.regular.begin(), out.regular.end(), [](const regular_block &x, const regular_block &y) {
        if (auto cmp = x.c <=> y.c; cmp != 0) {
            return cmp < 0;
        }
        return x.size < y.size;
    });
    const long s = out.pole_order();
    if (s == 0 || out.ram == 1) {
        return out;
    }
    const auto eta = b.primitive_root_of_unity(static_cast<int>(out.ram));
    if (!eta) {
        return out;
    }
    auto best = polar_vector(out.alpha, s);
    trunc_series best_alpha = out.alpha;
    coeff eta_k(1);
    for (long k = 1; k < out.ram; ++k) {
        eta_k *= *eta;
        trunc_series candidate = scale_argument(out.alpha, eta_k);
        auto v = polar_vector(candidate, s);
        if (std::lexicographical_compare_three_way(v.begin(), v.end(), best.begin(), best.end(), canonical_order)
            < 0) {
            best = std::move(v);
            best_alpha = std::move(candidate);
        }
    }
    out.alpha = std::move(best_alpha);
    return out;
}

connection canonicalize(const connection &conn, const backend &b)
{
    connection out;
    for (const auto &p : conn.pieces) {
        out.pieces.push_back(canonicalize(p, b));
    }
    return out;
}

long stabilizer_order(const connection_piece &piece)
{
    const long s = piece.pole_order();
    if (s == 0) {
        throw error(error_code::regular_piece, "stabilizer order is undefined for a regular piece");
    }
    long g = piece.ram;
    for (long j = -s; j < 0; ++j) {
        if (!piece.alpha.at(j).is_zero()) {
            g = std::gcd(g, -j);
        }
    }
    return g;
}

bool is_irreducible(const connection_piece &piece)
{
    if (piece.regular_dim() != 1) {
        return false;
    }
    return piece.pole_order() == 0 ? piece.ram == 1 : stabilizer_order(piece) == 1;
}

std::vector<regular_block> pushforward_regular(long d, const std::vector<regular_block> &regular)
{
    if (d < 1) {
        throw error(error_code::invalid_argument, "pushforward degree must be positive");
    }
    if (d == 1) {
        return regular;
    }
    std::vector<regular_block> out;
    for (const auto &blk : regular) {
        for (long i = 1; i <= d; ++i) {
            out.push_back({blk.c + coeff(ratio(i, d)), blk.size});
        }
    }
    return out;
}

std::vector<connection_piece> descend_ramification(const connection_piece &piece)
{
    if (piece.pole_order() == 0) {
        return {piece};
    }
    const long p = stabilizer_order(piece);
    if (p == 1) {
        return {piece};
    }
    // In tau = T^p the factor becomes [p]_* of a ramification r/p piece, and
    // T d/dT = p tau d/dtau divides the eigenvalues by p before the split.
    const trunc_series polar = polar_part(piece.alpha);
    const trunc_series alpha =
        trunc_series::from_coeffs(polar.low(), polar.coeffs(), kExact, p).reduced(p);
    std::vector<connection_piece> out;
    for (long j = 1; j <= p; ++j) {
        connection_piece q;
        q.at = piece.at;
        q.ram = piece.ram / p;
        q.alpha = alpha;
        for (const auto &blk : piece.regular) {
            q.regular.push_back({(blk.c + coeff(j)) * coeff(ratio(1, p)), blk.size});
        }
        out.push_back(std::move(q));
    }
    return out;
}

connection_piece pullback_negation(const connection_piece &piece, const backend &b)
{
    const auto zeta = b.root_of_minus_one(static_cast<int>(piece.ram));
    if (!zeta) {
        throw error(error_code::missing_root,
                    "backend " + b.spec() + " has no root of -1 of degree " + std::to_string(piece.ram));
    }
    connection_piece out = piece;
    out.alpha = scale_argument(piece.alpha, *zeta);
    return out;
}

} // namespace lft
