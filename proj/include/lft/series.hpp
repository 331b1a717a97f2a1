#pragma once

#include <climits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <lft/coeff.hpp>

namespace lft
{

// Precision of a series whose support is known completely.
inline constexpr long kExact = LONG_MAX / 4;

// Saturating arithmetic on exponents: anything at or past kExact stays exact.
long exp_add(long a, long b) noexcept;
long exp_mul(long a, long b) noexcept;

// A truncated Puiseux series sum c_e X^(e/denom), known modulo X^(prec/denom).
// Exponents are integers in units of 1/denom. A nonzero series has a nonzero
// leading coefficient at low; the zero series has low == prec. Finite series
// store every coefficient in [low, prec); exact series store their support
// with trailing zeros trimmed.
class trunc_series
{
public:
    // The exact zero series.
    trunc_series() = default;

    static trunc_series zero(long prec = kExact, long denom = 1);
    static trunc_series constant(const coeff &c, long prec = kExact);
    static trunc_series monomial(const coeff &c, long exponent, long prec = kExact, long denom = 1);
    // Coefficients for exponents start, start+1, ...; leading zeros are
    // stripped and entries at or past prec are dropped.
    static trunc_series from_coeffs(long start, std::vector<coeff> coeffs, long prec = kExact, long denom = 1);

    long denom() const noexcept
    {
        return m_denom;
    }
    long low() const noexcept
    {
        return m_low;
    }
    long prec() const noexcept
    {
        return m_prec;
    }
    bool is_exact() const noexcept
    {
        return m_prec >= kExact;
    }
    bool is_zero() const noexcept
    {
        return m_coeffs.empty();
    }
    const std::vector<coeff> &coeffs() const noexcept
    {
        return m_coeffs;
    }
    // Throws precision_exhausted for exponents at or past prec.
    coeff at(long exponent) const;
    const coeff &leading() const;
    // One past the highest stored exponent.
    long end() const noexcept
    {
        return m_low + static_cast<long>(m_coeffs.size());
    }

    trunc_series truncated(long prec) const;
    // Multiplies every exponent and the denominator by factor.
    trunc_series rescaled(long factor) const;
    // Exact division of every exponent and the denominator by factor.
    trunc_series reduced(long factor) const;
    // Multiplication by X^(k/denom).
    trunc_series shifted(long k) const;
    trunc_series scaled(const coeff &c) const;

    trunc_series operator-() const;

    friend bool operator==(const trunc_series &lhs, const trunc_series &rhs);

    std::string to_string(const std::string &var = "X") const;

private:
    void normalize();

    long m_denom = 1;
    long m_low = kExact;
    long m_prec = kExact;
    std::vector<coeff> m_coeffs;
};

enum class series_op { add, mul };

trunc_series arith(const trunc_series &lhs, const trunc_series &rhs, series_op op);

inline trunc_series operator+(const trunc_series &lhs, const trunc_series &rhs)
{
    return arith(lhs, rhs, series_op::add);
}
inline trunc_series operator-(const trunc_series &lhs, const trunc_series &rhs)
{
    return arith(lhs, -rhs, series_op::add);
}
inline trunc_series operator*(const trunc_series &lhs, const trunc_series &rhs)
{
    return arith(lhs, rhs, series_op::mul);
}

// Multiplicative inverse keeping the relative precision. Exact inputs must be
// monomials.
trunc_series invert_unit(const trunc_series &s);

// d/dX on the uniformizer X^(1/denom).
trunc_series differentiate(const trunc_series &s);

// f(g) with f integral in X and g of positive order.
trunc_series compose(const trunc_series &f, const trunc_series &g);

trunc_series pow_series(const trunc_series &s, long e);

// f(c X) for an integral series f.
trunc_series scale_argument(const trunc_series &f, const coeff &c);

// The unit series w with w(0) = w0 and w(Y)^n = u(Y w(Y)), to precision
// min(prec, u.prec()).
trunc_series solve_branch(const trunc_series &u, long n, const coeff &w0, std::optional<long> prec = std::nullopt);

} // namespace lft
