#pragma once

#include <optional>
#include <vector>

#include <lft/series.hpp>

namespace lft
{

using vec = std::vector<coeff>;

coeff dot(const vec &lhs, const vec &rhs);
bool is_zero(const vec &v);

// Dense matrix over coefficients, row-major.
class matrix
{
public:
    matrix() = default;
    matrix(std::size_t rows, std::size_t cols) : m_rows(rows), m_cols(cols), m_data(rows * cols) {}

    static matrix identity(std::size_t n);
    static matrix diagonal(const vec &d);

    std::size_t rows() const noexcept
    {
        return m_rows;
    }
    std::size_t cols() const noexcept
    {
        return m_cols;
    }
    coeff &operator()(std::size_t i, std::size_t j)
    {
        return m_data[i * m_cols + j];
    }
    const coeff &operator()(std::size_t i, std::size_t j) const
    {
        return m_data[i * m_cols + j];
    }

    bool is_zero() const;
    matrix transposed() const;
    matrix scaled(const coeff &c) const;
    coeff trace() const;

    matrix &operator+=(const matrix &other);
    matrix &operator-=(const matrix &other);

    friend matrix operator+(matrix lhs, const matrix &rhs)
    {
        lhs += rhs;
        return lhs;
    }
    friend matrix operator-(matrix lhs, const matrix &rhs)
    {
        lhs -= rhs;
        return lhs;
    }
    friend matrix operator*(const matrix &lhs, const matrix &rhs);
    friend vec operator*(const matrix &m, const vec &v);
    friend vec operator*(const vec &v, const matrix &m);
    friend bool operator==(const matrix &, const matrix &) = default;

private:
    std::size_t m_rows = 0;
    std::size_t m_cols = 0;
    std::vector<coeff> m_data;
};

// Basis of the right kernel from the reduced row echelon form: one vector per
// free column, with that column set to 1 and the other free columns to 0.
// Pivots must be units of the coefficient ring.
std::vector<vec> nullspace(const matrix &m);

// A solution of m x = rhs with every free column set to 0.
std::optional<vec> solve(const matrix &m, const vec &rhs);

// Characteristic polynomial det(lambda - m), constant term first.
vec char_poly(const matrix &m);

vec poly_derivative(const vec &p);
coeff poly_eval(const vec &p, const coeff &x);

// A square matrix of power or Laurent series in one variable with a shared
// precision, stored by coefficient matrices: terms[k] multiplies X^(low+k).
class series_matrix
{
public:
    series_matrix() = default;
    explicit series_matrix(std::size_t dim, long prec = kExact);

    static series_matrix constant(const matrix &m, long prec = kExact);
    static series_matrix from_terms(long low, std::vector<matrix> terms, long prec = kExact);

    std::size_t dim() const noexcept
    {
        return m_dim;
    }
    long low() const noexcept
    {
        return m_low;
    }
    long prec() const noexcept
    {
        return m_prec;
    }
    // One past the highest stored exponent.
    long end() const noexcept
    {
        return m_low + static_cast<long>(m_terms.size());
    }

    // The coefficient matrix of X^e; throws past the precision.
    matrix coefficient(long e) const;
    trunc_series entry(std::size_t i, std::size_t j) const;
    void add_to_entry(std::size_t i, std::size_t j, long e, const coeff &c);

    series_matrix truncated(long prec) const;
    // Multiplies entry (i, j) by X^(shift[j] - shift[i]).
    series_matrix conjugated_by_powers(const std::vector<long> &shift) const;
    series_matrix shifted(long k) const;
    series_matrix scaled(const coeff &c) const;
    series_matrix pow(long e) const;
    coeff trace_coefficient(long e) const;

    friend series_matrix operator+(const series_matrix &lhs, const series_matrix &rhs);
    friend series_matrix operator-(const series_matrix &lhs, const series_matrix &rhs);
    friend series_matrix operator*(const series_matrix &lhs, const series_matrix &rhs);
    // Equality of every coefficient below the smaller precision.
    friend bool agree(const series_matrix &lhs, const series_matrix &rhs);

private:
    void trim();

    std::size_t m_dim = 0;
    long m_low = 0;
    long m_prec = kExact;
    std::vector<matrix> m_terms;
};

// Characteristic polynomial of a series matrix; coefficient k is the series
// multiplying lambda^k.
std::vector<trunc_series> char_poly(const series_matrix &m);

trunc_series poly_eval(const std::vector<trunc_series> &p, const trunc_series &x);

} // namespace lft
