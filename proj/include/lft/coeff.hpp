#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <lft/rational.hpp>

namespace lft
{

// The quotient ring Q(zeta_N)[x] / (x^m - a), with zeta_N a primitive N-th
// root of unity and a a nonzero rational. Elements are stored on the basis
// zeta^i x^j (0 <= i < phi(N), 0 <= j < m) at flat index j * phi(N) + i.
// The ring is a field only when x^m - a stays irreducible over Q(zeta_N);
// division by a zero divisor is reported, never resolved.
class extension_ring
{
public:
    extension_ring(int order, int radical_degree, rational radicand);

    int order() const noexcept
    {
        return m_order;
    }
    int radical_degree() const noexcept
    {
        return m_radical_degree;
    }
    const rational &radicand() const noexcept
    {
        return m_radicand;
    }
    int cyclotomic_degree() const noexcept
    {
        return m_phi;
    }
    int dim() const noexcept
    {
        return m_phi * m_radical_degree;
    }
    // Coefficients of the N-th cyclotomic polynomial, constant term first.
    const std::vector<integer> &cyclotomic() const noexcept
    {
        return m_cyclotomic;
    }

    bool same_as(const extension_ring &other) const noexcept;

    std::vector<rational> multiply(const std::vector<rational> &lhs, const std::vector<rational> &rhs) const;
    std::optional<std::vector<rational>> inverse(const std::vector<rational> &value) const;

    std::vector<rational> zeta() const;
    std::vector<rational> radical() const;

private:
    int m_order;
    int m_radical_degree;
    rational m_radicand;
    int m_phi;
    std::vector<integer> m_cyclotomic;
};

std::vector<integer> cyclotomic_polynomial(int n);

using ring_ptr = std::shared_ptr<const extension_ring>;

// An element of Q or of an extension_ring. Rational elements carry no ring
// and combine with elements of any ring by promotion.
class coeff
{
public:
    coeff() = default;
    coeff(int v) : m_q(v) {}
    coeff(long v) : m_q(v) {}
    coeff(rational q) : m_q(std::move(q)) {}
    coeff(ring_ptr ring, std::vector<rational> components);

    const ring_ptr &ring() const noexcept
    {
        return m_ring;
    }

    bool is_zero() const;
    bool is_rational() const;
    // Throws when the element is not in Q.
    rational rational_value() const;
    // The coefficient on the basis element 1.
    rational rational_part() const;
    coeff with_rational_part(const rational &q) const;
    // Components on the ring basis; a rational element yields a single entry.
    std::vector<rational> components() const;

    coeff &operator+=(const coeff &other);
    coeff &operator-=(const coeff &other);
    coeff &operator*=(const coeff &other);
    coeff operator-() const;

    friend coeff operator+(coeff lhs, const coeff &rhs)
    {
        lhs += rhs;
        return lhs;
    }
    friend coeff operator-(coeff lhs, const coeff &rhs)
    {
        lhs -= rhs;
        return lhs;
    }
    friend coeff operator*(coeff lhs, const coeff &rhs)
    {
        lhs *= rhs;
        return lhs;
    }
    friend coeff operator/(const coeff &lhs, const coeff &rhs)
    {
        return lhs * rhs.inverse();
    }

    std::optional<coeff> try_inverse() const;
    coeff inverse() const;
    coeff pow(long e) const;

    friend bool operator==(const coeff &lhs, const coeff &rhs);
    // Lexicographic order on basis components; used for deterministic tie-breaks.
    friend std::strong_ordering operator<=>(const coeff &lhs, const coeff &rhs);

    // Reduced polynomial form in the generators z (root of unity) and x (radical).
    std::string to_string() const;

private:
    std::vector<rational> promoted(const ring_ptr &ring) const;
    void adopt_ring(const ring_ptr &ring);

    ring_ptr m_ring;
    rational m_q;
    std::vector<rational> m_v;
};

ring_ptr common_ring(const ring_ptr &a, const ring_ptr &b);

} // namespace lft
